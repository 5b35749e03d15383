#include "spinc/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "spinc/error.hpp"

namespace spinc {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) fail(ErrorCode::InvalidInput, "negative vertex " + std::to_string(vertices_[i]));
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      fail(ErrorCode::InvalidInput, "repeated vertex " + std::to_string(vertices_[i]));
  }
}

Simplex Simplex::face(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i) out.push_back(vertices_[j]);
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::slice(std::size_t first, std::size_t count) const {
  auto begin = vertices_.begin() + static_cast<std::ptrdiff_t>(first);
  return Simplex(Trusted{}, std::vector<Vertex>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s.vertices()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SimplicialComplex SimplicialComplex::from_simplices(std::span<const Simplex> simplices) {
  std::vector<std::set<Simplex>> levels;
  // Close under faces from the top down.
  for (const auto& s : simplices) {
    if (s.size() == 0) continue;
    const auto d = static_cast<std::size_t>(s.dimension());
    if (levels.size() <= d) levels.resize(d + 1);
    levels[d].insert(s);
  }
  for (std::size_t d = levels.size(); d-- > 1;)
    for (const auto& s : levels[d])
      for (std::size_t i = 0; i < s.size(); ++i) levels[d - 1].insert(s.face(i));

  SimplicialComplex k;
  k.by_dim_.resize(levels.size());
  for (std::size_t d = 0; d < levels.size(); ++d) {
    Level& level = k.by_dim_[d];
    level.simplices.assign(levels[d].begin(), levels[d].end());
    level.index.reserve(level.simplices.size());
    for (std::size_t i = 0; i < level.simplices.size(); ++i) level.index.emplace(level.simplices[i], i);
    if (d == 0) continue;
    level.faces.reserve(level.simplices.size() * (d + 1));
    const Level& below = k.by_dim_[d - 1];
    for (const auto& s : level.simplices)
      for (std::size_t i = 0; i <= d; ++i) level.faces.push_back(below.index.at(s.face(i)));
  }
  return k;
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > dim()) return 0;
  return by_dim_[static_cast<std::size_t>(k)].simplices.size();
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.simplices.size();
  return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : by_dim_) f.push_back(level.simplices.size());
  return f;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dim()) return none;
  return by_dim_[static_cast<std::size_t>(k)].simplices;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int k = s.dimension();
  if (k < 0 || k > dim()) return std::nullopt;
  const auto& index = by_dim_[static_cast<std::size_t>(k)].index;
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> SimplicialComplex::face_indices(int k, std::size_t i) const {
  if (k < 1 || k > dim()) fail(ErrorCode::OutOfRange, "face_indices: degree out of range");
  const auto& faces = by_dim_[static_cast<std::size_t>(k)].faces;
  const auto width = static_cast<std::size_t>(k) + 1;
  return std::span<const std::size_t>(faces.data() + i * width, width);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(0)) out.push_back(s[0]);
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dim(); ++k) {
    std::vector<bool> covered(count(k), false);
    if (k < dim())
      for (std::size_t j = 0; j < count(k + 1); ++j)
        for (std::size_t f : face_indices(k + 1, j)) covered[f] = true;
    for (std::size_t i = 0; i < count(k); ++i)
      if (!covered[i]) out.push_back(simplex(k, i));
  }
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<Simplex> top;
  for (int d = 0; d <= std::min(k, dim()); ++d)
    for (const auto& s : simplices(d)) top.push_back(s);
  return from_simplices(top);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (int k = 0; k <= dim(); ++k)
    for (const auto& s : simplices(k))
      if (!other.contains(s)) return false;
  return true;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& s : maximal_simplices())
    if (s.dimension() != dim()) return false;
  return true;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.by_dim_.size() != b.by_dim_.size()) return false;
  for (std::size_t d = 0; d < a.by_dim_.size(); ++d)
    if (a.by_dim_[d].simplices != b.by_dim_[d].simplices) return false;
  return true;
}

ComplexPtr share(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

SubcomplexPair::SubcomplexPair(ComplexPtr total, ComplexPtr sub)
    : total_(std::move(total)), sub_(std::move(sub)) {
  if (!total_ || !sub_) fail(ErrorCode::InvalidInput, "pair needs both complexes");
  if (!sub_->is_subcomplex_of(*total_))
    fail(ErrorCode::NotSubcomplex, "pair: subcomplex has a simplex outside the total complex");
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {}

SimplicialMap SimplicialMap::identity(const ComplexPtr& k) {
  std::map<Vertex, Vertex> vm;
  for (Vertex v : k->vertices()) vm.emplace(v, v);
  return SimplicialMap(k, k, std::move(vm));
}

Vertex SimplicialMap::operator()(Vertex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) fail(ErrorCode::InvalidInput, "vertex map undefined at " + std::to_string(v));
  return it->second;
}

std::optional<OrientedSimplex> SimplicialMap::image(const Simplex& s) const {
  std::vector<Vertex> img;
  img.reserve(s.size());
  for (Vertex v : s.vertices()) img.push_back((*this)(v));
  // Insertion sort, tracking the permutation parity.
  int sign = 1;
  for (std::size_t i = 1; i < img.size(); ++i)
    for (std::size_t j = i; j > 0 && img[j - 1] >= img[j]; --j) {
      if (img[j - 1] == img[j]) return std::nullopt;
      std::swap(img[j - 1], img[j]);
      sign = -sign;
    }
  return OrientedSimplex{Simplex(std::move(img)), sign};
}

Simplex SimplicialMap::image_set(const Simplex& s) const {
  std::set<Vertex> img;
  for (Vertex v : s.vertices()) img.insert((*this)(v));
  return Simplex(std::vector<Vertex>(img.begin(), img.end()));
}

SimplicialMap verify_simplicial_map(ComplexPtr src, ComplexPtr dst, std::map<Vertex, Vertex> vm) {
  for (Vertex v : src->vertices())
    if (!vm.contains(v)) fail(ErrorCode::InvalidInput, "vertex map undefined at " + std::to_string(v));
  SimplicialMap f(src, dst, std::move(vm));
  for (int k = 0; k <= src->dim(); ++k)
    for (const auto& s : src->simplices(k)) {
      const Simplex img = f.image_set(s);
      if (!dst->contains(img))
        fail(ErrorCode::NotSimplicial, "image of a " + std::to_string(k) + "-simplex is not a simplex of the target");
    }
  return f;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!(inner.target() == outer.source() || *inner.target() == *outer.source()))
    fail(ErrorCode::SpaceMismatch, "compose: inner target differs from outer source");
  std::map<Vertex, Vertex> vm;
  for (const auto& [v, w] : inner.vertex_map()) vm.emplace(v, outer(w));
  return SimplicialMap(inner.source(), outer.target(), std::move(vm));
}

}  // namespace spinc
