#include "spinc/complex_ops.hpp"

#include <deque>
#include <set>
#include <string>
#include <tuple>

#include "spinc/error.hpp"

namespace spinc {

std::vector<MatrixEntry> boundary_entries(const SimplicialComplex& k, int degree) {
  if (degree < 1 || degree > k.dim())
    fail(ErrorCode::OutOfRange, "boundary: degree " + std::to_string(degree) + " outside [1, dim]");
  std::vector<MatrixEntry> out;
  out.reserve(k.count(degree) * static_cast<std::size_t>(degree + 1));
  for (std::size_t j = 0; j < k.count(degree); ++j) {
    const auto faces = k.face_indices(degree, j);
    for (std::size_t i = 0; i < faces.size(); ++i)
      out.push_back({faces[i], j, (i % 2 == 0) ? 1 : -1});
  }
  return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
  const auto entries = boundary_entries(k, degree);
  IntMatrix m(k.count(degree - 1), k.count(degree));
  for (const auto& e : entries) m(e.row, e.col) = e.value;
  return m;
}

Chain boundary(const SimplicialComplex& k, const Chain& c) {
  if (c.coefficients.size() != k.count(c.degree))
    fail(ErrorCode::SpaceMismatch, "boundary: chain does not match the complex");
  Chain out{c.degree - 1, IntVector(k.count(c.degree - 1))};
  if (c.degree == 0) return out;
  for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
    if (c.coefficients[j] == 0) continue;
    const auto faces = k.face_indices(c.degree, j);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (i % 2 == 0) out.coefficients[faces[i]] += c.coefficients[j];
      else out.coefficients[faces[i]] -= c.coefficients[j];
    }
  }
  return out;
}

SimplicialComplex closed_star(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (!l.is_subcomplex_of(k)) fail(ErrorCode::NotSubcomplex, "closed_star: L is not a subcomplex of K");
  const std::vector<Vertex> lv = l.vertices();
  const std::set<Vertex> marked(lv.begin(), lv.end());
  std::vector<Simplex> meets;
  for (const auto& s : k.maximal_simplices())
    for (Vertex v : s.vertices())
      if (marked.contains(v)) {
        meets.push_back(s);
        break;
      }
  // Faces of a maximal simplex that meet L are covered by its closure.
  return SimplicialComplex::from_simplices(meets);
}

CollapseResult collapses_to_dim(const SimplicialComplex& n, int target_dim) {
  const int top = n.dim();
  CollapseResult result;
  if (top <= target_dim) {
    result.reached = true;
    result.remainder = n;
    return result;
  }

  const auto levels = static_cast<std::size_t>(top + 1);
  std::vector<std::vector<bool>> alive(levels);
  std::vector<std::vector<int>> coface_count(levels);
  std::vector<std::vector<std::vector<std::size_t>>> cofaces(levels);
  std::vector<std::size_t> alive_count(levels);
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    alive[uk].assign(n.count(k), true);
    coface_count[uk].assign(n.count(k), 0);
    cofaces[uk].resize(n.count(k));
    alive_count[uk] = n.count(k);
  }
  for (int k = 1; k <= top; ++k)
    for (std::size_t j = 0; j < n.count(k); ++j)
      for (std::size_t f : n.face_indices(k, j)) {
        cofaces[static_cast<std::size_t>(k - 1)][f].push_back(j);
        ++coface_count[static_cast<std::size_t>(k - 1)][f];
      }

  // (-dim coface, coface index, free face index); index order is lexicographic.
  using Candidate = std::tuple<int, std::size_t, std::size_t>;
  std::set<Candidate> candidates;
  auto alive_coface = [&](int k, std::size_t i) {
    for (std::size_t j : cofaces[static_cast<std::size_t>(k)][i])
      if (alive[static_cast<std::size_t>(k + 1)][j]) return j;
    fail(ErrorCode::Internal, "collapse bookkeeping: no live coface");
  };
  for (int k = 0; k < top; ++k)
    for (std::size_t i = 0; i < n.count(k); ++i)
      if (coface_count[static_cast<std::size_t>(k)][i] == 1)
        candidates.emplace(-(k + 1), alive_coface(k, i), i);

  // Removing `gone` (a k-simplex) lowers the coface count of its faces.
  auto drop_from_faces = [&](int k, std::size_t gone) {
    if (k == 0) return;
    for (std::size_t f : n.face_indices(k, gone)) {
      auto& c = coface_count[static_cast<std::size_t>(k - 1)][f];
      if (!alive[static_cast<std::size_t>(k - 1)][f]) continue;
      if (c == 1) candidates.erase({-k, gone, f});
      --c;
      if (c == 1) candidates.emplace(-k, alive_coface(k - 1, f), f);
    }
  };

  auto above_target = [&] {
    for (int k = target_dim + 1; k <= top; ++k)
      if (alive_count[static_cast<std::size_t>(k)] > 0) return true;
    return false;
  };

  while (above_target() && !candidates.empty()) {
    const auto [neg_dim, tau, sigma] = *candidates.begin();
    const int k = -neg_dim;
    candidates.erase(candidates.begin());
    result.log.push_back({n.simplex(k - 1, sigma), n.simplex(k, tau)});

    alive[static_cast<std::size_t>(k)][tau] = false;
    alive[static_cast<std::size_t>(k - 1)][sigma] = false;
    --alive_count[static_cast<std::size_t>(k)];
    --alive_count[static_cast<std::size_t>(k - 1)];
    coface_count[static_cast<std::size_t>(k - 1)][sigma] = 0;
    drop_from_faces(k, tau);
    drop_from_faces(k - 1, sigma);
  }

  result.reached = !above_target();
  std::vector<Simplex> rest;
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < n.count(k); ++i)
      if (alive[static_cast<std::size_t>(k)][i]) rest.push_back(n.simplex(k, i));
  result.remainder = SimplicialComplex::from_simplices(rest);
  return result;
}

Chain fundamental_cycle(const SimplicialComplex& k, int n) {
  if (n < 1 || k.dim() != n || !k.is_pure())
    fail(ErrorCode::NotClosed, "fundamental_cycle: complex is not pure of dimension " + std::to_string(n));

  // For each (n-1)-face, the top simplices containing it and the face position.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> around(k.count(n - 1));
  for (std::size_t j = 0; j < k.count(n); ++j) {
    const auto faces = k.face_indices(n, j);
    for (std::size_t pos = 0; pos < faces.size(); ++pos) around[faces[pos]].emplace_back(j, pos);
  }
  for (const auto& a : around)
    if (a.size() != 2)
      fail(ErrorCode::NotClosed, "fundamental_cycle: an (n-1)-face lies in " + std::to_string(a.size()) +
                                     " n-simplices (not closed)");

  IntVector coef(k.count(n));
  for (std::size_t root = 0; root < k.count(n); ++root) {
    if (coef[root] != 0) continue;
    coef[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      const auto faces = k.face_indices(n, j);
      for (std::size_t pos = 0; pos < faces.size(); ++pos) {
        const auto& pair = around[faces[pos]];
        const auto& [other, other_pos] = pair[0].first == j && pair[0].second == pos ? pair[1] : pair[0];
        // coef[j] (-1)^pos + coef[other] (-1)^other_pos = 0
        const Integer want = ((pos + other_pos) % 2 == 0) ? Integer(-coef[j]) : coef[j];
        if (coef[other] == 0) {
          coef[other] = want;
          queue.push_back(other);
        } else if (coef[other] != want) {
          fail(ErrorCode::NotOrientable, "fundamental_cycle: not orientable");
        }
      }
    }
  }
  return Chain{n, std::move(coef)};
}

}  // namespace spinc
