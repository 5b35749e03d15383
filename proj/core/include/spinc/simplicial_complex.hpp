#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "spinc/integer.hpp"

namespace spinc {

using Vertex = std::int64_t;

/// A simplex stored as its strictly increasing vertex list. Increasing order
/// is the positive orientation.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; fails on a repeated or negative vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  /// The face opposite the i-th vertex.
  Simplex face(std::size_t i) const;
  /// Vertices [first, first + count).
  Simplex slice(std::size_t first, std::size_t count) const;
  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite abstract simplicial complex, closed under faces. The k-simplices
/// are kept in lexicographic order and addressed by their position in it.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given simplices.
  static SimplicialComplex from_simplices(std::span<const Simplex> simplices);
  static SimplicialComplex from_simplices(std::initializer_list<Simplex> simplices) {
    return from_simplices(std::span<const Simplex>(simplices.begin(), simplices.size()));
  }

  /// -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }
  std::size_t count(int k) const;
  std::size_t total_count() const;
  std::vector<std::size_t> f_vector() const;

  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, std::size_t i) const { return by_dim_[k].simplices[i]; }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Indices of the (k-1)-faces of the i-th k-simplex; entry j is the face
  /// opposite vertex j, which enters the boundary with sign (-1)^j.
  std::span<const std::size_t> face_indices(int k, std::size_t i) const;

  std::vector<Vertex> vertices() const;
  std::vector<Simplex> maximal_simplices() const;
  SimplicialComplex skeleton(int k) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_pure() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Level {
    std::vector<Simplex> simplices;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index;
    std::vector<std::size_t> faces;  // (k+1) entries per simplex, k >= 1
  };
  std::vector<Level> by_dim_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr share(SimplicialComplex k);

/// A subcomplex `sub` of `total`.
class SubcomplexPair {
 public:
  SubcomplexPair(ComplexPtr total, ComplexPtr sub);

  const ComplexPtr& total() const { return total_; }
  const ComplexPtr& sub() const { return sub_; }

 private:
  ComplexPtr total_;
  ComplexPtr sub_;
};

struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;  // sign of the permutation sorting the image vertices
};

/// A vertex map sending every simplex of `source` onto a simplex of `target`.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::map<Vertex, Vertex> vertex_map);

  static SimplicialMap identity(const ComplexPtr& k);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return map_; }
  Vertex operator()(Vertex v) const;

  /// Image vertex set of s, with orientation sign; nothing when degenerate.
  std::optional<OrientedSimplex> image(const Simplex& s) const;
  /// Image as a vertex set (possibly lower-dimensional).
  Simplex image_set(const Simplex& s) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::map<Vertex, Vertex> map_;
};

/// Validates that vm is defined on every vertex of src and carries each
/// simplex of src onto a simplex of dst.
SimplicialMap verify_simplicial_map(ComplexPtr src, ComplexPtr dst, std::map<Vertex, Vertex> vm);

/// outer o inner
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// Integer k-chain, indexed by the complex's k-simplex order.
struct Chain {
  int degree = 0;
  IntVector coefficients;
};

}  // namespace spinc
