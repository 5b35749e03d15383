#pragma once

#include <map>
#include <string>

#include "spinc/io.hpp"
#include "spinc/simplicial_complex.hpp"

namespace fixtures {

inline std::string corpus_path(const std::string& name) { return std::string(SPINC_CORPUS_DIR) + "/" + name; }

/// Corpus complex by stem ("cp2"), loaded once per process.
inline spinc::ComplexPtr corpus(const std::string& stem) {
  static std::map<std::string, spinc::ComplexPtr> cache;
  auto it = cache.find(stem);
  if (it != cache.end()) return it->second;
  auto k = spinc::share(spinc::read_complex(corpus_path(stem + ".scx")));
  cache.emplace(stem, k);
  return k;
}

inline spinc::ComplexPtr complex_of(std::initializer_list<spinc::Simplex> facets) {
  return spinc::share(spinc::SimplicialComplex::from_simplices(facets));
}

}  // namespace fixtures
