#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spinc/integer.hpp"
#include "spinc/simplicial_complex.hpp"

namespace spinc {

/// `.scx`: `simplex v0 v1 ... vk` lines, `#` comments.
SimplicialComplex parse_complex(std::string_view text);
/// Maximal simplices, one per line, in dimension-then-lexicographic order.
std::string format_complex(const SimplicialComplex& k);

/// `.smap`: `map v w` lines.
std::map<Vertex, Vertex> parse_vertex_map(std::string_view text);
std::string format_vertex_map(const std::map<Vertex, Vertex>& vm);

struct CochainEntry {
  Simplex simplex;
  Integer value;
};

/// `.cyc`: `value v0 ... vk c` lines; every entry must have the same degree.
std::vector<CochainEntry> parse_cochain_entries(std::string_view text);
std::string format_cochain_entries(const std::vector<CochainEntry>& entries);

std::string read_text_file(const std::filesystem::path& path);
SimplicialComplex read_complex(const std::filesystem::path& path);

}  // namespace spinc
