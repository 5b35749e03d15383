#include "spinc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spinc/error.hpp"

namespace spinc {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  fail(ErrorCode::InvalidInput, "line " + std::to_string(line_no) + ": " + why);
}

Vertex parse_vertex(std::string_view tok, std::size_t line_no) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    malformed(line_no, "expected a vertex id, got '" + std::string(tok) + "'");
  if (v < 0) malformed(line_no, "vertex ids must be non-negative");
  return v;
}

Integer parse_integer(std::string_view tok, std::size_t line_no) {
  Integer value;
  if (tok.empty() || value.set_str(std::string(tok), 10) != 0)
    malformed(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

// Calls fn(line_no, tokens) for every non-empty, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens(line);
    if (!toks.empty()) fn(line_no, toks);
  }
}

Simplex parse_simplex(const std::vector<std::string_view>& toks, std::size_t first, std::size_t last,
                      std::size_t line_no) {
  std::vector<Vertex> verts;
  for (std::size_t i = first; i < last; ++i) verts.push_back(parse_vertex(toks[i], line_no));
  try {
    return Simplex(std::move(verts));
  } catch (const Error& e) {
    malformed(line_no, e.what());
  }
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<Simplex> simplices;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& toks) {
    if (toks[0] != "simplex") malformed(line_no, "expected 'simplex', got '" + std::string(toks[0]) + "'");
    if (toks.size() < 2) malformed(line_no, "simplex without vertices");
    simplices.push_back(parse_simplex(toks, 1, toks.size(), line_no));
  });
  return SimplicialComplex::from_simplices(simplices);
}

std::string format_complex(const SimplicialComplex& k) {
  auto maximal = k.maximal_simplices();
  std::sort(maximal.begin(), maximal.end(), [](const Simplex& a, const Simplex& b) {
    return a.dimension() != b.dimension() ? a.dimension() < b.dimension() : a < b;
  });
  std::ostringstream out;
  for (const auto& s : maximal) {
    out << "simplex";
    for (Vertex v : s.vertices()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::map<Vertex, Vertex> parse_vertex_map(std::string_view text) {
  std::map<Vertex, Vertex> vm;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& toks) {
    if (toks[0] != "map" || toks.size() != 3) malformed(line_no, "expected 'map v w'");
    const Vertex v = parse_vertex(toks[1], line_no);
    const Vertex w = parse_vertex(toks[2], line_no);
    auto [it, fresh] = vm.emplace(v, w);
    if (!fresh && it->second != w) malformed(line_no, "vertex " + std::to_string(v) + " mapped twice");
  });
  return vm;
}

std::string format_vertex_map(const std::map<Vertex, Vertex>& vm) {
  std::ostringstream out;
  for (const auto& [v, w] : vm) out << "map " << v << ' ' << w << '\n';
  return out.str();
}

std::vector<CochainEntry> parse_cochain_entries(std::string_view text) {
  std::vector<CochainEntry> out;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& toks) {
    if (toks[0] != "value" || toks.size() < 3) malformed(line_no, "expected 'value v0 ... vk c'");
    CochainEntry e{parse_simplex(toks, 1, toks.size() - 1, line_no),
                   parse_integer(toks.back(), line_no)};
    if (!out.empty() && out.front().simplex.dimension() != e.simplex.dimension())
      malformed(line_no, "cochain entries of different degrees");
    out.push_back(std::move(e));
  });
  return out;
}

std::string format_cochain_entries(const std::vector<CochainEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "value";
    for (Vertex v : e.simplex.vertices()) out << ' ' << v;
    out << ' ' << e.value << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
  try {
    return parse_complex(read_text_file(path));
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace spinc
