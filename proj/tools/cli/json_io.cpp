#include "cli/json_io.hpp"

#include <string>

#include "spinc/error.hpp"

namespace spinc::cli {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const AbelianGroup& g) { return Json{{"rank", g.rank()}, {"torsion", to_json(g.torsion())}}; }

Json to_json(const GroupElement& x) { return Json{{"free", to_json(x.free())}, {"torsion", to_json(x.torsion())}}; }

Json cochain_to_json(const SimplicialComplex& k, const Cochain& z) {
  Json out = Json::array();
  for (std::size_t i = 0; i < z.values.size(); ++i) {
    if (z.values[i] == 0) continue;
    out.push_back(Json{{"simplex", k.simplex(z.degree, i).vertices()}, {"value", to_json(z.values[i])}});
  }
  return out;
}

namespace {

IntVector integers(const Json& j, const char* field) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, std::string("\"") + field + "\" must be an array");
  IntVector out;
  for (const auto& e : j) {
    if (e.is_number_integer()) out.emplace_back(std::to_string(e.get<std::int64_t>()));
    else if (e.is_string()) {
      Integer v;
      if (v.set_str(e.get<std::string>(), 10) != 0) fail(ErrorCode::InvalidInput, "bad integer in \"" + std::string(field) + "\"");
      out.push_back(v);
    } else {
      fail(ErrorCode::InvalidInput, std::string("non-integer entry in \"") + field + "\"");
    }
  }
  return out;
}

}  // namespace

GroupElement element_from_json(const AbelianGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("free") || !j.contains("torsion"))
    fail(ErrorCode::InvalidInput, "group element must be {\"free\": [...], \"torsion\": [...]}");
  IntVector free = integers(j.at("free"), "free");
  IntVector torsion = integers(j.at("torsion"), "torsion");
  if (free.size() != g.rank() || torsion.size() != g.torsion().size())
    fail(ErrorCode::InvalidInput, "element has " + std::to_string(free.size()) + " free and " +
                                      std::to_string(torsion.size()) + " torsion coordinates, group is " +
                                      g.describe());
  return GroupElement(g, std::move(free), std::move(torsion));
}

GroupElement structure_offset_from_json(const AbelianGroup& g, const Json& j) {
  if (!j.is_object() || j.value("torsor", "") != "spinc" || !j.contains("offset"))
    fail(ErrorCode::InvalidInput, "structure literal must be {\"torsor\":\"spinc\",\"offset\":{...}}");
  return element_from_json(g, j.at("offset"));
}

Cochain cochain_from_entries(const SimplicialComplex& k, const std::vector<CochainEntry>& entries, int degree,
                             Ring ring) {
  Cochain z = zero_cochain(k, degree, ring);
  for (const auto& e : entries) {
    if (e.simplex.dimension() != degree)
      fail(ErrorCode::InvalidInput, "cochain entry of degree " + std::to_string(e.simplex.dimension()) +
                                        ", expected " + std::to_string(degree));
    const auto i = k.index_of(e.simplex);
    if (!i) fail(ErrorCode::InvalidInput, "cochain entry on a simplex outside the complex");
    z.values[*i] = ring == Ring::Z2 ? mod_floor(e.value, 2) : e.value;
    if (ring == Ring::Z2 && e.value != 0 && e.value != 1)
      fail(ErrorCode::InvalidInput, "mod 2 cochain values must be 0 or 1");
  }
  return z;
}

}  // namespace spinc::cli
