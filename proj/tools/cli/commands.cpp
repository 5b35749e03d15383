#include "cli/commands.hpp"

#include <string>

#include "spinc/cohomology_ops.hpp"
#include "spinc/complex_ops.hpp"
#include "spinc/structures.hpp"
#include "spinc/transport.hpp"

namespace spinc::cli {
namespace {

Ring parse_ring(const std::string& coeff) {
  if (coeff == "Z") return Ring::Z;
  if (coeff == "Z2") return Ring::Z2;
  fail(ErrorCode::InvalidInput, "--coeff must be Z or Z2");
}

ComplexPtr load_complex(const std::filesystem::path& path) {
  if (path.empty()) fail(ErrorCode::InvalidInput, "--complex is required");
  return share(read_complex(path));
}

Json class_json(const CohomologyClass& x) { return Json{{"class", to_json(x.coords())}, {"zero", x.is_zero()}}; }

// w2 and the groups around it for one complex.
struct Characteristics {
  ComplexPtr k;
  std::shared_ptr<const Cohomology> z;
  std::shared_ptr<const Cohomology> f;
  std::optional<Chain> fundamental;
  std::string not_pd_reason;
  std::optional<CohomologyClass> w2;
  std::string source;
  std::vector<std::string> warnings;
};

Characteristics characteristics(ComplexPtr k, const std::filesystem::path& w2_path) {
  Characteristics c{k, Cohomology::compute(Space(k), Ring::Z), Cohomology::compute(Space(k), Ring::Z2), {}, {}, {}, {}, {}};
  if (k->dim() == 4) {
    try {
      c.fundamental = fundamental_cycle(*k, 4);
    } catch (const Error& e) {
      c.not_pd_reason = e.what();
    }
  } else {
    c.not_pd_reason = "dimension is " + std::to_string(k->dim()) + ", not 4";
  }

  std::optional<CohomologyClass> wu;
  std::optional<Error> wu_error;
  if (c.fundamental) {
    try {
      wu = wu_class_w2(c.f->group(2), *c.fundamental);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegeneratePairing) throw;
      wu_error = e;
    }
  }

  if (!w2_path.empty()) {
    const auto entries = parse_cochain_entries(read_text_file(w2_path));
    const Cochain z = cochain_from_entries(*k, entries, 2, Ring::Z2);
    try {
      c.w2 = class_of(c.f->group(2), z);
    } catch (const Error& e) {
      fail(ErrorCode::InvalidInput, std::string("--w2: ") + e.what());
    }
    c.source = "user";
    if (wu && !(*wu == *c.w2)) c.warnings.push_back("supplied w2 differs from the Wu class; the supplied value is used");
    else if (wu) c.warnings.push_back("w2 supplied although the Wu class is available; the supplied value is used");
    return c;
  }
  if (!c.fundamental)
    fail(ErrorCode::NotClosed, "not a closed oriented 4-complex (" + c.not_pd_reason + "); supply --w2");
  if (wu_error) throw *wu_error;
  c.w2 = wu;
  c.source = "wu";
  return c;
}

Json pairing_json(const Characteristics& c) {
  if (!c.fundamental) return nullptr;
  const IntMatrix pz = pairing_matrix(c.z->group(2), *c.fundamental);
  const IntMatrix pf = pairing_matrix(c.f->group(2), *c.fundamental);
  F2Matrix m(pf.rows(), pf.cols());
  for (std::size_t i = 0; i < pf.rows(); ++i)
    for (std::size_t j = 0; j < pf.cols(); ++j) m(i, j) = static_cast<std::uint8_t>(pf(i, j).get_ui());
  return Json{{"Z", to_json(pz)}, {"Z2", to_json(pf)}, {"nondegenerate", m.rank() == pf.rows()}};
}

std::optional<GroupElement> parse_twist(const RunConfig& cfg, const AbelianGroup& g) {
  if (!cfg.twist) return std::nullopt;
  Json j;
  try {
    j = Json::parse(*cfg.twist);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("--twist: ") + e.what());
  }
  return element_from_json(g, j);
}

SpincTorsorPtr spinc_of(const Characteristics& c, std::optional<GroupElement> twist = {}) {
  return spinc_torsor(c.z->group(2), c.z->group(3), *c.w2, std::move(twist));
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, path.filename().string() + ": " + e.what());
  }
}

Json verdict_json(const Verdict& v) { return Json{{"pass", v.pass}, {"detail", v.detail}}; }

Json hypotheses_json(const HypothesisReport& r) {
  return Json{{"restriction_isomorphism", verdict_json(r.restriction_isomorphism)},
              {"no_two_torsion", verdict_json(r.no_two_torsion)},
              {"collapse_N1", verdict_json(r.collapse1)},
              {"collapse_N2", verdict_json(r.collapse2)},
              {"induced_isomorphism", verdict_json(r.induced_isomorphism)}};
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::NotSimplicial:
    case ErrorCode::NotSubcomplex:
    case ErrorCode::OutOfRange:
    case ErrorCode::NotCocycle:
    case ErrorCode::SpaceMismatch:
    case ErrorCode::EmptyTorsor:
      return kInputError;
    case ErrorCode::NotClosed:
    case ErrorCode::NotOrientable:
    case ErrorCode::DegeneratePairing:
      return kInapplicable;
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NotInImage:
    case ErrorCode::TwoTorsion:
      return kHypothesisFailure;
    case ErrorCode::IncompatibleLifts:
    case ErrorCode::NotDivisible:
      return kIncompatibleLifts;
    case ErrorCode::ConsistencyFailure:
    case ErrorCode::Internal:
      return kInternalError;
  }
  return kInternalError;
}

Report cmd_cohomology(const RunConfig& cfg) {
  const ComplexPtr k = load_complex(cfg.complex);
  if (cfg.degree < 0) fail(ErrorCode::OutOfRange, "--degree must be non-negative");
  const Ring ring = parse_ring(cfg.coeff);
  const Space space = cfg.sub.empty() ? Space(k) : Space(k, share(read_complex(cfg.sub)));
  const GroupPtr h = cohomology(space, cfg.degree, ring);
  Json body = to_json(h->group());
  if (cfg.basis) {
    Json basis = Json::array();
    for (const auto& z : h->basis_cocycles()) basis.push_back(cochain_to_json(*k, z));
    body["basis"] = basis;
  }
  return {kOk, body};
}

Report cmd_charclasses(const RunConfig& cfg) {
  const Characteristics c = characteristics(load_complex(cfg.complex), cfg.w2);
  const CohomologyClass w3 = W3(*c.w2, c.z->group(3));
  Json body{{"w2", class_json(*c.w2)},
            {"w2_source", c.source},
            {"W3", class_json(w3)},
            {"pairing", pairing_json(c)},
            {"poincare_duality", c.fundamental ? Json(true) : Json(false)},
            {"warnings", c.warnings}};
  if (c.fundamental && !w3.is_zero()) fail(ErrorCode::Internal, "W3 is nonzero on a closed oriented 4-complex");
  return {kOk, body};
}

Report cmd_structures(const RunConfig& cfg) {
  const Characteristics c = characteristics(load_complex(cfg.complex), cfg.w2);
  const auto spin = spin_torsor(c.f->group(1), *c.w2);
  const auto spinc = spinc_of(c, parse_twist(cfg, c.z->group(2)->group()));

  Json spin_json{{"exists", spin->exists()}, {"group", to_json(spin->group()->group())}};
  Json alpha_json = Json::array();
  if (spin->exists()) {
    const auto all = enumerate(spin);
    spin_json["count"] = all.size();
    Json offsets = Json::array();
    for (const auto& s : all) {
      offsets.push_back(to_json(s.offset));
      if (spinc->exists()) alpha_json.push_back(Json{{"spin", to_json(s.offset)}, {"spinc", to_json(alpha(s, spinc).offset)}});
    }
    spin_json["structures"] = offsets;
  } else {
    spin_json["count"] = 0;
    spin_json["structures"] = Json::array();
  }

  Json spinc_json{{"exists", spinc->exists()}, {"group", to_json(spinc->group()->group())}, {"W3", class_json(spinc->W3())}};
  if (spinc->exists()) {
    const SpincListing listing = enumerate(spinc);
    spinc_json["chern_base"] = to_json(spinc->chern_base().coords());
    spinc_json["twist"] = to_json(spinc->twist());
    spinc_json["default_twist"] = spinc->default_twist();
    spinc_json["finite"] = listing.finite;
    spinc_json["free_rank"] = listing.free_rank;
    if (listing.finite) spinc_json["count"] = listing.structures.size();
    else spinc_json["count"] = "infinite";
    Json rows = Json::array();
    for (const auto& s : listing.structures)
      rows.push_back(Json{{"offset", to_json(s.offset)},
                          {"c1", to_json(c1(s).coords())},
                          {"conjugate", to_json(conjugate(s).offset)},
                          {"conjugation_invariant", is_conjugation_invariant(s)},
                          {"in_image_of_alpha", in_image_of_alpha(s, spin)}});
    spinc_json["structures"] = rows;
    if (!listing.finite)
      spinc_json["family"] = "offsets a = listed torsion part + any free part; c1 = chern_base + 2a";
  }
  Json body{{"w2", class_json(*c.w2)},
            {"w2_source", c.source},
            {"spin", spin_json},
            {"spinc", spinc_json},
            {"alpha", alpha_json},
            {"warnings", c.warnings}};
  return {kOk, body};
}

Report cmd_transport(const RunConfig& cfg) {
  if (cfg.bundle.empty()) fail(ErrorCode::InvalidInput, "transport needs a bundle directory");
  const auto& dir = cfg.bundle;
  auto optional_path = [&](const char* name) {
    const auto p = dir / name;
    return std::filesystem::exists(p) ? p : std::filesystem::path();
  };
  const ComplexPtr x1 = share(read_complex(dir / "X1.scx"));
  const ComplexPtr n1 = share(read_complex(dir / "N1.scx"));
  const ComplexPtr x2 = share(read_complex(dir / "X2.scx"));
  const ComplexPtr n2 = share(read_complex(dir / "N2.scx"));
  const auto vm = parse_vertex_map(read_text_file(dir / "g.smap"));
  const SimplicialMap g = verify_simplicial_map(x1, x2, vm);

  const Characteristics c1_data = characteristics(x1, optional_path("w2_1.cyc"));
  const Characteristics c2_data = characteristics(x2, optional_path("w2_2.cyc"));
  const auto torsor1 = spinc_of(c1_data);
  const auto torsor2 = spinc_of(c2_data);
  if (!torsor1->exists() || !torsor2->exists()) fail(ErrorCode::EmptyTorsor, "no spin^c structures (W3 != 0)");

  TransportProblem p{SubcomplexPair(x1, n1),
                     SubcomplexPair(x2, n2),
                     g,
                     structure(torsor1, structure_offset_from_json(torsor1->group()->group(), read_json_file(dir / "s1.json"))),
                     structure(torsor2, structure_offset_from_json(torsor2->group()->group(), read_json_file(dir / "s2.json"))),
                     {},
                     {}};
  const auto lift1_path = optional_path("lift1.cyc");
  const auto lift2_path = optional_path("lift2.cyc");
  if (!lift1_path.empty() || !lift2_path.empty()) {
    if (lift1_path.empty() || lift2_path.empty()) fail(ErrorCode::InvalidInput, "supply both lift1.cyc and lift2.cyc or neither");
    p.lift1 = cochain_from_entries(*x1, parse_cochain_entries(read_text_file(lift1_path)), 2, Ring::Z);
    p.lift2 = cochain_from_entries(*x2, parse_cochain_entries(read_text_file(lift2_path)), 2, Ring::Z);
  }

  const HypothesisReport hyp = verify_hypotheses(p);
  const auto blocking = hyp.blocking(cfg.strict);
  if (!blocking.empty()) {
    Json body{{"hypotheses", hypotheses_json(hyp)},
              {"error",
               {{"code", std::string(to_string(ErrorCode::HypothesisFailed))},
                {"failed", blocking},
                {"message", "transport hypotheses failed: " + blocking.front()}}}};
    return {kHypothesisFailure, body};
  }

  const TransportResult r = transport(p, cfg.strict);
  Json ambiguity = Json::array();
  for (const auto& a : r.ambiguity) ambiguity.push_back(to_json(a));
  Json body{{"mode", r.mode == LiftMode::User ? "user" : "engine"},
            {"hypotheses", hypotheses_json(r.hypotheses)},
            {"delta", to_json(r.delta.coords())},
            {"d", to_json(r.d.coords())},
            {"ambiguity", ambiguity},
            {"exact", r.mode == LiftMode::User || r.ambiguity.size() <= 1},
            {"lift_repaired", r.repaired},
            {"transported_offset", to_json(r.transported.offset)},
            {"transported_c1", to_json(c1(r.transported).coords())}};
  return {kOk, body};
}

Report run(const RunConfig& cfg) {
  try {
    if (cfg.command == "cohomology") return cmd_cohomology(cfg);
    if (cfg.command == "charclasses") return cmd_charclasses(cfg);
    if (cfg.command == "structures") return cmd_structures(cfg);
    if (cfg.command == "transport") return cmd_transport(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    fail(ErrorCode::InvalidInput, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    return {code, Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}};
  } catch (const std::exception& e) {
    return {kInternalError, Json{{"error", {{"code", "internal"}, {"message", e.what()}}}}};
  }
}

}  // namespace spinc::cli
