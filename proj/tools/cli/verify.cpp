#include <functional>
#include <random>
#include <string>

#include "cli/commands.hpp"
#include "spinc/cohomology_ops.hpp"
#include "spinc/complex_ops.hpp"
#include "spinc/smith.hpp"
#include "spinc/structures.hpp"

namespace spinc::cli {
namespace {

struct Expected {
  const char* name;
  std::vector<AbelianGroup> integral;  // H^0 .. H^dim over Z
  std::vector<std::size_t> mod2;       // dimensions over Z/2
  bool closed_oriented_4;
};

AbelianGroup Z(std::size_t r) { return AbelianGroup::free(r); }
AbelianGroup ZT(std::size_t r, long t) { return AbelianGroup(r, {Integer(t)}); }

const std::vector<Expected>& manifest() {
  static const std::vector<Expected> m = {
      {"s3", {Z(1), Z(0), Z(0), Z(1)}, {1, 0, 0, 1}, false},
      {"s4", {Z(1), Z(0), Z(0), Z(0), Z(1)}, {1, 0, 0, 0, 1}, true},
      {"rp2", {Z(1), Z(0), ZT(0, 2)}, {1, 1, 1}, false},
      {"t2", {Z(1), Z(2), Z(1)}, {1, 2, 1}, false},
      {"klein", {Z(1), Z(1), ZT(0, 2)}, {1, 2, 1}, false},
      {"rp3", {Z(1), Z(0), ZT(0, 2), Z(1)}, {1, 1, 1, 1}, false},
      {"cp2", {Z(1), Z(0), Z(1), Z(0), Z(1)}, {1, 0, 1, 0, 1}, true},
      {"s2xs2", {Z(1), Z(0), Z(2), Z(0), Z(1)}, {1, 0, 2, 0, 1}, true},
      {"t4", {Z(1), Z(4), Z(6), Z(4), Z(1)}, {1, 4, 6, 4, 1}, true},
      {"rp3xs1", {Z(1), Z(1), ZT(0, 2), ZT(1, 2), Z(1)}, {1, 2, 2, 2, 1}, true},
  };
  return m;
}

class Checker {
 public:
  void check(const std::string& subject, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = e.what();
    }
    Json row{{"subject", subject}, {"check", name}, {"pass", ok}};
    if (!note.empty()) row["error"] = note;
    if (!ok) ++failures_;
    rows_.push_back(std::move(row));
  }
  Json rows() const { return rows_; }
  std::size_t failures() const { return failures_; }

 private:
  Json rows_ = Json::array();
  std::size_t failures_ = 0;
};

bool boundary_squared_zero(const SimplicialComplex& k) {
  for (int d = 2; d <= k.dim(); ++d)
    if (!(boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero()) return false;
  return true;
}

bool basis_round_trip(const Cohomology& h, int top) {
  for (int d = 0; d <= top; ++d) {
    const GroupPtr g = h.group(d);
    const auto basis = g->basis_cocycles();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!(g->coordinates(basis[i]) == GroupElement::unit(g->group(), i))) return false;
  }
  return true;
}

// Offsets to exercise: everything when finite, otherwise torsion cosets plus
// unit and doubled-unit translates.
std::vector<GroupElement> sample(const AbelianGroup& g) {
  if (g.is_finite()) return enumerate_elements(g);
  std::vector<GroupElement> out;
  for (const auto& t : enumerate_elements(AbelianGroup(0, g.torsion())))
    out.emplace_back(g, IntVector(g.rank()), t.torsion());
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    out.push_back(GroupElement::unit(g, i));
    out.push_back(Integer(-3) * GroupElement::unit(g, i));
  }
  return out;
}

void check_manifold(Checker& c, const std::string& name, const ComplexPtr& k) {
  const auto z = Cohomology::compute(Space(k), Ring::Z);
  const auto f = Cohomology::compute(Space(k), Ring::Z2);
  const Chain fc = fundamental_cycle(*k, 4);
  const CohomologyClass w2 = wu_class_w2(f->group(2), fc);

  c.check(name, "wu_relation", [&] {
    const auto basis = f->group(2)->basis_cocycles();
    const Cochain v = representative(w2);
    for (const auto& x : basis)
      if (evaluate(cup_cochain(*k, v, x), fc) != evaluate(cup_cochain(*k, x, x), fc)) return false;
    return true;
  });
  c.check(name, "W3_zero", [&] { return W3(w2, z->group(3)).is_zero(); });

  const auto spin = spin_torsor(f->group(1), w2);
  const auto spinc = spinc_torsor(z->group(2), z->group(3), w2);
  c.check(name, "existence", [&] { return spin->exists() == w2.is_zero() && spinc->exists(); });
  if (!spinc->exists()) return;

  const AbelianGroup& h2 = z->group(2)->group();
  const auto offsets = sample(h2);
  const auto actions = sample(h2);
  const GroupPtr h2f = f->group(2);

  c.check(name, "chern_reduces_to_w2", [&] {
    for (const auto& a : offsets)
      if (!(reduce_mod2(c1(structure(spinc, a)), h2f) == w2)) return false;
    return true;
  });
  c.check(name, "chern_of_action", [&] {
    for (const auto& a : offsets) {
      const auto s = structure(spinc, a);
      for (const auto& b : actions)
        if (!(c1(act(s, b)) == c1(s) + Integer(2) * CohomologyClass(spinc->group(), b))) return false;
    }
    return true;
  });
  c.check(name, "free_transitive_action", [&] {
    for (const auto& a : offsets) {
      const auto s = structure(spinc, a);
      for (const auto& b : actions) {
        const auto t = act(s, b);
        if (!(difference(s, t) == b)) return false;
        if (!(Integer(2) * CohomologyClass(spinc->group(), difference(s, t)) == c1(t) - c1(s))) return false;
        if ((t == s) != b.is_zero()) return false;
      }
    }
    return true;
  });
  c.check(name, "conjugation", [&] {
    for (const auto& a : offsets) {
      const auto s = structure(spinc, a);
      if (!(conjugate(conjugate(s)) == s) || !(c1(conjugate(s)) == -c1(s))) return false;
      for (const auto& b : actions)
        if (!(conjugate(act(s, b)) == act(conjugate(s), -b))) return false;
    }
    return true;
  });
  c.check(name, "conjugation_fixed_sets", [&] {
    for (const auto& a : offsets) {
      const auto s = structure(spinc, a);
      const bool fixed = is_conjugation_invariant(s);
      if (fixed != c1(s).is_zero() || fixed != in_image_of_alpha(s, spin)) return false;
      if (!spin->exists() && fixed) return false;
    }
    return true;
  });
  if (spin->exists())
    c.check(name, "alpha_equivariance", [&] {
      const auto all = enumerate(spin);
      for (const auto& s : all)
        for (const auto& t : all) {
          const auto lhs = difference(alpha(s, spinc), alpha(t, spinc));
          const auto rhs = bockstein(CohomologyClass(spin->group(), difference(s, t)), spinc->group()).coords();
          if (!(lhs == rhs)) return false;
        }
      return true;
    });
}

void check_random(Checker& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Simplex> facets;
    std::uniform_int_distribution<int> vertex(0, 6);
    std::uniform_int_distribution<int> size(2, 4);
    for (int i = 0; i < 8; ++i) {
      std::vector<Vertex> vs;
      const int n = size(rng);
      while (static_cast<int>(vs.size()) < n) {
        const Vertex v = vertex(rng);
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
      }
      facets.emplace_back(vs);
    }
    const ComplexPtr k = share(SimplicialComplex::from_simplices(facets));
    const std::string subject = "random-complex-" + std::to_string(trial);
    c.check(subject, "boundary_squared_zero", [&] { return boundary_squared_zero(*k); });
    c.check(subject, "basis_round_trip", [&] {
      return basis_round_trip(*Cohomology::compute(Space(k), Ring::Z), k->dim()) &&
             basis_round_trip(*Cohomology::compute(Space(k), Ring::Z2), k->dim());
    });
  }
  std::uniform_int_distribution<long> entry(-20, 20);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    c.check("random-matrix-" + std::to_string(trial), "smith_identities", [&] {
      const auto s = smith_normal_form(m);
      if (!(s.U * m * s.V == s.D)) return false;
      if (!(s.U * s.U_inverse == IntMatrix::identity(m.rows()))) return false;
      if (!(s.V * s.V_inverse == IntMatrix::identity(m.cols()))) return false;
      for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
        if (s.invariant_factors[i] % s.invariant_factors[i - 1] != 0) return false;
      return true;
    });
  }
}

}  // namespace

Report cmd_verify(const RunConfig& cfg) {
  if (cfg.corpus.empty()) fail(ErrorCode::InvalidInput, "--corpus is required");
  std::vector<std::pair<const Expected*, ComplexPtr>> loaded;
  for (const auto& e : manifest()) {
    const auto path = cfg.corpus / (std::string(e.name) + ".scx");
    if (!std::filesystem::exists(path)) fail(ErrorCode::InvalidInput, "corpus file missing: " + std::string(e.name) + ".scx");
    loaded.emplace_back(&e, share(read_complex(path)));
  }

  Checker c;
  for (const auto& [e, k] : loaded) {
    const std::string name = e->name;
    c.check(name, "boundary_squared_zero", [&] { return boundary_squared_zero(*k); });
    c.check(name, "parse_print_round_trip", [&] { return parse_complex(format_complex(*k)) == *k; });
    const auto z = Cohomology::compute(Space(k), Ring::Z);
    const auto f = Cohomology::compute(Space(k), Ring::Z2);
    c.check(name, "cohomology_table", [&] {
      for (int d = 0; d <= k->dim(); ++d) {
        if (!(z->group(d)->group() == e->integral[static_cast<std::size_t>(d)])) return false;
        if (f->group(d)->group().generator_count() != e->mod2[static_cast<std::size_t>(d)]) return false;
      }
      return true;
    });
    c.check(name, "basis_round_trip", [&] { return basis_round_trip(*z, k->dim()) && basis_round_trip(*f, k->dim()); });
    c.check(name, "bockstein_image_is_two_torsion", [&] {
      const GroupHom beta = bockstein_map(f->group(1), z->group(2));
      std::size_t hit = 0;
      const auto torsion2 = two_torsion_elements(z->group(2)->group());
      for (const auto& y : torsion2)
        if (beta.preimage(y)) ++hit;
      for (const auto& img : beta.images())
        if (!(Integer(2) * img).is_zero()) return false;
      return hit == torsion2.size();
    });
    if (e->closed_oriented_4) check_manifold(c, name, k);
  }
  if (cfg.seed) check_random(c, *cfg.seed);

  Json body{{"checks", c.rows()}, {"failures", c.failures()}, {"pass", c.failures() == 0}};
  return {c.failures() == 0 ? kOk : kInternalError, body};
}

}  // namespace spinc::cli
