#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinc/cohomology.hpp"
#include "spinc/structures.hpp"

namespace spinc {

/// An integral relative 2-cocycle on (X, N) standing in for a trivialization
/// over N; j^* of its class must be c1 of the structure it lifts.
struct RelativeChernLift {
  Cochain cocycle;
  CohomologyClass cls;  // in H^2(X, N; Z)
};

enum class LiftMode { User, Engine };

struct TransportProblem {
  SubcomplexPair pair1;  // (X1, N1)
  SubcomplexPair pair2;  // (X2, N2)
  SimplicialMap g;       // X1 -> X2
  SpincStructure s1_ref;  // on X1
  SpincStructure s2;      // on X2
  /// Both present in user mode, both absent in engine mode.
  std::optional<Cochain> lift1;
  std::optional<Cochain> lift2;

  LiftMode mode() const { return lift1 ? LiftMode::User : LiftMode::Engine; }
};

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct HypothesisReport {
  Verdict restriction_isomorphism;  // g|N1 is a simplicial isomorphism onto N2
  Verdict no_two_torsion;           // H^2(Xi, Ni; Z) has no even invariant factor
  Verdict collapse1, collapse2;     // Ni collapses to a 1-complex (advisory)
  Verdict induced_isomorphism;      // g^* on H^1(;Z/2), H^2(;Z), H^2(;Z/2)

  /// Verdicts that stop the transport; collapse failures count only when strict.
  std::vector<std::string> blocking(bool strict) const;
};

HypothesisReport verify_hypotheses(const TransportProblem& p);

/// Canonical preimage of c1(s) under j^*: H^2(X, N; Z) -> H^2(X; Z). Fails
/// with NotInImage when c1(s) is outside the image.
RelativeChernLift choose_relative_lift(const SpincStructure& s, const SubcomplexPair& pair);

/// Images in H^2(X, N; Z) of the generators of H^1(N; Z) under the
/// connecting map; they generate ker j^*.
std::vector<CohomologyClass> connecting_images(const SubcomplexPair& pair);

struct TransportResult {
  HypothesisReport hypotheses;
  LiftMode mode = LiftMode::Engine;
  RelativeChernLift lift1;
  RelativeChernLift lift2;
  bool repaired = false;  // engine mode moved lift2 within ker j^* to fix parity
  CohomologyClass delta;  // in H^2(X1, N1; Z)
  CohomologyClass d;      // in H^2(X1; Z)
  /// (im j^*)[2] in H^2(X1; Z): the possible shifts of d under other lifts.
  std::vector<GroupElement> ambiguity;
  SpincStructure transported;  // g^* s2 = act(s1_ref, d)
};

/// Runs the relative Chern class procedure. Fails with HypothesisFailed,
/// NotInImage, IncompatibleLifts or ConsistencyFailure.
TransportResult transport(const TransportProblem& p, bool strict = false);

}  // namespace spinc
