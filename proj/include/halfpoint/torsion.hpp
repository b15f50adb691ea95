#pragma once

#include <optional>

#include "halfpoint/halving.hpp"

namespace halfpoint {

/// Explicit sign choice of root triples witnessing order 3 or 5.
/// Order 3: r1 r2 + r2 r3 + r3 r1 = 0.
/// Order 5: the level-0 sum is nonzero and cancels against the level-1
/// sum, where (r_i^(1))^2 = (r_i + r_j)(r_i + r_k).
struct OrderCertificate {
  unsigned order = 0;  // 3 or 5
  RootTriple level0;
  std::optional<RootTriple> level1;  // order 5 only
};

/// Certificate iff P has order 3. The search runs over the four sign
/// patterns normalized by r1 r2 r3 = -y0 (all eight patterns up to global
/// negation). Characteristic 3 is fine.
std::optional<OrderCertificate> isOrder3(const Curve& C, const Point& P);

/// Certificate iff P has order 5: a two-level sign search with both
/// products normalized as in the halving construction. Characteristic 5
/// is fine.
std::optional<OrderCertificate> isOrder5(const Curve& C, const Point& P);

/// Results of evaluating the two symmetric-root identities at one triple.
/// m0/m1 are the sign-corrected forms the torsion search relies on;
/// m0AsPrinted/m1AsPrinted carry the opposite sign on the factored side
/// and fail at (1,1,1). Kept side by side as regression documentation.
struct IdentityEval {
  bool m0 = false;
  bool m1 = false;
  bool m0AsPrinted = false;
  bool m1AsPrinted = false;
};

IdentityEval evalSymmetricIdentities(const FieldPtr& F, const Elem& t1, const Elem& t2,
                                     const Elem& t3);

/// True iff both sign-corrected identities hold at the evaluation point.
bool checkSymmetricIdentities(const FieldPtr& F, const Elem& t1, const Elem& t2, const Elem& t3);

}  // namespace halfpoint
