#pragma once

#include <vector>

#include "halfpoint/curve.hpp"

namespace halfpoint {

/// Square roots r_i of x0 - alpha_i normalized by r1 r2 r3 = -y0; the
/// certificate that parameterizes the four halves of P = (x0, y0).
struct RootTriple {
  Elem r1, r2, r3;
  const Elem& operator[](int i) const { return i == 0 ? r1 : (i == 1 ? r2 : r3); }
};

struct HalfPoint {
  Point q;
  RootTriple triple;
};

/// Empty, or exactly the four halves in the fixed sign-pattern order
/// (r1,r2,r3), (r1,-r2,-r3), (-r1,r2,-r3), (-r1,-r2,r3) starting from the
/// canonical triple.
using HalfSet = std::vector<HalfPoint>;

/// P lies in 2E(K) iff all three x0 - alpha_i are squares in K.
/// Infinity counts as halvable (its halves are the 2-torsion).
bool isHalvable(const Curve& C, const Point& P);

/// The canonical triple, or nothing if some x0 - alpha_i is a non-square.
/// For y0 != 0: r1, r2 take canonical square roots and r3 is forced by
/// r1 r2 r3 = -y0. For y0 = 0 the zero root is pinned and the others take
/// canonical roots (the product constraint is vacuous).
std::optional<RootTriple> canonicalRootTriple(const Curve& C, const Point& P);

/// The triple with the two roots other than `keep` (0-based) negated.
RootTriple flipRoots(const Field& F, const RootTriple& t, int keep);

/// The four K-rational halves of P with their root triples, or empty.
/// Use kernelOfTwo for P = infinity.
HalfSet halves(const Curve& C, const Point& P);

/// The half of P determined by a specific root triple.
Point halfFromTriple(const Curve& C, const Point& P, const RootTriple& t);

/// {infinity, W1, W2, W3}: the four halves of infinity.
std::vector<Point> kernelOfTwo(const Curve& C);

/// From the half Q (with its triple), the half obtained by negating the
/// other two roots: returns Q_i and checks that Q_i - Q = W_i and that
/// Q_i, -Q, W_i are collinear on y = (r_j + r_k)(x - alpha_i).
/// flip is 1-based and refers to the curve's stored (sorted) root order.
Point halfOffset(const Curve& C, const Point& P, const HalfPoint& half, int flip);

/// Recover the generating triple from a known half: 2Q = P, else NotAHalf.
RootTriple recoverRoots(const Curve& C, const Point& P, const Point& Q);

/// All K-rational R with 2^n R = P, by breadth-first sign-choice search
/// over rational halves, deduplicated and canonically sorted. For n = 2
/// the result is cross-checked against the direct quarter-point formula.
std::vector<Point> dividePow2(const Curve& C, const Point& P, unsigned n);

/// The direct quarter-point construction: level-0 and level-1 root
/// triples composed in closed form. Returns all K-rational R with 4R = P.
std::vector<Point> quarterPointsFormula(const Curve& C, const Point& P);

}  // namespace halfpoint
