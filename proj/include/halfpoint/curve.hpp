#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halfpoint/fields.hpp"

namespace halfpoint {

/// Affine point or the point at infinity.
struct Point {
  bool infinity = true;
  Elem x, y;

  static Point inf() { return Point{}; }
  static Point affine(Elem px, Elem py) { return Point{false, std::move(px), std::move(py)}; }
};

/// Invariants of a finite abelian group of rank <= 2:
/// E(F_q) = Z/n1 + Z/n2 with n1 | n2. The paper's "Z/2mZ + Z/2Z"
/// statements render as (2, 2m).
struct GroupShape {
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Witness for a curve isomorphism x -> u^2 x + r, y -> u^3 y: the sorted
/// roots of the domain map onto the roots of the codomain via perm.
struct IsoWitness {
  Elem u;
  Elem r;
  std::array<int, 3> perm{0, 1, 2};  // domain root i -> codomain root perm[i]
};

/// y^2 = (x - alpha1)(x - alpha2)(x - alpha3) with distinct roots, i.e.
/// full rational 2-torsion. Roots are stored sorted in the field's
/// canonical order, so curves equal up to root permutation compare equal.
class Curve {
 public:
  Curve(FieldPtr F, const Elem& a1, const Elem& a2, const Elem& a3);

  const FieldPtr& field() const { return F_; }
  const std::array<Elem, 3>& roots() const { return alpha_; }
  /// 1-based order-2 point W_i = (alpha_i, 0).
  Point w(int i) const { return Point::affine(alpha_[i - 1], F_->zero()); }

  /// Cubic coefficients of the expanded right-hand side
  /// x^3 + a2 x^2 + a4 x + a6.
  const Elem& a2() const { return a2_; }
  const Elem& a4() const { return a4_; }
  const Elem& a6() const { return a6_; }
  Elem rhs(const Elem& x) const;

  bool onCurve(const Point& P) const;
  bool eqPoint(const Point& P, const Point& Q) const;
  /// Canonical point order: infinity first, then by (x, y).
  bool lessPoint(const Point& P, const Point& Q) const;

  Point negate(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;
  Point dbl(const Point& P) const { return add(P, P); }
  Point sub(const Point& P, const Point& Q) const { return add(P, negate(Q)); }
  Point scalarMul(const Point& P, long long n) const;

  bool operator==(const Curve& other) const;
  std::string str() const;

  std::string pointStr(const Point& P) const;
  Point parsePoint(std::string_view text) const;

 private:
  FieldPtr F_;
  std::array<Elem, 3> alpha_;
  Elem a2_, a4_, a6_;
};

/// The kappa-scaling isomorphism: roots alpha_i / kappa^2,
/// (x, y) -> (x / kappa^2, y / kappa^3). A group isomorphism.
class ScaleIso {
 public:
  ScaleIso(Curve domain, const Elem& kappa);

  const Curve& domain() const { return domain_; }
  const Curve& codomain() const { return codomain_; }
  const Elem& kappa() const { return kappa_; }
  Point forward(const Point& P) const;
  Point backward(const Point& P) const;

 private:
  Curve domain_;
  Curve codomain_;
  Elem kappa_;
};

/// Search for an isomorphism x -> u^2 x + r between curves over the same
/// field. For each of the six root permutations, u^2 is pinned by the
/// root-difference ratio and tested for squareness, so the search is
/// exact over finite fields and Q alike.
std::optional<IsoWitness> isIsomorphic(const Curve& C1, const Curve& C2);
bool verifyWitness(const Curve& C1, const Curve& C2, const IsoWitness& w);

/// Least n >= 1 with nP = infinity. Over Q the search is bounded
/// (default 16); NotTorsionWithinBound past the bound.
unsigned pointOrder(const Curve& C, const Point& P, unsigned rationalBound = 16);
/// Same, using a known group order to replace the linear scan.
unsigned pointOrderGivenN(const Curve& C, const Point& P, std::uint64_t n);

/// Every point of E(F_q), deterministic order: infinity, then by x index
/// with the canonical root's y first.
std::vector<Point> allPoints(const Curve& C);

struct GroupInfo {
  GroupShape shape;
  std::uint64_t count = 0;
};

/// Point count by full enumeration plus the shape (n2 = group exponent).
/// The Hasse bound is asserted; violation signals an arithmetic bug.
GroupInfo groupStructure(const Curve& C, std::uint64_t qBound = 1u << 14);

}  // namespace halfpoint
