#pragma once

#include <string>
#include <utility>
#include <vector>

#include "halfpoint/halving.hpp"

namespace halfpoint {

enum class FamilyId { E1, E2, Full4, E4, E3, Fam3General, E5General, E5XiEta };

std::string_view familyName(FamilyId id);
FamilyId familyFromName(std::string_view name);

struct MarkedPoint {
  Point pt;
  unsigned order = 0;
};

/// A family member: the curve, its marked torsion points (declared orders
/// verified at construction), the full orbit where the construction lists
/// a +- family of points, and the shape of the subgroup the marked points
/// generate.
struct MarkedCurve {
  Curve curve;
  std::vector<MarkedPoint> marked;
  std::vector<MarkedPoint> orbit;
  GroupShape generatedShape;
};

/// y^2 = (x + lambda^2)(x + 1)x, lambda not in {0, +-1}: four order-4
/// points over W3 = (0,0); with W1 the marked subgroup is (2,4).
MarkedCurve familyE1(const FieldPtr& F, const Elem& lambda);

/// Roots ((a^2-b^2)^2, (a^2+b^2)^2, 0) over a field containing sqrt(-1);
/// all twelve order-4 points are rational, marked subgroup (4,4).
MarkedCurve familyFull4(const FieldPtr& F, const Elem& a, const Elem& b);

/// y^2 = (x + (lambda^2-1)^2/(lambda^2+1)^2)(x + 1)x. When sqrt(-1)
/// exists the marked generators realize (4,4), otherwise the (2,4) part
/// is marked.
MarkedCurve familyE2(const FieldPtr& F, const Elem& lambda);

/// E_{1,lambda} with lambda = ((c - 1/c)/2)^2 and the closed-form order-8
/// point R with 4R = (0,0); marked subgroup (2,8).
MarkedCurve familyE4(const FieldPtr& F, const Elem& c);

enum class Fam3Class { Order3, Plain };

struct Fam3Result {
  MarkedCurve mc;
  Fam3Class classification = Fam3Class::Plain;
  Point basePoint;             // P = (0, a1 a2 a3)
  std::array<Point, 4> halves; // the closed-form halves of P
};

/// y^2 = (x + a1^2)(x + a2^2)(x + a3^2) with P = (0, a1 a2 a3) and its
/// four closed-form halves. Classified order3 when the four-relation test
/// holds; then P has order 3, one half is -P and the other three have
/// order 6 and are marked.
Fam3Result fam3General(const FieldPtr& F, const Elem& a1, const Elem& a2, const Elem& a3);

/// Roots (-lambda^2, -1, -(lambda/(lambda+1))^2), lambda not in
/// {0, +-1, -2, -1/2}: marked order-3 point (0, lambda^2/(lambda+1)),
/// an order-6 half and a complementary W_j; marked subgroup (2,6).
MarkedCurve familyE3(const FieldPtr& F, const Elem& lambda);

/// Roots (-beta_i^2/4) with beta_1 = -a1^2+a2^2+a3^2 etc. and the marked
/// order-5 point P = (0, -beta1 beta2 beta3 / 8); marked subgroup (2,10).
/// Domain: six distinct +-a_i, all beta_i nonzero, the cubic relation
/// vanishing and the quartic product nonzero.
MarkedCurve familyE5General(const FieldPtr& F, const Elem& a1, const Elem& a2, const Elem& a3);

/// The (xi, eta) parameterization of the order-5 family: eta^2 =
/// xi(xi^2 + xi - 1), xi not in {0, +-1}, eta != 0. Validates the
/// recomputed (lambda, mu) through the general constructor and returns
/// its kappa-scaling with kappa = (lambda^2 + mu^2 - 1)/2.
MarkedCurve familyE5(const FieldPtr& F, const Elem& xi, const Elem& eta);

/// All admissible (xi, eta) over a finite field, canonical order.
std::vector<std::pair<Elem, Elem>> enumerateE5Params(const FieldPtr& F);

/// All (c, d) with both parameters admissible for familyE4 and
/// c - 1/c = i(d - 1/d), i the canonical sqrt(-1). Finite fields only.
std::vector<std::pair<Elem, Elem>> solveM84(const FieldPtr& F);

enum class KubertKind { E1, E3, E4 };

KubertKind kubertKindFromName(std::string_view name);
std::string_view kubertKindName(KubertKind k);

struct KubertResult {
  Elem parameter;                    // lambda (E1, E3) or c (E4)
  std::optional<Curve> kubertCurve;  // split form of the defining equation (verify mode)
  std::optional<IsoWitness> witness; // isomorphism onto the family curve (verify mode)
};

/// Convert a Kubert-table parameter t to the family parameter:
/// E1: lambda = (t - 1/4)/(t + 1/4); E3: lambda = -(t-5)/(t-1);
/// E4: c = 4t + 1. With verify=true the split Kubert curve is built and
/// an isomorphism witness onto the family curve is required.
KubertResult kubertConvert(const FieldPtr& F, KubertKind kind, const Elem& t, bool verify);

/// The split-cubic form of the Kubert curve (finite fields find the
/// cubic's roots by scanning; over Q the closed-form roots are used —
/// not available for E4 over Q).
Curve kubertSplitCurve(const FieldPtr& F, KubertKind kind, const Elem& t);

/// One admissible family member per parameter over a finite field, with a
/// printable parameter description. Supports E1, E2, E4, E3, E5XiEta.
struct FamilyMember {
  std::string param;
  MarkedCurve mc;
};
std::vector<FamilyMember> enumerateFamily(const FieldPtr& F, FamilyId id);

}  // namespace halfpoint
