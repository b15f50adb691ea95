#include "halfpoint/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfpoint {

namespace {

MarkedPoint mk(const Curve& C, const Point& p, unsigned ord) {
  if (!C.onCurve(p)) throw std::logic_error("marked point is not on the curve");
  if (pointOrder(C, p) != ord)
    throw std::logic_error("marked point does not have its declared order");
  return MarkedPoint{p, ord};
}

Fx fx(const FieldPtr& F, long long n) { return Fx(F, n); }

}  // namespace

std::string_view familyName(FamilyId id) {
  switch (id) {
    case FamilyId::E1: return "e1";
    case FamilyId::E2: return "e2";
    case FamilyId::Full4: return "full4";
    case FamilyId::E4: return "e4";
    case FamilyId::E3: return "e3";
    case FamilyId::Fam3General: return "fam3";
    case FamilyId::E5General: return "e5gen";
    case FamilyId::E5XiEta: return "e5";
  }
  return "?";
}

FamilyId familyFromName(std::string_view name) {
  if (name == "e1") return FamilyId::E1;
  if (name == "e2") return FamilyId::E2;
  if (name == "full4") return FamilyId::Full4;
  if (name == "e4") return FamilyId::E4;
  if (name == "e3") return FamilyId::E3;
  if (name == "fam3") return FamilyId::Fam3General;
  if (name == "e5gen") return FamilyId::E5General;
  if (name == "e5") return FamilyId::E5XiEta;
  fail(Err::ParseError, "unknown family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

MarkedCurve familyE1(const FieldPtr& F, const Elem& lambda) {
  Fx lam(F, lambda);
  if (lam.isZero() || lam == fx(F, 1) || lam == fx(F, -1))
    fail(Err::BadParameter, "lambda must avoid {0, 1, -1}");
  Curve C(F, (-lam.sq()).v(), F->fromInt(-1), F->fromInt(0));
  Point w3 = Point::affine(F->zero(), F->zero());
  HalfSet hs = halves(C, w3);
  if (hs.size() != 4) throw std::logic_error("W3 must be halvable on this family");

  MarkedCurve out{C, {}, {}, GroupShape{2, 4}};
  out.marked.push_back(mk(C, hs[0].q, 4));
  out.marked.push_back(mk(C, Point::affine((-lam.sq()).v(), F->zero()), 2));
  for (const auto& h : hs) out.orbit.push_back(mk(C, h.q, 4));
  return out;
}

MarkedCurve familyFull4(const FieldPtr& F, const Elem& ae, const Elem& be) {
  auto iroot = F->sqrt(F->fromInt(-1));
  if (!iroot) fail(Err::NoSqrtMinusOne, "the field must contain sqrt(-1)");
  Fx i(F, iroot->first);
  Fx a(F, ae), b(F, be);
  if (a.isZero() || b.isZero()) fail(Err::BadParameter, "a and b must be nonzero");
  if (a == b || a == -b) fail(Err::BadParameter, "a = +-b is excluded");
  if (a == i * b || a == -(i * b)) fail(Err::BadParameter, "a = +-i b is excluded");

  Fx alpha1 = (a.sq() - b.sq()).sq();
  Fx alpha2 = (a.sq() + b.sq()).sq();
  Curve C(F, alpha1.v(), alpha2.v(), F->zero());

  MarkedCurve out{C, {}, {}, GroupShape{4, 4}};
  Point w2 = Point::affine(alpha2.v(), F->zero());
  Point w3 = Point::affine(F->zero(), F->zero());
  HalfSet over2 = halves(C, w2), over3 = halves(C, w3);
  if (over2.size() != 4 || over3.size() != 4)
    throw std::logic_error("all order-2 points must be halvable here");
  out.marked.push_back(mk(C, over2[0].q, 4));
  out.marked.push_back(mk(C, over3[0].q, 4));

  // the twelve order-4 points, as enumerated by the construction
  auto push = [&](const Fx& x, const Fx& y) {
    out.orbit.push_back(mk(C, Point::affine(x.v(), y.v()), 4));
    out.orbit.push_back(mk(C, Point::affine(x.v(), (-y).v()), 4));
  };
  Fx s = a.sq() + b.sq(), d = a.sq() - b.sq();
  push(s * (a + b).sq(), 2 * a * b * s * (a + b).sq());
  push(s * (a - b).sq(), 2 * a * b * s * (a - b).sq());
  // x = a^4 - b^4 comes from r1 r2 = +(a^4 - b^4), whose slope factor is
  // r1 + r2 = -2i b^2 (and symmetrically a^2 for the opposite abscissa)
  Fx q = a.sq().sq() - b.sq().sq();  // a^4 - b^4
  push(q, 2 * i * b.sq() * q);
  push(-q, 2 * i * a.sq() * (-q));
  push(d * (a + i * b).sq(), 2 * i * a * b * d * (a + i * b).sq());
  push(d * (a - i * b).sq(), 2 * i * a * b * d * (a - i * b).sq());
  return out;
}

MarkedCurve familyE2(const FieldPtr& F, const Elem& lambda) {
  Fx lam(F, lambda);
  if (lam.isZero() || lam == fx(F, 1) || lam == fx(F, -1))
    fail(Err::BadParameter, "lambda must avoid {0, 1, -1}");
  if ((lam.sq() + 1).isZero()) fail(Err::BadParameter, "lambda^2 + 1 must be nonzero");
  Fx delta = (lam.sq() - 1) / (lam.sq() + 1);
  Curve C(F, (-delta.sq()).v(), F->fromInt(-1), F->fromInt(0));

  auto iroot = F->sqrt(F->fromInt(-1));
  if (iroot) {
    // E_{a,b} with (a,b) = (lambda,1) scaled by kappa = i (lambda^2 + 1)
    MarkedCurve full = familyFull4(F, lambda, F->one());
    Fx kappa = Fx(F, iroot->first) * (lam.sq() + 1);
    ScaleIso iso(full.curve, kappa.v());
    if (!(iso.codomain() == C)) throw std::logic_error("scaling must land on the e2 curve");
    MarkedCurve out{C, {}, {}, GroupShape{4, 4}};
    for (const auto& m : full.marked) out.marked.push_back(mk(C, iso.forward(m.pt), m.order));
    for (const auto& m : full.orbit) out.orbit.push_back(mk(C, iso.forward(m.pt), m.order));
    return out;
  }

  // without sqrt(-1) only the (2,4) part is guaranteed
  Point w3 = Point::affine(F->zero(), F->zero());
  HalfSet hs = halves(C, w3);
  if (hs.size() != 4) throw std::logic_error("W3 must be halvable on this family");
  MarkedCurve out{C, {}, {}, GroupShape{2, 4}};
  out.marked.push_back(mk(C, hs[0].q, 4));
  out.marked.push_back(mk(C, Point::affine((-delta.sq()).v(), F->zero()), 2));
  for (const auto& h : hs) out.orbit.push_back(mk(C, h.q, 4));
  return out;
}

MarkedCurve familyE4(const FieldPtr& F, const Elem& ce) {
  Fx c(F, ce);
  if (c.isZero() || c == fx(F, 1) || c == fx(F, -1))
    fail(Err::BadParameter, "c must avoid {0, 1, -1}");
  Fx lam = ((c - 1 / c) / 2).sq();
  if (lam.isZero() || lam == fx(F, 1) || lam == fx(F, -1))
    fail(Err::BadParameter, "c yields a degenerate lambda (c in {+-1+-sqrt(2), +-sqrt(-1)})");

  Curve C(F, (-lam.sq()).v(), F->fromInt(-1), F->fromInt(0));
  Fx xr = (1 - c).sq() * (1 - c) * (c + 1) / (4 * c);
  Fx ci = 1 / c;
  Fx yr = -((c.sq() - ci.sq()) * ((c - 2).sq() - ci.sq()) * c) / 16;
  Point R = Point::affine(xr.v(), yr.v());

  MarkedCurve out{C, {}, {}, GroupShape{2, 8}};
  out.marked.push_back(mk(C, R, 8));
  out.marked.push_back(mk(C, Point::affine((-lam.sq()).v(), F->zero()), 2));
  Point w3 = Point::affine(F->zero(), F->zero());
  if (!C.eqPoint(C.scalarMul(R, 4), w3)) throw std::logic_error("4R must be (0,0)");
  return out;
}

// ---------------------------------------------------------------------------

Fam3Result fam3General(const FieldPtr& F, const Elem& a1e, const Elem& a2e, const Elem& a3e) {
  Fx a1(F, a1e), a2(F, a2e), a3(F, a3e);
  if (a1.sq() == a2.sq() || a2.sq() == a3.sq() || a1.sq() == a3.sq())
    fail(Err::BadParameter, "a1^2, a2^2, a3^2 must be pairwise distinct");

  Curve C(F, (-a1.sq()).v(), (-a2.sq()).v(), (-a3.sq()).v());
  Point P = Point::affine(F->zero(), (a1 * a2 * a3).v());

  std::array<Point, 4> hs = {
      Point::affine((a2 * a3 - a1 * a2 - a3 * a1).v(), ((a1 - a2) * (a2 + a3) * (a3 - a1)).v()),
      Point::affine((a3 * a1 - a1 * a2 - a2 * a3).v(), ((a1 - a2) * (a2 - a3) * (a3 + a1)).v()),
      Point::affine((a1 * a2 - a2 * a3 - a3 * a1).v(), ((a1 + a2) * (a2 - a3) * (a3 - a1)).v()),
      Point::affine((a1 * a2 + a2 * a3 + a3 * a1).v(), ((a1 + a2) * (a2 + a3) * (a3 + a1)).v())};
  for (const Point& q : hs)
    if (!C.onCurve(q) || !C.eqPoint(C.dbl(q), P))
      throw std::logic_error("closed-form half is wrong");

  bool nonzero = !a1.isZero() && !a2.isZero() && !a3.isZero();
  bool rel = (a2 * a3 == a1 * a2 + a3 * a1) || (a3 * a1 == a1 * a2 + a2 * a3) ||
             (a1 * a2 == a2 * a3 + a3 * a1) || (a1 * a2 + a2 * a3 + a3 * a1).isZero();

  Fam3Result out{MarkedCurve{C, {}, {}, GroupShape{1, 1}}, Fam3Class::Plain, P, hs};
  if (nonzero && rel) {
    out.classification = Fam3Class::Order3;
    out.mc.generatedShape = GroupShape{2, 6};
    out.mc.marked.push_back(mk(C, P, 3));
    for (const Point& q : hs) {
      if (C.eqPoint(q, C.negate(P))) continue;  // the order-3 half is -P
      out.mc.marked.push_back(mk(C, q, 6));
    }
  }
  return out;
}

MarkedCurve familyE3(const FieldPtr& F, const Elem& lambda) {
  Fx lam(F, lambda);
  for (long long bad : {0ll, 1ll, -1ll, -2ll})
    if (lam == fx(F, bad)) fail(Err::BadParameter, "lambda must avoid {0, 1, -1, -2, -1/2}");
  if (lam == fx(F, -1) / 2) fail(Err::BadParameter, "lambda must avoid {0, 1, -1, -2, -1/2}");

  Fx a3 = lam / (lam + 1);
  Fam3Result base = fam3General(F, lambda, F->one(), a3.v());
  if (base.classification != Fam3Class::Order3)
    throw std::logic_error("e3 members always carry an order-3 point");

  // marked: P, one order-6 half, and a W_j independent of it
  const Curve& C = base.mc.curve;
  MarkedCurve out{C, {}, {}, GroupShape{2, 6}};
  out.marked.push_back(mk(C, base.basePoint, 3));
  Point six = base.halves[3];  // (sum of products, product of sums); never -P here
  if (C.eqPoint(six, C.negate(base.basePoint))) six = base.halves[0];
  out.marked.push_back(mk(C, six, 6));
  Point w = C.scalarMul(six, 3);
  for (int j = 1; j <= 3; ++j) {
    if (!C.eqPoint(C.w(j), w)) {
      out.marked.push_back(mk(C, C.w(j), 2));
      break;
    }
  }
  for (const Point& q : base.halves)
    out.orbit.push_back(mk(C, q, C.eqPoint(q, C.negate(base.basePoint)) ? 3 : 6));
  return out;
}

// ---------------------------------------------------------------------------

MarkedCurve familyE5General(const FieldPtr& F, const Elem& a1e, const Elem& a2e,
                            const Elem& a3e) {
  Fx a1(F, a1e), a2(F, a2e), a3(F, a3e);
  // six distinct +-a_i
  if (a1.isZero() || a2.isZero() || a3.isZero() || a1.sq() == a2.sq() || a2.sq() == a3.sq() ||
      a1.sq() == a3.sq())
    fail(Err::BadParameter, "six-distinct clause: +-a1, +-a2, +-a3 must be distinct");
  Fx b1 = -a1.sq() + a2.sq() + a3.sq();
  Fx b2 = a1.sq() - a2.sq() + a3.sq();
  Fx b3 = a1.sq() + a2.sq() - a3.sq();
  if (b1.isZero() || b2.isZero() || b3.isZero())
    fail(Err::BadParameter, "beta clause: all beta_i must be nonzero");
  Fx cubic = a1.sq() * a1 + a2.sq() * a2 + a3.sq() * a3 - a1.sq() * a2 - a1 * a2.sq() -
             a2.sq() * a3 - a2 * a3.sq() - a1.sq() * a3 - a1 * a3.sq() - 2 * a1 * a2 * a3;
  if (!cubic.isZero()) fail(Err::BadParameter, "cubic clause: the order-5 relation must vanish");
  Fx quartic = (a1 + a2 + a3) * (a1 - a2 - a3) * (a1 + a2 - a3) * (a1 - a2 + a3);
  if (quartic.isZero())
    fail(Err::BadParameter, "quartic clause: the product must be nonzero");

  Curve C(F, (-(b1 / 2).sq()).v(), (-(b2 / 2).sq()).v(), (-(b3 / 2).sq()).v());
  Point P = Point::affine(F->zero(), (-(b1 * b2 * b3) / 8).v());

  MarkedCurve out{C, {}, {}, GroupShape{2, 10}};
  out.marked.push_back(mk(C, P, 5));
  out.marked.push_back(mk(C, C.w(1), 2));
  out.marked.push_back(mk(C, C.w(2), 2));
  return out;
}

MarkedCurve familyE5(const FieldPtr& F, const Elem& xie, const Elem& etae) {
  Fx xi(F, xie), eta(F, etae);
  if (eta.sq() != xi * (xi.sq() + xi - 1))
    fail(Err::NotOnParameterCurve, "eta^2 = xi(xi^2 + xi - 1) must hold");
  if (xi.isZero() || xi == fx(F, 1) || xi == fx(F, -1))
    fail(Err::BadParameter, "xi must avoid {0, 1, -1}");
  if (eta.isZero())
    fail(Err::BadParameter, "eta must be nonzero (xi^2 + xi - 1 = 0 is excluded)");

  Fx lam = (xi + eta / xi) / 2;
  Fx mu = (xi - eta / xi) / 2;
  MarkedCurve general = familyE5General(F, lam.v(), mu.v(), F->one());
  Fx kappa = (lam.sq() + mu.sq() - 1) / 2;  // = beta3 / 2
  ScaleIso iso(general.curve, kappa.v());

  MarkedCurve out{iso.codomain(), {}, {}, GroupShape{2, 10}};
  for (const auto& m : general.marked) out.marked.push_back(mk(out.curve, iso.forward(m.pt), m.order));
  return out;
}

std::vector<std::pair<Elem, Elem>> enumerateE5Params(const FieldPtr& F) {
  std::vector<std::pair<Elem, Elem>> out;
  std::uint64_t q = F->order();
  for (std::uint64_t i = 0; i < q; ++i) {
    Elem xi = F->elementAt(i);
    Fx x(F, xi);
    if (x.isZero() || x == fx(F, 1) || x == fx(F, -1)) continue;
    Fx rhs = x * (x.sq() + x - 1);
    if (rhs.isZero()) continue;
    auto r = F->sqrt(rhs.v());
    if (!r) continue;
    for (const Elem& eta : {r->first, r->second}) {
      try {
        familyE5(F, xi, eta);
        out.emplace_back(xi, eta);
      } catch (const DomainError&) {
        // inadmissible (xi, eta); skip
      }
    }
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> solveM84(const FieldPtr& F) {
  auto iroot = F->sqrt(F->fromInt(-1));
  if (!iroot) fail(Err::NoSqrtMinusOne, "the field must contain sqrt(-1)");
  Fx i(F, iroot->first);

  std::uint64_t q = F->order();
  auto admissible = [&](const Fx& c) {
    if (c.isZero() || c == fx(F, 1) || c == fx(F, -1)) return false;
    Fx lam = ((c - 1 / c) / 2).sq();
    return !lam.isZero() && lam != fx(F, 1) && lam != fx(F, -1);
  };
  std::vector<std::pair<Elem, Elem>> out;
  for (std::uint64_t ci = 0; ci < q; ++ci) {
    Fx c(F, F->elementAt(ci));
    if (!admissible(c)) continue;
    Fx lhs = c - 1 / c;
    for (std::uint64_t di = 0; di < q; ++di) {
      Fx d(F, F->elementAt(di));
      if (!admissible(d)) continue;
      if (lhs == i * (d - 1 / d)) out.emplace_back(c.v(), d.v());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

KubertKind kubertKindFromName(std::string_view name) {
  if (name == "e1") return KubertKind::E1;
  if (name == "e3") return KubertKind::E3;
  if (name == "e4") return KubertKind::E4;
  fail(Err::ParseError, "unknown kubert kind '" + std::string(name) + "'");
}

std::string_view kubertKindName(KubertKind k) {
  switch (k) {
    case KubertKind::E1: return "e1";
    case KubertKind::E3: return "e3";
    case KubertKind::E4: return "e4";
  }
  return "?";
}

namespace {

// Kubert data (a(t), b(t)) of y^2 + (1-a)xy - by = x^3 - bx^2 for each
// kind; validates the kind-specific domain.
std::pair<Fx, Fx> kubertData(const FieldPtr& F, KubertKind kind, const Fx& t) {
  switch (kind) {
    case KubertKind::E1: {
      Fx quarter = fx(F, 1) / 4;
      if (t == quarter || t == -quarter) fail(Err::BadParameter, "t = +-1/4 is excluded");
      return {fx(F, 0), t.sq() - fx(F, 1) / 16};
    }
    case KubertKind::E3: {
      if ((t.sq() - 9).isZero()) fail(Err::BadParameter, "t = +-3 is excluded");
      if (t == fx(F, 1)) fail(Err::BadParameter, "t = 1 is excluded");
      Fx den = t.sq() - 9;
      Fx a = (10 - 2 * t) / den;
      Fx b = -2 * (t - 1).sq() * (t - 5) / den.sq();
      if (b.isZero()) fail(Err::BadParameter, "t = 5 is excluded");
      return {a, b};
    }
    case KubertKind::E4: {
      if (t.isZero()) fail(Err::BadParameter, "t = 0 is excluded");
      if (t == fx(F, -1) / 2 || t == fx(F, -1) / 4)
        fail(Err::BadParameter, "t in {-1/2, -1/4} is excluded");
      Fx b8 = 8 * t.sq() - 1;
      if (b8.isZero()) fail(Err::BadParameter, "8t^2 - 1 = 0 is excluded");
      Fx u = (2 * t + 1) * (8 * t.sq() + 4 * t + 1);
      if (u.isZero()) fail(Err::BadParameter, "degenerate Kubert coefficients");
      Fx a = u / (2 * (4 * t + 1) * b8 * t);
      Fx b = u / b8.sq();
      return {a, b};
    }
  }
  fail(Err::BadParameter, "bad kind");
}

Elem kubertParameter(const FieldPtr& F, KubertKind kind, const Fx& t) {
  switch (kind) {
    case KubertKind::E1: {
      Fx quarter = fx(F, 1) / 4;
      if (t == quarter || t == -quarter) fail(Err::BadParameter, "t = +-1/4 is excluded");
      return ((t - quarter) / (t + quarter)).v();
    }
    case KubertKind::E3: {
      if (t == fx(F, 1)) fail(Err::BadParameter, "t = 1 is excluded");
      return (-(t - 5) / (t - 1)).v();
    }
    case KubertKind::E4:
      return (4 * t + 1).v();
  }
  fail(Err::BadParameter, "bad kind");
}

}  // namespace

Curve kubertSplitCurve(const FieldPtr& F, KubertKind kind, const Elem& te) {
  Fx t(F, te);
  auto [a, b] = kubertData(F, kind, t);
  if (!F->finite()) {
    switch (kind) {
      case KubertKind::E1:
        return Curve(F, (t.sq() - fx(F, 1) / 16).v(), (-(t / 2) - fx(F, 1) / 8).v(),
                     ((t / 2) - fx(F, 1) / 8).v());
      case KubertKind::E3:
        // roots of the (t^2-9)-scaled model; isomorphic to the split form
        return Curve(F, (-2 * (t - 5) * (t - 3) * (t + 3)).v(), (-2 * (t - 3) * (t - 1).sq()).v(),
                     (-(fx(F, 1) / 4) * (t - 5) * (t + 3) * (t - 1).sq()).v());
      case KubertKind::E4:
        fail(Err::UnsupportedField, "the e4 Kubert split over Q needs numeric root finding");
    }
  }
  // completed square: y1^2 = x^3 + (-b + (1-a)^2/4) x^2 - (b(1-a)/2) x + b^2/4
  Fx c2 = -b + (1 - a).sq() / 4;
  Fx c1 = -(b * (1 - a)) / 2;
  Fx c0 = b.sq() / 4;
  std::vector<Elem> roots;
  std::uint64_t q = F->order();
  for (std::uint64_t i = 0; i < q && roots.size() < 3; ++i) {
    Fx x(F, F->elementAt(i));
    if ((((x + c2) * x + c1) * x + c0).isZero()) roots.push_back(x.v());
  }
  if (roots.size() != 3)
    fail(Err::BadParameter, "the Kubert cubic does not split with distinct roots");
  return Curve(F, roots[0], roots[1], roots[2]);
}

KubertResult kubertConvert(const FieldPtr& F, KubertKind kind, const Elem& te, bool verify) {
  Fx t(F, te);
  kubertData(F, kind, t);  // domain validation
  Elem param = kubertParameter(F, kind, t);

  Curve famCurve = [&] {
    switch (kind) {
      case KubertKind::E1: return familyE1(F, param).curve;
      case KubertKind::E3: return familyE3(F, param).curve;
      case KubertKind::E4: return familyE4(F, param).curve;
    }
    fail(Err::BadParameter, "bad kind");
  }();

  KubertResult out{param, std::nullopt, std::nullopt};
  if (verify) {
    Curve kc = kubertSplitCurve(F, kind, te);
    auto w = isIsomorphic(kc, famCurve);
    if (!w) throw std::logic_error("Kubert curve is not isomorphic to its family member");
    out.kubertCurve = kc;
    out.witness = w;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<FamilyMember> enumerateFamily(const FieldPtr& F, FamilyId id) {
  if (!F->finite()) fail(Err::NotEnumerable, "family enumeration needs a finite field");
  std::vector<FamilyMember> out;
  std::uint64_t q = F->order();
  auto tryPush = [&](const std::string& desc, auto&& ctor) {
    try {
      out.push_back(FamilyMember{desc, ctor()});
    } catch (const DomainError&) {
      // inadmissible parameter
    }
  };
  switch (id) {
    case FamilyId::E1:
      for (std::uint64_t i = 0; i < q; ++i) {
        Elem lam = F->elementAt(i);
        tryPush("lambda=" + F->str(lam), [&] { return familyE1(F, lam); });
      }
      break;
    case FamilyId::E2:
      for (std::uint64_t i = 0; i < q; ++i) {
        Elem lam = F->elementAt(i);
        tryPush("lambda=" + F->str(lam), [&] { return familyE2(F, lam); });
      }
      break;
    case FamilyId::E4:
      for (std::uint64_t i = 0; i < q; ++i) {
        Elem c = F->elementAt(i);
        tryPush("c=" + F->str(c), [&] { return familyE4(F, c); });
      }
      break;
    case FamilyId::E3:
      for (std::uint64_t i = 0; i < q; ++i) {
        Elem lam = F->elementAt(i);
        tryPush("lambda=" + F->str(lam), [&] { return familyE3(F, lam); });
      }
      break;
    case FamilyId::E5XiEta:
      for (const auto& [xi, eta] : enumerateE5Params(F)) {
        tryPush("xi=" + F->str(xi) + ",eta=" + F->str(eta), [&] { return familyE5(F, xi, eta); });
      }
      break;
    default:
      fail(Err::BadParameter, "family is not single-parameter enumerable");
  }
  return out;
}

}  // namespace halfpoint
