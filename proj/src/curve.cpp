#include "halfpoint/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace halfpoint {

Curve::Curve(FieldPtr F, const Elem& a1, const Elem& a2, const Elem& a3) : F_(std::move(F)) {
  alpha_ = {a1, a2, a3};
  std::sort(alpha_.begin(), alpha_.end(),
            [this](const Elem& x, const Elem& y) { return F_->less(x, y); });
  if (F_->eq(alpha_[0], alpha_[1]) || F_->eq(alpha_[1], alpha_[2]))
    fail(Err::NotDistinct, "curve roots must be pairwise distinct");
  // expand (x-a1)(x-a2)(x-a3)
  Fx r1(F_, alpha_[0]), r2(F_, alpha_[1]), r3(F_, alpha_[2]);
  a2_ = (-(r1 + r2 + r3)).v();
  a4_ = (r1 * r2 + r2 * r3 + r3 * r1).v();
  a6_ = (-(r1 * r2 * r3)).v();
}

Elem Curve::rhs(const Elem& x) const {
  Fx t(F_, x);
  return (((t + Fx(F_, a2_)) * t + Fx(F_, a4_)) * t + Fx(F_, a6_)).v();
}

bool Curve::onCurve(const Point& P) const {
  if (P.infinity) return true;
  return F_->eq(F_->mul(P.y, P.y), rhs(P.x));
}

bool Curve::eqPoint(const Point& P, const Point& Q) const {
  if (P.infinity || Q.infinity) return P.infinity == Q.infinity;
  return F_->eq(P.x, Q.x) && F_->eq(P.y, Q.y);
}

bool Curve::lessPoint(const Point& P, const Point& Q) const {
  if (P.infinity || Q.infinity) return P.infinity && !Q.infinity;
  if (!F_->eq(P.x, Q.x)) return F_->less(P.x, Q.x);
  return F_->less(P.y, Q.y);
}

Point Curve::negate(const Point& P) const {
  if (P.infinity) return P;
  return Point::affine(P.x, F_->neg(P.y));
}

Point Curve::add(const Point& P, const Point& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const Field* F = F_.get();
  if (F->eq(P.x, Q.x)) {
    if (!F->eq(P.y, Q.y)) return Point::inf();  // P + (-P)
    if (F->isZero(P.y)) return Point::inf();    // doubling an order-2 point
    // tangent slope (3x^2 + 2 a2 x + a4) / 2y
    Fx x(F, P.x), y(F, P.y);
    Fx s = (3 * x.sq() + 2 * Fx(F, a2_) * x + Fx(F, a4_)) / (2 * y);
    Fx x3 = s.sq() - Fx(F, a2_) - 2 * x;
    Fx y3 = -(y + s * (x3 - x));
    return Point::affine(x3.v(), y3.v());
  }
  Fx x1(F, P.x), y1(F, P.y), x2(F, Q.x), y2(F, Q.y);
  Fx s = (y2 - y1) / (x2 - x1);
  Fx x3 = s.sq() - Fx(F, a2_) - x1 - x2;
  Fx y3 = -(y1 + s * (x3 - x1));
  return Point::affine(x3.v(), y3.v());
}

Point Curve::scalarMul(const Point& P, long long n) const {
  Point base = P;
  if (n < 0) {
    base = negate(base);
    n = -n;
  }
  Point acc = Point::inf();
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    base = dbl(base);
    n >>= 1;
  }
  return acc;
}

bool Curve::operator==(const Curve& other) const {
  if (!F_->sameField(*other.F_)) return false;
  for (int i = 0; i < 3; ++i)
    if (!F_->eq(alpha_[i], other.alpha_[i])) return false;
  return true;
}

std::string Curve::str() const {
  return F_->spec() + ";alphas=" + F_->str(alpha_[0]) + "," + F_->str(alpha_[1]) + "," +
         F_->str(alpha_[2]);
}

std::string Curve::pointStr(const Point& P) const {
  if (P.infinity) return "inf";
  return F_->str(P.x) + "," + F_->str(P.y);
}

Point Curve::parsePoint(std::string_view text) const {
  if (text == "inf") return Point::inf();
  auto comma = text.rfind(',');
  // extension elements contain no commas, so split at the one separator
  if (F_->kind() != FieldKind::Extension) comma = text.find(',');
  if (comma == std::string_view::npos) fail(Err::ParseError, "point needs 'x,y' or 'inf'");
  std::string_view xs = text.substr(0, comma), ys = text.substr(comma + 1);
  if (F_->kind() == FieldKind::Extension) {
    // both element halves may contain '+' but never ','
    auto mid = text.find(',');
    xs = text.substr(0, mid);
    ys = text.substr(mid + 1);
  }
  Point P = Point::affine(F_->parseElem(xs), F_->parseElem(ys));
  return P;
}

// ---------------------------------------------------------------------------

ScaleIso::ScaleIso(Curve domain, const Elem& kappa)
    : domain_(std::move(domain)),
      codomain_([&] {
        const auto& F = domain_.field();
        if (F->isZero(kappa)) fail(Err::ZeroScale, "kappa must be nonzero");
        Fx k2 = Fx(F, kappa).sq();
        return Curve(F, (Fx(F, domain_.roots()[0]) / k2).v(), (Fx(F, domain_.roots()[1]) / k2).v(),
                     (Fx(F, domain_.roots()[2]) / k2).v());
      }()),
      kappa_(kappa) {}

Point ScaleIso::forward(const Point& P) const {
  if (P.infinity) return P;
  const auto& F = domain_.field();
  Fx k(F, kappa_);
  return Point::affine((Fx(F, P.x) / k.sq()).v(), (Fx(F, P.y) / (k.sq() * k)).v());
}

Point ScaleIso::backward(const Point& P) const {
  if (P.infinity) return P;
  const auto& F = domain_.field();
  Fx k(F, kappa_);
  return Point::affine((Fx(F, P.x) * k.sq()).v(), (Fx(F, P.y) * k.sq() * k).v());
}

// ---------------------------------------------------------------------------

std::optional<IsoWitness> isIsomorphic(const Curve& C1, const Curve& C2) {
  const auto& F = C1.field();
  if (!F->sameField(*C2.field())) return std::nullopt;
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto& a = C1.roots();
  const auto& b = C2.roots();
  for (const auto& p : perms) {
    // u^2 (a1 - a0) = b[p1] - b[p0]
    Fx num = Fx(F, b[p[1]]) - Fx(F, b[p[0]]);
    Fx den = Fx(F, a[1]) - Fx(F, a[0]);
    Fx u2 = num / den;
    if (u2.isZero()) continue;
    Fx r = Fx(F, b[p[0]]) - u2 * Fx(F, a[0]);
    if (Fx(F, b[p[2]]) != u2 * Fx(F, a[2]) + r) continue;
    auto root = F->sqrt(u2.v());
    if (!root) continue;
    return IsoWitness{root->first, r.v(), p};
  }
  return std::nullopt;
}

bool verifyWitness(const Curve& C1, const Curve& C2, const IsoWitness& w) {
  const auto& F = C1.field();
  if (F->isZero(w.u)) return false;
  Fx u2 = Fx(F, w.u).sq();
  for (int i = 0; i < 3; ++i) {
    Fx mapped = u2 * Fx(F, C1.roots()[i]) + Fx(F, w.r);
    if (mapped != Fx(F, C2.roots()[w.perm[i]])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

unsigned pointOrder(const Curve& C, const Point& P, unsigned rationalBound) {
  if (P.infinity) return 1;
  std::uint64_t cap;
  if (C.field()->finite()) {
    std::uint64_t q = C.field()->order();
    cap = q + 2 + 2 * static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)));
  } else {
    cap = rationalBound;
  }
  Point acc = P;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (acc.infinity) return static_cast<unsigned>(n);
    acc = C.add(acc, P);
  }
  if (C.field()->finite()) fail(Err::HasseViolation, "point order exceeds the Hasse cap");
  fail(Err::NotTorsionWithinBound, "no order up to " + std::to_string(rationalBound) + " over Q");
}

unsigned pointOrderGivenN(const Curve& C, const Point& P, std::uint64_t n) {
  if (P.infinity) return 1;
  std::uint64_t ord = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    while (ord % p == 0 && C.scalarMul(P, static_cast<long long>(ord / p)).infinity) ord /= p;
  }
  if (rest > 1)
    while (ord % rest == 0 && C.scalarMul(P, static_cast<long long>(ord / rest)).infinity)
      ord /= rest;
  return static_cast<unsigned>(ord);
}

std::vector<Point> allPoints(const Curve& C) {
  const auto& F = C.field();
  std::vector<Point> pts;
  pts.push_back(Point::inf());
  std::uint64_t q = F->order();
  for (std::uint64_t i = 0; i < q; ++i) {
    Elem x = F->elementAt(i);
    auto r = F->sqrt(C.rhs(x));
    if (!r) continue;
    if (F->isZero(r->first)) {
      pts.push_back(Point::affine(x, r->first));
    } else {
      pts.push_back(Point::affine(x, r->first));
      pts.push_back(Point::affine(x, r->second));
    }
  }
  return pts;
}

GroupInfo groupStructure(const Curve& C, std::uint64_t qBound) {
  const auto& F = C.field();
  if (!F->finite()) fail(Err::UnsupportedField, "group structure needs a finite field");
  std::uint64_t q = F->order();
  if (q > qBound) fail(Err::UnsupportedField, "field order exceeds the configured bound");

  // |E| by brute-force counting over x
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    Elem x = F->elementAt(i);
    Elem f = C.rhs(x);
    if (F->isZero(f))
      count += 1;
    else if (F->isSquare(f))
      count += 2;
  }

  // Hasse: (q + 1 - N)^2 <= 4q
  {
    long long d = static_cast<long long>(q) + 1 - static_cast<long long>(count);
    if (d * d > 4 * static_cast<long long>(q))
      fail(Err::HasseViolation, "point count " + std::to_string(count) + " violates Hasse for q=" +
                                    std::to_string(q));
  }

  // exponent = lcm of point orders; full 2-torsion caps it at count/2
  std::uint64_t target = count / 2;
  std::uint64_t lcmOrd = 1;
  for (std::uint64_t i = 0; i < q && lcmOrd < target; ++i) {
    Elem x = F->elementAt(i);
    auto r = F->sqrt(C.rhs(x));
    if (!r) continue;
    Point P = Point::affine(x, r->first);
    std::uint64_t ord = pointOrderGivenN(C, P, count);
    lcmOrd = std::lcm(lcmOrd, ord);
  }
  std::uint64_t n2 = lcmOrd;
  std::uint64_t n1 = count / n2;
  if (n1 * n2 != count || n2 % n1 != 0 || n1 % 2 != 0)
    fail(Err::HasseViolation, "inconsistent group invariants for " + C.str());
  return GroupInfo{GroupShape{n1, n2}, count};
}

}  // namespace halfpoint
