#include "halfpoint/torsion.hpp"

namespace halfpoint {

namespace {

Fx pairSum(const Field* F, const RootTriple& t) {
  Fx r1(F, t.r1), r2(F, t.r2), r3(F, t.r3);
  return r1 * r2 + r2 * r3 + r3 * r1;
}

}  // namespace

std::optional<OrderCertificate> isOrder3(const Curve& C, const Point& P) {
  if (P.infinity) return std::nullopt;
  auto base = canonicalRootTriple(C, P);
  if (!base) return std::nullopt;
  const auto& F = C.field();
  const RootTriple patterns[4] = {*base, flipRoots(*F, *base, 0), flipRoots(*F, *base, 1),
                                  flipRoots(*F, *base, 2)};
  for (const RootTriple& t : patterns)
    if (pairSum(F.get(), t).isZero()) return OrderCertificate{3, t, std::nullopt};
  return std::nullopt;
}

std::optional<OrderCertificate> isOrder5(const Curve& C, const Point& P) {
  if (P.infinity) return std::nullopt;
  auto base = canonicalRootTriple(C, P);
  if (!base) return std::nullopt;
  const auto& F = C.field();
  const RootTriple patterns[4] = {*base, flipRoots(*F, *base, 0), flipRoots(*F, *base, 1),
                                  flipRoots(*F, *base, 2)};
  for (const RootTriple& t : patterns) {
    Fx sum0 = pairSum(F.get(), t);
    if (sum0.isZero()) continue;  // that sign choice witnesses order 3, not 5
    Fx r1(F, t.r1), r2(F, t.r2), r3(F, t.r3);
    Fx p1 = (r1 + r2) * (r1 + r3);
    Fx p2 = (r2 + r1) * (r2 + r3);
    Fx p3 = (r3 + r1) * (r3 + r2);
    auto s1 = F->sqrt(p1.v());
    if (!s1) continue;
    auto s2 = F->sqrt(p2.v());
    if (!s2) continue;
    if (!F->isSquare(p3.v())) continue;
    Fx target = (r1 + r2) * (r2 + r3) * (r3 + r1);  // = -y1 of the half
    if (target.isZero()) continue;
    Fx q1(F, s1->first), q2(F, s2->first);
    if (q1.isZero() || q2.isZero()) continue;
    RootTriple lvl1{q1.v(), q2.v(), (target / (q1 * q2)).v()};
    const RootTriple lvl1Patterns[4] = {lvl1, flipRoots(*F, lvl1, 0), flipRoots(*F, lvl1, 1),
                                        flipRoots(*F, lvl1, 2)};
    for (const RootTriple& u : lvl1Patterns) {
      if ((sum0 + pairSum(F.get(), u)).isZero()) return OrderCertificate{5, t, u};
    }
  }
  return std::nullopt;
}

IdentityEval evalSymmetricIdentities(const FieldPtr& F, const Elem& t1e, const Elem& t2e,
                                     const Elem& t3e) {
  Fx t1(F, t1e), t2(F, t2e), t3(F, t3e);
  Fx a = -t1.sq() + t2.sq() + t3.sq();
  Fx b = t1.sq() - t2.sq() + t3.sq();
  Fx c = t1.sq() + t2.sq() - t3.sq();
  Fx cyc = a * b + b * c + c * a;
  Fx heron = (t1 + t2 + t3) * (-t1 + t2 + t3) * (t1 - t2 + t3) * (t1 + t2 - t3);

  Fx lhs1 = cyc + 4 * t1.sq() * t2 * t3 + 4 * t1 * t2.sq() * t3 + 4 * t1 * t2 * t3.sq();
  Fx cubic = t1.sq() * t1 + t2.sq() * t2 + t3.sq() * t3 - t1.sq() * t2 - t1 * t2.sq() -
             t2.sq() * t3 - t2 * t3.sq() - t1.sq() * t3 - t1 * t3.sq() - 2 * t1 * t2 * t3;
  Fx rhs1 = (t1 + t2 + t3) * cubic;

  IdentityEval out;
  out.m0 = (cyc == heron);
  out.m0AsPrinted = (cyc == -heron);
  out.m1 = (lhs1 == -rhs1);
  out.m1AsPrinted = (lhs1 == rhs1);
  return out;
}

bool checkSymmetricIdentities(const FieldPtr& F, const Elem& t1, const Elem& t2, const Elem& t3) {
  IdentityEval e = evalSymmetricIdentities(F, t1, t2, t3);
  return e.m0 && e.m1;
}

}  // namespace halfpoint
