#include "halfpoint/halving.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfpoint {

std::optional<RootTriple> canonicalRootTriple(const Curve& C, const Point& P) {
  const auto& F = C.field();
  const auto& alpha = C.roots();
  Elem d[3];
  for (int i = 0; i < 3; ++i) d[i] = F->sub(P.x, alpha[i]);

  if (!F->isZero(P.y)) {
    auto s1 = F->sqrt(d[0]);
    if (!s1) return std::nullopt;
    auto s2 = F->sqrt(d[1]);
    if (!s2) return std::nullopt;
    if (!F->isSquare(d[2])) return std::nullopt;
    Elem r3 = F->div(F->neg(P.y), F->mul(s1->first, s2->first));
    return RootTriple{s1->first, s2->first, r3};
  }
  // P is some W_i
  Elem r[3];
  for (int i = 0; i < 3; ++i) {
    if (F->isZero(d[i])) {
      r[i] = F->zero();
    } else {
      auto s = F->sqrt(d[i]);
      if (!s) return std::nullopt;
      r[i] = s->first;
    }
  }
  return RootTriple{r[0], r[1], r[2]};
}

RootTriple flipRoots(const Field& F, const RootTriple& t, int keep) {
  Elem r[3] = {t.r1, t.r2, t.r3};
  for (int i = 0; i < 3; ++i)
    if (i != keep) r[i] = F.neg(r[i]);
  return RootTriple{r[0], r[1], r[2]};
}

namespace {

std::vector<Point> sortedUnique(const Curve& C, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [&C](const Point& a, const Point& b) { return C.lessPoint(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&C](const Point& a, const Point& b) { return C.eqPoint(a, b); }),
            pts.end());
  return pts;
}

}  // namespace

bool isHalvable(const Curve& C, const Point& P) {
  if (P.infinity) return true;
  const auto& F = C.field();
  for (const Elem& a : C.roots())
    if (!F->isSquare(F->sub(P.x, a))) return false;
  return true;
}

Point halfFromTriple(const Curve& C, const Point& P, const RootTriple& t) {
  const auto& F = C.field();
  Fx r1(F, t.r1), r2(F, t.r2), r3(F, t.r3);
  Fx x1 = Fx(F, P.x) + (r1 * r2 + r2 * r3 + r3 * r1);
  Fx y1 = -((r1 + r2) * (r2 + r3) * (r3 + r1));
  return Point::affine(x1.v(), y1.v());
}

HalfSet halves(const Curve& C, const Point& P) {
  if (P.infinity) fail(Err::InfinityBase, "halves of infinity are the 2-torsion; use kernelOfTwo");
  auto base = canonicalRootTriple(C, P);
  if (!base) return {};
  const auto& F = *C.field();
  HalfSet out;
  out.push_back({halfFromTriple(C, P, *base), *base});
  for (int i = 0; i < 3; ++i) {
    RootTriple t = flipRoots(F, *base, i);
    out.push_back({halfFromTriple(C, P, t), t});
  }
  return out;
}

std::vector<Point> kernelOfTwo(const Curve& C) {
  return {Point::inf(), C.w(1), C.w(2), C.w(3)};
}

Point halfOffset(const Curve& C, const Point& P, const HalfPoint& half, int flip) {
  const auto& F = C.field();
  int i = flip - 1;
  int j = (i + 1) % 3, k = (i + 2) % 3;
  RootTriple t = flipRoots(*F, half.triple, i);
  Point qi = halfFromTriple(C, P, t);

  Point wi = C.w(flip);
  if (!C.eqPoint(C.sub(qi, half.q), wi))
    throw std::logic_error("half offset is not W_i");
  // collinearity of Q_i, -Q, W_i on y = (r_j + r_k)(x - alpha_i)
  Fx slope = Fx(F, half.triple[j]) + Fx(F, half.triple[k]);
  for (const Point& T : {qi, C.negate(half.q), wi}) {
    Fx lineY = slope * (Fx(F, T.x) - Fx(F, C.roots()[i]));
    if (Fx(F, T.y) != lineY) throw std::logic_error("offset points are not collinear");
  }
  return qi;
}

RootTriple recoverRoots(const Curve& C, const Point& P, const Point& Q) {
  const auto& F = C.field();
  if (P.infinity || Q.infinity || !C.eqPoint(C.dbl(Q), P))
    fail(Err::NotAHalf, "2Q != P");
  const auto& alpha = C.roots();

  if (F->isZero(P.y)) {
    // P = W_i: r_i = 0 and the symmetric closed form pins the other two:
    // r_j r_k = x1 - alpha_i, r_j + r_k = -y1 / (x1 - alpha_i).
    int i = 0;
    while (!F->eq(P.x, alpha[i])) ++i;
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Fx x1(F, Q.x), y1(F, Q.y);
    Fx prod = x1 - Fx(F, alpha[i]);
    Fx sum = -y1 / prod;
    Fx disc = sum.sq() - 4 * prod;
    auto droot = F->sqrt(disc.v());
    if (!droot) fail(Err::NotAHalf, "root recovery discriminant is a non-square");
    Fx rj = (sum + Fx(F, droot->first)) / 2;
    Fx rk = sum - rj;
    // assign so that r_j^2 = x0 - alpha_j
    if (rj.sq() != Fx(F, P.x) - Fx(F, alpha[j])) std::swap(rj, rk);
    Elem r[3];
    r[i] = F->zero();
    r[j] = rj.v();
    r[k] = rk.v();
    return RootTriple{r[0], r[1], r[2]};
  }

  Fx x1(F, Q.x), y1(F, Q.y);
  Fx inv[3];
  for (int i = 0; i < 3; ++i) inv[i] = 1 / (x1 - Fx(F, alpha[i]));
  Elem r[3];
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    r[i] = (-(y1 / 2) * (-inv[i] + inv[j] + inv[k])).v();
  }
  return RootTriple{r[0], r[1], r[2]};
}

std::vector<Point> quarterPointsFormula(const Curve& C, const Point& P) {
  if (P.infinity) fail(Err::InfinityBase, "the formula requires P != infinity");
  const auto& F = C.field();
  std::vector<Point> out;
  auto base = canonicalRootTriple(C, P);
  if (!base) return out;

  std::vector<RootTriple> level0 = {*base, flipRoots(*F, *base, 0), flipRoots(*F, *base, 1),
                                    flipRoots(*F, *base, 2)};
  for (const RootTriple& t : level0) {
    Fx r1(F, t.r1), r2(F, t.r2), r3(F, t.r3);
    Fx sum0 = r1 * r2 + r2 * r3 + r3 * r1;
    // (r_i^(1))^2 = (r_i + r_j)(r_i + r_k)
    Fx p1 = (r1 + r2) * (r1 + r3);
    Fx p2 = (r2 + r1) * (r2 + r3);
    Fx p3 = (r3 + r1) * (r3 + r2);
    auto s1 = F->sqrt(p1.v());
    if (!s1) continue;
    auto s2 = F->sqrt(p2.v());
    if (!s2) continue;
    if (!F->isSquare(p3.v())) continue;
    // normalize the level-1 product to (r1+r2)(r2+r3)(r3+r1) = -y1
    Fx target = (r1 + r2) * (r2 + r3) * (r3 + r1);
    Fx q1(F, s1->first), q2(F, s2->first);
    Fx q3 = target / (q1 * q2);
    RootTriple lvl1{q1.v(), q2.v(), q3.v()};
    std::vector<RootTriple> level1 = {lvl1, flipRoots(*F, lvl1, 0), flipRoots(*F, lvl1, 1),
                                      flipRoots(*F, lvl1, 2)};
    for (const RootTriple& u : level1) {
      Fx u1(F, u.r1), u2(F, u.r2), u3(F, u.r3);
      Fx xr = Fx(F, P.x) + sum0 + (u1 * u2 + u2 * u3 + u3 * u1);
      Fx yr = -((u1 + u2) * (u2 + u3) * (u3 + u1));
      out.push_back(Point::affine(xr.v(), yr.v()));
    }
  }
  return sortedUnique(C, std::move(out));
}

std::vector<Point> dividePow2(const Curve& C, const Point& P, unsigned n) {
  std::vector<Point> level = {P};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Point> next;
    for (const Point& X : level) {
      if (X.infinity) {
        auto ker = kernelOfTwo(C);
        next.insert(next.end(), ker.begin(), ker.end());
      } else {
        for (const HalfPoint& h : halves(C, X)) next.push_back(h.q);
      }
    }
    level = sortedUnique(C, std::move(next));
    if (level.empty()) break;
  }
  if (n == 2 && !P.infinity) {
    std::vector<Point> direct = quarterPointsFormula(C, P);
    bool same = direct.size() == level.size();
    for (size_t i = 0; same && i < direct.size(); ++i) same = C.eqPoint(direct[i], level[i]);
    if (!same) throw std::logic_error("quarter-point formula disagrees with the search");
  }
  return level;
}

}  // namespace halfpoint
