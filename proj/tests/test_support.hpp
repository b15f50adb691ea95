#pragma once

// Brute-force oracles shared by the test suites. These deliberately take
// the dumbest correct path so they stay independent of the library's own
// shortcuts.

#include <numeric>
#include <optional>
#include <vector>

#include "halfpoint/curve.hpp"

namespace halfpoint::testsupport {

/// {Q : 2Q = P} by scanning every point of E(F_q).
inline std::vector<Point> bruteHalves(const Curve& C, const Point& P) {
  std::vector<Point> out;
  for (const Point& Q : allPoints(C))
    if (C.eqPoint(C.dbl(Q), P)) out.push_back(Q);
  return out;
}

/// {R : 2^n R = P} by scanning every point.
inline std::vector<Point> bruteDividePow2(const Curve& C, const Point& P, unsigned n) {
  std::vector<Point> out;
  long long m = 1LL << n;
  for (const Point& R : allPoints(C))
    if (C.eqPoint(C.scalarMul(R, m), P)) out.push_back(R);
  return out;
}

/// Exhaustive (u, r, sigma) isomorphism scan over a finite field.
inline std::optional<IsoWitness> bruteIso(const Curve& C1, const Curve& C2) {
  const auto& F = C1.field();
  if (!F->sameField(*C2.field())) return std::nullopt;
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (std::uint64_t ui = 1; ui < F->order(); ++ui) {
    Elem u = F->elementAt(ui);
    Elem u2 = F->mul(u, u);
    for (std::uint64_t ri = 0; ri < F->order(); ++ri) {
      Elem r = F->elementAt(ri);
      for (const auto& p : perms) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          Elem mapped = F->add(F->mul(u2, C1.roots()[i]), r);
          ok = F->eq(mapped, C2.roots()[p[i]]);
        }
        if (ok) return IsoWitness{u, r, p};
      }
    }
  }
  return std::nullopt;
}

/// All curves with full rational 2-torsion over F_q: unordered triples of
/// distinct elements, enumerated by index.
inline std::vector<Curve> allCurves(const FieldPtr& F) {
  std::vector<Curve> out;
  std::uint64_t q = F->order();
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = i + 1; j < q; ++j)
      for (std::uint64_t k = j + 1; k < q; ++k)
        out.emplace_back(F, F->elementAt(i), F->elementAt(j), F->elementAt(k));
  return out;
}

/// Closure of a generating set under the group law (torsion generators).
inline std::vector<Point> subgroupClosure(const Curve& C, const std::vector<Point>& gens) {
  std::vector<Point> elems = {Point::inf()};
  auto contains = [&](const Point& p) {
    for (const auto& e : elems)
      if (C.eqPoint(e, p)) return true;
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Point> cur = elems;
    for (const auto& e : cur)
      for (const auto& g : gens) {
        Point s = C.add(e, g);
        if (!contains(s)) {
          elems.push_back(s);
          grew = true;
        }
      }
  }
  return elems;
}

inline GroupShape shapeOfSubgroup(const Curve& C, const std::vector<Point>& elems) {
  std::uint64_t n = elems.size();
  std::uint64_t exp = 1;
  for (const auto& e : elems) exp = std::lcm<std::uint64_t>(exp, pointOrder(C, e));
  return GroupShape{n / exp, exp};
}

}  // namespace halfpoint::testsupport
