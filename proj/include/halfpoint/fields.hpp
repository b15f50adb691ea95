#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "halfpoint/errors.hpp"

namespace halfpoint {

enum class FieldKind { Prime, Extension, Rational };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A field element. The payload is interpreted by the owning Field:
/// prime fields store a residue in [0,p), extension fields a coefficient
/// vector of length k (constant term first), and the rationals a reduced
/// fraction. Elements are immutable values and safe to share.
class Elem {
 public:
  Elem() = default;

 private:
  friend class Field;
  std::variant<std::uint64_t, std::vector<std::uint64_t>, mpq_class> v_{};
};

/// Exact arithmetic over F_p (p an odd prime), F_{p^k}, or Q.
///
/// Handles are immutable and shared; all operations are const and
/// re-entrant. Finite fields of order up to kSqrtTableLimit precompute a
/// square-root table by exhaustive enumeration; larger prime fields fall
/// back to Tonelli-Shanks.
class Field final : public std::enable_shared_from_this<Field> {
 public:
  static constexpr std::uint64_t kSqrtTableLimit = 8192;

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  /// modulus: monic polynomial of degree k over F_p, constant term first
  /// (length k+1). Verified irreducible.
  static FieldPtr extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  /// Extension with the default modulus table: x^2+1 for F_9, x^2+2 for
  /// F_25, x^3-x-1 for F_27; otherwise the first irreducible monic
  /// polynomial in enumeration order.
  static FieldPtr extension(std::uint64_t p, unsigned k);
  /// q = p^k, default modulus when k > 1.
  static FieldPtr ofOrder(std::uint64_t q);
  /// Grammar: `Q` | `Fp:<p>` | `Fq:<p>^<k>[:<c0,c1,...,ck>]`.
  static FieldPtr parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  bool finite() const { return kind_ != FieldKind::Rational; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const;  // q = p^k; NotEnumerable for Q
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string spec() const;

  bool sameField(const Field& other) const;

  // -- element construction -------------------------------------------------
  Elem zero() const;
  Elem one() const;
  Elem fromInt(long long n) const;
  Elem fromRatio(long long num, long long den) const;
  /// Extension fields: coefficients c0..c_{k-1}, any integers.
  Elem fromCoeffs(const std::vector<long long>& coeffs) const;
  Elem parseElem(std::string_view text) const;
  std::string str(const Elem& a) const;

  // -- arithmetic ------------------------------------------------------------
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem div(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  bool isZero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;
  /// Canonical total order: residue order, then lexicographic on
  /// coefficient vectors, then numeric for rationals. The sqrt convention
  /// and all deterministic outputs rest on it.
  bool less(const Elem& a, const Elem& b) const;

  // -- squares ---------------------------------------------------------------
  bool isSquare(const Elem& a) const;
  /// Both square roots, canonical first: prime fields pick the
  /// representative in [0,(p-1)/2], extensions the lexicographically
  /// smaller coefficient vector, Q the nonnegative root. sqrt(0) = (0,0).
  std::optional<std::pair<Elem, Elem>> sqrt(const Elem& a) const;

  // -- enumeration (finite fields) -------------------------------------------
  std::uint64_t size() const { return order(); }
  Elem elementAt(std::uint64_t idx) const;
  std::uint64_t indexOf(const Elem& a) const;

 private:
  Field() = default;

  std::uint64_t redAdd(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t redSub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t redMul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t redInv(std::uint64_t a) const;
  std::uint64_t redPow(std::uint64_t a, std::uint64_t e) const;
  std::vector<std::uint64_t> polyMulMod(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const;
  std::vector<std::uint64_t> polyInv(const std::vector<std::uint64_t>& a) const;
  std::uint64_t tonelliShanks(std::uint64_t a) const;
  void buildSqrtTable();

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;  // characteristic; 0 for Q
  unsigned k_ = 1;
  std::uint64_t q_ = 0;  // p^k
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> sqrtTable_;  // index of canonical root, or kNoRoot
  static constexpr std::uint32_t kNoRoot = 0xffffffffu;
};

/// Element bound to its field, with operators. Convenience for
/// formula-heavy code; the raw Field API stays the primitive.
class Fx {
 public:
  Fx() = default;
  Fx(const Field* f, Elem v) : f_(f), v_(std::move(v)) {}
  Fx(const FieldPtr& f, Elem v) : f_(f.get()), v_(std::move(v)) {}
  Fx(const Field* f, long long n) : f_(f), v_(f->fromInt(n)) {}
  Fx(const FieldPtr& f, long long n) : f_(f.get()), v_(f->fromInt(n)) {}

  const Elem& v() const { return v_; }
  const Field* field() const { return f_; }

  friend Fx operator+(const Fx& a, const Fx& b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
  friend Fx operator-(const Fx& a, const Fx& b) { return {a.f_, a.f_->sub(a.v_, b.v_)}; }
  friend Fx operator*(const Fx& a, const Fx& b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
  friend Fx operator/(const Fx& a, const Fx& b) { return {a.f_, a.f_->div(a.v_, b.v_)}; }
  Fx operator-() const { return {f_, f_->neg(v_)}; }
  friend Fx operator+(const Fx& a, long long n) { return a + Fx(a.f_, n); }
  friend Fx operator-(const Fx& a, long long n) { return a - Fx(a.f_, n); }
  friend Fx operator*(const Fx& a, long long n) { return a * Fx(a.f_, n); }
  friend Fx operator/(const Fx& a, long long n) { return a / Fx(a.f_, n); }
  friend Fx operator+(long long n, const Fx& a) { return Fx(a.f_, n) + a; }
  friend Fx operator-(long long n, const Fx& a) { return Fx(a.f_, n) - a; }
  friend Fx operator*(long long n, const Fx& a) { return Fx(a.f_, n) * a; }
  friend Fx operator/(long long n, const Fx& a) { return Fx(a.f_, n) / a; }
  friend bool operator==(const Fx& a, const Fx& b) { return a.f_->eq(a.v_, b.v_); }
  friend bool operator!=(const Fx& a, const Fx& b) { return !(a == b); }
  bool isZero() const { return f_->isZero(v_); }
  Fx sq() const { return *this * *this; }

 private:
  const Field* f_ = nullptr;
  Elem v_;
};

}  // namespace halfpoint
