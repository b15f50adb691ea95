#include "halfpoint/fields.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace halfpoint {

std::string_view errName(Err e) {
  switch (e) {
    case Err::CharTwo: return "CharTwo";
    case Err::NotPrime: return "NotPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotEnumerable: return "NotEnumerable";
    case Err::NotDistinct: return "NotDistinct";
    case Err::ZeroScale: return "ZeroScale";
    case Err::NotTorsionWithinBound: return "NotTorsionWithinBound";
    case Err::HasseViolation: return "HasseViolation";
    case Err::InfinityBase: return "InfinityBase";
    case Err::NotAHalf: return "NotAHalf";
    case Err::BadParameter: return "BadParameter";
    case Err::NoSqrtMinusOne: return "NoSqrtMinusOne";
    case Err::NotOnParameterCurve: return "NotOnParameterCurve";
    case Err::UnsupportedField: return "UnsupportedField";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool isPrimeU64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const std::uint64_t* defaultModulusFor(std::uint64_t p, unsigned k) {
  // Fixed moduli keep census output reproducible across runs.
  static const std::uint64_t f9[] = {1, 0, 1};     // x^2+1 over F_3
  static const std::uint64_t f25[] = {2, 0, 1};    // x^2+2 over F_5
  static const std::uint64_t f27[] = {2, 2, 0, 1}; // x^3-x-1 over F_3
  if (p == 3 && k == 2) return f9;
  if (p == 5 && k == 2) return f25;
  if (p == 3 && k == 3) return f27;
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

FieldPtr Field::rationals() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Rational;
  return f;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p == 2) fail(Err::CharTwo, "characteristic 2 is not supported");
  if (!isPrimeU64(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->p_ = p;
  f->k_ = 1;
  f->q_ = p;
  if (p <= kSqrtTableLimit) f->buildSqrtTable();
  return f;
}

FieldPtr Field::extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (p == 2) fail(Err::CharTwo, "characteristic 2 is not supported");
  if (!isPrimeU64(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) fail(Err::BadParameter, "extension degree must be >= 1");
  if (k == 1) {
    if (!modulus.empty()) fail(Err::BadParameter, "degree-1 extension takes no modulus");
    return prime(p);
  }
  if (modulus.size() != k + 1) fail(Err::BadParameter, "modulus needs k+1 coefficients");
  for (auto& c : modulus) c %= p;
  if (modulus[k] != 1) fail(Err::BadParameter, "modulus must be monic");

  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Extension;
  f->p_ = p;
  f->k_ = k;
  f->q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (f->q_ > kSqrtTableLimit * 4) fail(Err::UnsupportedField, "extension field too large");
    f->q_ *= p;
  }
  f->modulus_ = std::move(modulus);

  // Irreducibility by trial division against every monic polynomial of
  // degree <= k/2 (desk scale: q^(k/2) candidates).
  auto polyAtDeg = [&](unsigned d, std::uint64_t idx) {
    std::vector<std::uint64_t> g(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
      g[i] = idx % p;
      idx /= p;
    }
    g[d] = 1;
    return g;
  };
  auto divides = [&](const std::vector<std::uint64_t>& g) {
    // remainder of modulus_ mod g
    std::vector<std::uint64_t> r = f->modulus_;
    unsigned dg = static_cast<unsigned>(g.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(dg); --i) {
      std::uint64_t c = r[i];
      if (c == 0) continue;
      for (unsigned j = 0; j <= dg; ++j) {
        std::uint64_t& t = r[i - dg + j];
        t = (t + p * c - (c * g[j]) % p) % p;
      }
    }
    return std::all_of(r.begin(), r.begin() + dg, [](std::uint64_t c) { return c == 0; });
  };
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (divides(polyAtDeg(d, idx)))
        fail(Err::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  }

  f->buildSqrtTable();
  return f;
}

FieldPtr Field::extension(std::uint64_t p, unsigned k) {
  if (const std::uint64_t* m = defaultModulusFor(p, k))
    return extension(p, k, std::vector<std::uint64_t>(m, m + k + 1));
  if (k == 1) return prime(p);
  // First irreducible monic polynomial in enumeration order of the lower
  // coefficients.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> m(k + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    try {
      return extension(p, k, std::move(m));
    } catch (const DomainError& e) {
      if (e.code() != Err::ReducibleModulus) throw;
    }
  }
  fail(Err::BadParameter, "no irreducible modulus found");
}

FieldPtr Field::ofOrder(std::uint64_t q) {
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      unsigned k = 0;
      std::uint64_t t = q;
      while (t % p == 0) {
        t /= p;
        ++k;
      }
      if (t != 1) fail(Err::NotPrime, std::to_string(q) + " is not a prime power");
      return extension(p, k);
    }
  }
  return prime(q);
}

FieldPtr Field::parse(std::string_view spec) {
  if (spec == "Q") return rationals();
  auto parseU64 = [](std::string_view s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(Err::ParseError, "bad number in field spec: '" + std::string(s) + "'");
    return v;
  };
  if (spec.rfind("Fp:", 0) == 0) return prime(parseU64(spec.substr(3)));
  if (spec.rfind("Fq:", 0) == 0) {
    std::string_view rest = spec.substr(3);
    auto caret = rest.find('^');
    if (caret == std::string_view::npos) fail(Err::ParseError, "Fq spec needs p^k");
    std::uint64_t p = parseU64(rest.substr(0, caret));
    std::string_view tail = rest.substr(caret + 1);
    auto colon = tail.find(':');
    if (colon == std::string_view::npos) {
      return extension(p, static_cast<unsigned>(parseU64(tail)));
    }
    unsigned k = static_cast<unsigned>(parseU64(tail.substr(0, colon)));
    std::vector<std::uint64_t> mod;
    std::string_view coeffs = tail.substr(colon + 1);
    while (!coeffs.empty()) {
      auto comma = coeffs.find(',');
      mod.push_back(parseU64(coeffs.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      coeffs = coeffs.substr(comma + 1);
    }
    return extension(p, k, std::move(mod));
  }
  fail(Err::ParseError, "unrecognized field spec '" + std::string(spec) + "'");
}

std::uint64_t Field::order() const {
  if (!finite()) fail(Err::NotEnumerable, "the rationals are infinite");
  return q_;
}

std::string Field::spec() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "Fp:" + std::to_string(p_);
    case FieldKind::Extension: {
      std::string s = "Fq:" + std::to_string(p_) + "^" + std::to_string(k_) + ":";
      for (unsigned i = 0; i <= k_; ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
      }
      return s;
    }
  }
  return {};
}

bool Field::sameField(const Field& other) const {
  if (kind_ != other.kind_) return false;
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

// ---------------------------------------------------------------------------
// prime-field reductions

std::uint64_t Field::redAdd(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}
std::uint64_t Field::redSub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + p_ - b;
}
std::uint64_t Field::redMul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

std::uint64_t Field::redInv(std::uint64_t a) const {
  if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
  // extended Euclid
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Field::redPow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  while (e) {
    if (e & 1) r = redMul(r, a);
    a = redMul(a, a);
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// extension-field polynomial arithmetic

std::vector<std::uint64_t> Field::polyMulMod(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b) const {
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k_); --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      std::uint64_t& t = prod[i - k_ + j];
      t = (t + p_ * c - (c * modulus_[j]) % p_) % p_;
    }
  }
  prod.resize(k_);
  return prod;
}

std::vector<std::uint64_t> Field::polyInv(const std::vector<std::uint64_t>& a) const {
  if (std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; }))
    fail(Err::DivisionByZero, "inverse of zero");
  // a^(q-2) by square-and-multiply; q is small, this stays cheap.
  std::vector<std::uint64_t> result(k_, 0);
  result[0] = 1;
  std::vector<std::uint64_t> base = a;
  std::uint64_t e = q_ - 2;
  while (e) {
    if (e & 1) result = polyMulMod(result, base);
    base = polyMulMod(base, base);
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// element construction

Elem Field::zero() const { return fromInt(0); }
Elem Field::one() const { return fromInt(1); }

Elem Field::fromInt(long long n) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      e.v_ = static_cast<std::uint64_t>(r);
      break;
    }
    case FieldKind::Extension: {
      std::vector<std::uint64_t> c(k_, 0);
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      c[0] = static_cast<std::uint64_t>(r);
      e.v_ = std::move(c);
      break;
    }
    case FieldKind::Rational:
      e.v_ = mpq_class(static_cast<long>(n));
      break;
  }
  return e;
}

Elem Field::fromRatio(long long num, long long den) const {
  if (den == 0) fail(Err::DivisionByZero, "zero denominator");
  if (kind_ == FieldKind::Rational) {
    Elem e;
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    e.v_ = std::move(q);
    return e;
  }
  return div(fromInt(num), fromInt(den));
}

Elem Field::fromCoeffs(const std::vector<long long>& coeffs) const {
  if (kind_ != FieldKind::Extension) fail(Err::BadParameter, "coefficient form needs an extension field");
  if (coeffs.size() > k_) fail(Err::BadParameter, "too many coefficients");
  std::vector<std::uint64_t> c(k_, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long long r = coeffs[i] % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    c[i] = static_cast<std::uint64_t>(r);
  }
  Elem e;
  e.v_ = std::move(c);
  return e;
}

// ---------------------------------------------------------------------------
// printing / parsing

std::string Field::str(const Elem& a) const {
  switch (kind_) {
    case FieldKind::Prime:
      return std::to_string(std::get<std::uint64_t>(a.v_));
    case FieldKind::Extension: {
      const auto& c = std::get<std::vector<std::uint64_t>>(a.v_);
      std::string s = std::to_string(c[0]);
      for (unsigned i = 1; i < k_; ++i) {
        s += "+" + std::to_string(c[i]) + "*s";
        if (i > 1) s += "^" + std::to_string(i);
      }
      return s;
    }
    case FieldKind::Rational: {
      const auto& q = std::get<mpq_class>(a.v_);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
  }
  return {};
}

Elem Field::parseElem(std::string_view text) const {
  if (text.empty()) fail(Err::ParseError, "empty element");
  auto parseLL = [](std::string_view s) -> long long {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(Err::ParseError, "bad element literal '" + std::string(s) + "'");
    return v;
  };
  if (kind_ == FieldKind::Rational) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return fromInt(parseLL(text));
    return fromRatio(parseLL(text.substr(0, slash)), parseLL(text.substr(slash + 1)));
  }
  if (kind_ == FieldKind::Prime) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos)
      return fromRatio(parseLL(text.substr(0, slash)), parseLL(text.substr(slash + 1)));
    return fromInt(parseLL(text));
  }
  // extension: c0+c1*s+c2*s^2 with any subset of terms; plain integers too
  std::vector<long long> coeffs(k_, 0);
  size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    size_t start = pos;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    while (pos < text.size() && text[pos] != '+' && (text[pos] != '-')) ++pos;
    std::string_view term = text.substr(start, pos - start);
    if (term.empty() || term == "+" || term == "-")
      fail(Err::ParseError, "bad element literal '" + std::string(text) + "'");
    long long coeff = 1;
    unsigned power = 0;
    auto star = term.find('*');
    std::string_view varPart;
    if (star != std::string_view::npos) {
      coeff = parseLL(term.substr(0, star) == "-" ? "-1" : term.substr(0, star));
      varPart = term.substr(star + 1);
    } else if (term.find('s') != std::string_view::npos) {
      auto spos = term.find('s');
      std::string_view pre = term.substr(0, spos);
      coeff = pre.empty() ? 1 : (pre == "-" ? -1 : (pre == "+" ? 1 : parseLL(pre)));
      varPart = term.substr(spos);
    } else {
      coeff = parseLL(term);
    }
    if (!varPart.empty()) {
      if (varPart[0] != 's') fail(Err::ParseError, "bad element literal '" + std::string(text) + "'");
      if (varPart.size() == 1) {
        power = 1;
      } else {
        if (varPart[1] != '^') fail(Err::ParseError, "bad element literal '" + std::string(text) + "'");
        power = static_cast<unsigned>(parseLL(varPart.substr(2)));
      }
    }
    if (power >= k_) fail(Err::ParseError, "power too large in '" + std::string(text) + "'");
    coeffs[power] += coeff;
    first = false;
  }
  (void)first;
  return fromCoeffs(coeffs);
}

// ---------------------------------------------------------------------------
// arithmetic

Elem Field::add(const Elem& a, const Elem& b) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime:
      e.v_ = redAdd(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_));
      break;
    case FieldKind::Extension: {
      const auto& x = std::get<std::vector<std::uint64_t>>(a.v_);
      const auto& y = std::get<std::vector<std::uint64_t>>(b.v_);
      std::vector<std::uint64_t> c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = redAdd(x[i], y[i]);
      e.v_ = std::move(c);
      break;
    }
    case FieldKind::Rational:
      e.v_ = mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_));
      break;
  }
  return e;
}

Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime:
      e.v_ = redSub(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_));
      break;
    case FieldKind::Extension: {
      const auto& x = std::get<std::vector<std::uint64_t>>(a.v_);
      const auto& y = std::get<std::vector<std::uint64_t>>(b.v_);
      std::vector<std::uint64_t> c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = redSub(x[i], y[i]);
      e.v_ = std::move(c);
      break;
    }
    case FieldKind::Rational:
      e.v_ = mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_));
      break;
  }
  return e;
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime:
      e.v_ = redMul(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_));
      break;
    case FieldKind::Extension:
      e.v_ = polyMulMod(std::get<std::vector<std::uint64_t>>(a.v_),
                        std::get<std::vector<std::uint64_t>>(b.v_));
      break;
    case FieldKind::Rational:
      e.v_ = mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_));
      break;
  }
  return e;
}

Elem Field::neg(const Elem& a) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime:
      e.v_ = redSub(0, std::get<std::uint64_t>(a.v_));
      break;
    case FieldKind::Extension: {
      const auto& x = std::get<std::vector<std::uint64_t>>(a.v_);
      std::vector<std::uint64_t> c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = redSub(0, x[i]);
      e.v_ = std::move(c);
      break;
    }
    case FieldKind::Rational:
      e.v_ = mpq_class(-std::get<mpq_class>(a.v_));
      break;
  }
  return e;
}

Elem Field::inv(const Elem& a) const {
  Elem e;
  switch (kind_) {
    case FieldKind::Prime:
      e.v_ = redInv(std::get<std::uint64_t>(a.v_));
      break;
    case FieldKind::Extension:
      e.v_ = polyInv(std::get<std::vector<std::uint64_t>>(a.v_));
      break;
    case FieldKind::Rational: {
      const auto& q = std::get<mpq_class>(a.v_);
      if (q == 0) fail(Err::DivisionByZero, "inverse of zero");
      e.v_ = mpq_class(1 / q);
      break;
    }
  }
  return e;
}

Elem Field::div(const Elem& a, const Elem& b) const {
  if (isZero(b)) fail(Err::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(const Elem& a, std::uint64_t e) const {
  Elem r = one();
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Field::isZero(const Elem& a) const {
  switch (kind_) {
    case FieldKind::Prime:
      return std::get<std::uint64_t>(a.v_) == 0;
    case FieldKind::Extension: {
      const auto& x = std::get<std::vector<std::uint64_t>>(a.v_);
      return std::all_of(x.begin(), x.end(), [](std::uint64_t c) { return c == 0; });
    }
    case FieldKind::Rational:
      return std::get<mpq_class>(a.v_) == 0;
  }
  return false;
}

bool Field::eq(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case FieldKind::Prime:
      return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
    case FieldKind::Extension:
      return std::get<std::vector<std::uint64_t>>(a.v_) == std::get<std::vector<std::uint64_t>>(b.v_);
    case FieldKind::Rational:
      return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  }
  return false;
}

bool Field::less(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case FieldKind::Prime:
      return std::get<std::uint64_t>(a.v_) < std::get<std::uint64_t>(b.v_);
    case FieldKind::Extension:
      return std::get<std::vector<std::uint64_t>>(a.v_) < std::get<std::vector<std::uint64_t>>(b.v_);
    case FieldKind::Rational:
      return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
  }
  return false;
}

// ---------------------------------------------------------------------------
// enumeration

Elem Field::elementAt(std::uint64_t idx) const {
  if (!finite()) fail(Err::NotEnumerable, "the rationals are not enumerable");
  Elem e;
  if (kind_ == FieldKind::Prime) {
    e.v_ = idx % p_;
  } else {
    std::vector<std::uint64_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    e.v_ = std::move(c);
  }
  return e;
}

std::uint64_t Field::indexOf(const Elem& a) const {
  if (!finite()) fail(Err::NotEnumerable, "the rationals are not enumerable");
  if (kind_ == FieldKind::Prime) return std::get<std::uint64_t>(a.v_);
  const auto& c = std::get<std::vector<std::uint64_t>>(a.v_);
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + c[i];
  return idx;
}

// ---------------------------------------------------------------------------
// squares

void Field::buildSqrtTable() {
  sqrtTable_.assign(q_, kNoRoot);
  for (std::uint64_t i = 0; i < q_; ++i) {
    Elem e = elementAt(i);
    std::uint64_t sq = indexOf(mul(e, e));
    // keep the canonical (smaller in canonical order) root
    if (sqrtTable_[sq] == kNoRoot || less(e, elementAt(sqrtTable_[sq])))
      sqrtTable_[sq] = static_cast<std::uint32_t>(i);
  }
}

std::uint64_t Field::tonelliShanks(std::uint64_t a) const {
  // prime field, p odd, a a nonzero quadratic residue
  if (p_ % 4 == 3) return redPow(a, (p_ + 1) / 4);
  std::uint64_t s = 0, qq = p_ - 1;
  while ((qq & 1) == 0) {
    qq >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (redPow(z, (p_ - 1) / 2) == 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = redPow(z, qq);
  std::uint64_t t = redPow(a, qq);
  std::uint64_t r = redPow(a, (qq + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = redMul(tt, tt);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = redMul(b, b);
    m = i;
    c = redMul(b, b);
    t = redMul(t, c);
    r = redMul(r, b);
  }
  return r;
}

bool Field::isSquare(const Elem& a) const { return sqrt(a).has_value(); }

std::optional<std::pair<Elem, Elem>> Field::sqrt(const Elem& a) const {
  if (isZero(a)) return std::make_pair(zero(), zero());
  switch (kind_) {
    case FieldKind::Rational: {
      const auto& q = std::get<mpq_class>(a.v_);
      if (q < 0) return std::nullopt;
      const mpz_class& num = q.get_num();
      const mpz_class& den = q.get_den();
      if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      Elem r;
      r.v_ = mpq_class(rn, rd);
      return std::make_pair(r, neg(r));
    }
    case FieldKind::Prime: {
      std::uint64_t v = std::get<std::uint64_t>(a.v_);
      std::uint64_t root;
      if (!sqrtTable_.empty()) {
        std::uint32_t t = sqrtTable_[v];
        if (t == kNoRoot) return std::nullopt;
        root = t;
      } else {
        if (redPow(v, (p_ - 1) / 2) != 1) return std::nullopt;
        root = tonelliShanks(v);
      }
      // canonical representative in [0,(p-1)/2]
      if (root > p_ - root) root = p_ - root;
      Elem r;
      r.v_ = root;
      return std::make_pair(r, neg(r));
    }
    case FieldKind::Extension: {
      std::uint32_t t = sqrtTable_[indexOf(a)];
      if (t == kNoRoot) return std::nullopt;
      Elem r = elementAt(t);
      Elem nr = neg(r);
      if (less(nr, r)) std::swap(r, nr);
      return std::make_pair(r, nr);
    }
  }
  return std::nullopt;
}

}  // namespace halfpoint
