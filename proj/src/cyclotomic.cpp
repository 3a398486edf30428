#include "tverberg/cyclotomic.hpp"

#include <mpfr.h>

#include <array>
#include <mutex>
#include <sstream>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

void check_order(int order) {
  if (order < 2) throw InvalidParameter("root-of-unity order must be >= 2");
  if (order > kMaxCyclotomicOrder) throw InvalidParameter("root-of-unity order too large");
}

using IntPoly = std::vector<long>;

// Exact quotient of integer polynomials when the divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

IntPoly compute_cyclotomic(int n) {
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a / b over Q; b must be nonzero and trimmed.
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    rem.pop_back();
    trim(rem);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int order) {
  if (order < 1 || order > kMaxCyclotomicOrder) {
    throw InvalidParameter("cyclotomic polynomial order out of range");
  }
  static std::array<std::once_flag, kMaxCyclotomicOrder + 1> flags;
  static std::array<IntPoly, kMaxCyclotomicOrder + 1> table;
  std::call_once(flags[order], [order] { table[order] = compute_cyclotomic(order); });
  return table[order];
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  check_order(order);
  coeffs_.assign(order, Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& constant) : Cyclotomic(order) {
  coeffs_[0] = constant;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, const std::vector<Rational>& coeffs) : order_(order) {
  check_order(order);
  coeffs_ = coeffs;
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

void Cyclotomic::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t degree = phi.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > degree;) {
    if (sgn(coeffs_[i]) == 0) continue;
    const Rational c = coeffs_[i];
    for (std::size_t j = 0; j <= degree; ++j) coeffs_[i - degree + j] -= c * phi[j];
  }
  coeffs_.resize(order_, Rational(0));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) throw InvalidParameter("mixed root-of-unity orders");
  for (int i = 0; i < order_; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) throw InvalidParameter("mixed root-of-unity orders");
  for (int i = 0; i < order_; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) throw InvalidParameter("mixed root-of-unity orders");
  std::vector<Rational> product(2 * order_ - 1, Rational(0));
  for (int i = 0; i < order_; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < order_; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  Rational scale = rhs;
  scale.canonicalize();
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidParameter("inverse of zero");
  if (is_rational()) return Cyclotomic(order_, Rational(1 / coeffs_[0]));

  // Extended Euclid: track s with s * x == r (mod phi).
  const auto& phi_int = cyclotomic_polynomial(order_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly quot, rem;
    poly_divmod(r0, r1, quot, rem);
    RatPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // phi is irreducible, so the last nonzero remainder is a constant.
  if (r1.empty()) throw InternalConsistencyError("cyclotomic inverse: non-unit element");
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return Cyclotomic(order_, s1);
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int m = 0; m < order_; ++m) {
    const Rational& c = coeffs_[m];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    if (m == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "w";
      if (m > 1) out << "^" << m;
    }
  }
  return first ? "0" : out.str();
}

Cyclotomic cyclo_root(int order, long power) {
  check_order(order);
  long e = power % order;
  if (e < 0) e += order;
  std::vector<Rational> coeffs(order, Rational(0));
  coeffs[e] = 1;
  return Cyclotomic(order, coeffs);
}

Cyclotomic cyclo_conj(const Cyclotomic& x) {
  const int q = x.order();
  std::vector<Rational> coeffs(q, Rational(0));
  coeffs[0] = x.coeffs()[0];
  for (int m = 1; m < q; ++m) coeffs[q - m] = x.coeffs()[m];
  return Cyclotomic(q, coeffs);
}

bool cyclo_is_real(const Cyclotomic& x) { return cyclo_conj(x) == x; }

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

// Returns the sign if the evaluation at `precision` bits certifies it, else 0.
int certified_sign(const Cyclotomic& x, mpfr_prec_t precision) {
  const int q = x.order();
  MpfrValue sum(precision), term(precision), angle(precision), coeff(precision);
  mpfr_set_zero(sum.get(), 1);
  Rational magnitude(0);
  for (int m = 0; m < q; ++m) {
    const Rational& c = x.coeffs()[m];
    if (sgn(c) == 0) continue;
    magnitude += abs(c);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2UL * static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(q), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(coeff.get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coeff.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  // Each cosine is within 2^(6-p) of the truth; conversions, products and
  // q additions contribute relative 2^(-p) each. (q + 64) * 2^(2-p) per unit
  // of coefficient magnitude bounds all of it.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(precision - 2));
  const Rational bound = magnitude * (q + 64) / Rational(scale);
  Rational value;
  mpfr_get_q(value.get_mpq_t(), sum.get());
  if (abs(value) > bound) return sgn(value);
  return 0;
}

}  // namespace

int cyclo_real_sign(const Cyclotomic& x) {
  if (!cyclo_is_real(x)) throw ContractViolation("cyclo_real_sign: value is not real");
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.coeffs()[0]);
  for (mpfr_prec_t precision = 128; precision <= (mpfr_prec_t{1} << 22); precision *= 2) {
    if (const int s = certified_sign(x, precision)) return s;
  }
  throw InternalConsistencyError("cyclo_real_sign: nonzero value not separated from zero");
}

Cyclotomic det_cyclotomic(const Matrix<Cyclotomic>& m, int order, std::size_t cap) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).order() != order) throw InvalidParameter("matrix entry has wrong root order");
    }
  }
  return bareiss_determinant(
      m, Cyclotomic(order, Rational(1)), [](const Cyclotomic& x) { return x.is_zero(); },
      [](const Cyclotomic& p) {
        return [inv = p.inverse()](const Cyclotomic& x) { return x * inv; };
      },
      cap);
}

}  // namespace tverberg
