#pragma once

#include <string>
#include <vector>

#include "tverberg/matrix.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Largest supported root-of-unity order.
inline constexpr int kMaxCyclotomicOrder = 128;

/// An element of Q(w), w = exp(2 pi i / q), stored as a length-q vector of
/// rational coefficients of 1, w, ..., w^(q-1).
///
/// Values are kept reduced modulo the q-th cyclotomic polynomial, so only the
/// first phi(q) coefficients can be nonzero and two values are equal exactly
/// when their coefficient vectors are. For prime q this is the same as reducing
/// by 1 + w + ... + w^(q-1) = 0.
class Cyclotomic {
 public:
  /// Zero of Q(w_q).
  explicit Cyclotomic(int order);
  /// Rational constant embedded in Q(w_q).
  Cyclotomic(int order, const Rational& constant);
  /// Sum of coeffs[m] * w^m, reduced. `coeffs` may have any length.
  Cyclotomic(int order, const std::vector<Rational>& coeffs);

  int order() const noexcept { return order_; }
  /// Canonical coefficients; always exactly order() entries.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// True iff the value is rational (only the constant term is nonzero).
  bool is_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }

  /// Multiplicative inverse. Throws InvalidParameter on zero.
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form such as "-1/2 + 3*w^2".
  std::string to_string() const;

 private:
  void reduce();

  int order_;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the q-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int order);

/// w^(power mod order). Throws InvalidParameter if order < 2.
Cyclotomic cyclo_root(int order, long power);

/// Image under w -> w^(-1), i.e. complex conjugation.
Cyclotomic cyclo_conj(const Cyclotomic& x);

/// True iff conj(x) == x.
bool cyclo_is_real(const Cyclotomic& x);

/// Sign of a real element: exact zero test, then an interval evaluation of
/// sum c_m cos(2 pi m / q) with doubling precision until zero is excluded.
/// Throws ContractViolation if x is not real.
int cyclo_real_sign(const Cyclotomic& x);

/// Determinant over Q(w_q). `order` fixes the field for the empty matrix.
Cyclotomic det_cyclotomic(const Matrix<Cyclotomic>& m, int order,
                          std::size_t cap = kDefaultDeterminantCap);

}  // namespace tverberg
