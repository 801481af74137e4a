#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace orbitlab {

using Rational = mpq_class;

std::string to_string(const Rational& q);
/// Parses `int ['/' posint]`.
Rational parse_rational(std::string_view text);

// Exact element of Q(i, sqrt2, sqrt5).
//
// Coordinates over {1, sqrt2, sqrt5, sqrt10} x {1, i}. A radical index is a
// two-bit mask: bit 0 is sqrt2, bit 1 is sqrt5, so sqrt10 = 3 and the product
// of two radicals is the xor of their indices times the squares they share.
class Scalar {
 public:
  enum Radical : int { kOne = 0, kSqrt2 = 1, kSqrt5 = 2, kSqrt10 = 3 };

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(Rational value);  // NOLINT(google-explicit-constructor)

  static Scalar radical(Radical r, const Rational& coef = 1);
  static Scalar i();
  static Scalar sqrt2() { return radical(kSqrt2); }
  static Scalar sqrt5() { return radical(kSqrt5); }
  static Scalar sqrt10() { return radical(kSqrt10); }

  const Rational& real_coeff(Radical r) const { return coeffs_[r]; }
  const Rational& imag_coeff(Radical r) const { return coeffs_[4 + r]; }
  /// Raw coordinate, index = radical + 4 * imaginary.
  const Rational& coeff(int index) const { return coeffs_.at(index); }

  bool is_zero() const;
  bool is_real() const;
  bool is_imaginary() const;
  bool is_rational() const;
  /// The rational value; throws DomainError unless is_rational().
  Rational to_rational() const;

  Scalar conj() const;
  Scalar real_part() const;
  /// Imaginary part as a real Scalar, so that a == real_part() + i * imag_part().
  Scalar imag_part() const;
  /// Throws DomainError on zero.
  Scalar inverse() const;

  /// Radicals evaluated in double precision. Diagnostic output only.
  std::complex<double> as_float() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical literal in the scalar grammar, e.g. "1/2*sqrt10 - i*3".
  std::string to_string() const;
  /// scalar := term (('+'|'-') term)*; term := ['i' '*'] rational ['*' radical].
  static Scalar parse(std::string_view text);

 private:
  // Applies the Galois automorphism negating the given radical bits; also
  // conjugates when `conj` is set.
  Scalar galois(int radical_mask, bool conj) const;

  std::array<Rational, 8> coeffs_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// sqrt(q) as a Scalar when it lies in the field, e.g. 5/8 -> sqrt10/4.
std::optional<Scalar> sqrt_in_field(const Rational& q);

}  // namespace orbitlab
