#include "orbitlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

constexpr const char* kRadicalNames[] = {"", "sqrt2", "sqrt5", "sqrt10"};

// Square factor produced when multiplying radicals a and b.
long radical_square(int a, int b) {
  const int shared = a & b;
  return ((shared & 1) ? 2 : 1) * ((shared & 2) ? 5 : 1);
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Scalar parse_scalar() {
    skip_ws();
    if (done()) fail("empty scalar literal");
    // A sign before a leading 'i' term, as in "-i*3".
    bool negate = false;
    if (text_[pos_] == '-') {
      const std::size_t next = text_.find_first_not_of(" \t", pos_ + 1);
      if (next != std::string_view::npos && text_[next] == 'i') {
        negate = true;
        pos_ = next;
      }
    }
    Scalar total = parse_term();
    if (negate) total = -total;
    skip_ws();
    while (!done()) {
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      Scalar term = parse_term();
      if (op == '+') {
        total += term;
      } else {
        total -= term;
      }
      skip_ws();
    }
    return total;
  }

  Rational parse_rational_only() {
    skip_ws();
    Rational q = parse_rational(true);
    skip_ws();
    if (!done()) fail("trailing characters after rational");
    return q;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at column " << pos_ + 1 << " in \"" << text_ << "\"";
    throw ParseError(os.str(), 1, pos_ + 1);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational parse_rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && !done() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    mpz_class num(digits());
    mpz_class den = 1;
    skip_ws();
    if (!done() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  Scalar parse_term() {
    bool imaginary = false;
    if (consume("i")) {
      skip_ws();
      if (!consume("*")) fail("expected '*' after 'i'");
      skip_ws();
      imaginary = true;
    }
    const Rational coef = parse_rational(true);
    skip_ws();
    Scalar::Radical radical = Scalar::kOne;
    if (consume("*")) {
      skip_ws();
      if (consume("sqrt10")) {
        radical = Scalar::kSqrt10;
      } else if (consume("sqrt2")) {
        radical = Scalar::kSqrt2;
      } else if (consume("sqrt5")) {
        radical = Scalar::kSqrt5;
      } else {
        fail("expected sqrt2, sqrt5 or sqrt10");
      }
    }
    Scalar term = Scalar::radical(radical, coef);
    return imaginary ? term * Scalar::i() : term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) { return LiteralParser(text).parse_rational_only(); }

Scalar::Scalar(long value) { coeffs_[0] = value; }

Scalar::Scalar(Rational value) {
  value.canonicalize();
  coeffs_[0] = std::move(value);
}

Scalar Scalar::radical(Radical r, const Rational& coef) {
  Scalar s;
  s.coeffs_[r] = coef;
  s.coeffs_[r].canonicalize();
  return s;
}

Scalar Scalar::i() {
  Scalar s;
  s.coeffs_[4] = 1;
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_real() const {
  for (int k = 4; k < 8; ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

bool Scalar::is_imaginary() const {
  for (int k = 0; k < 4; ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (int k = 1; k < 8; ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw DomainError("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::galois(int radical_mask, bool conj) const {
  Scalar out;
  for (int k = 0; k < 8; ++k) {
    const int r = k & 3;
    const bool imag = k >= 4;
    const bool flip = (__builtin_popcount(r & radical_mask) & 1) != 0;
    out.coeffs_[k] = (flip != (conj && imag)) ? Rational(-coeffs_[k]) : coeffs_[k];
  }
  return out;
}

Scalar Scalar::conj() const { return galois(0, true); }

Scalar Scalar::real_part() const {
  Scalar out;
  for (int k = 0; k < 4; ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

Scalar Scalar::imag_part() const {
  Scalar out;
  for (int k = 0; k < 4; ++k) out.coeffs_[k] = coeffs_[4 + k];
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  // Norm down the tower Q(i,sqrt2,sqrt5) > Q(sqrt2,sqrt5) > Q(sqrt2) > Q.
  const Scalar c1 = conj();
  const Scalar n1 = *this * c1;
  const Scalar c2 = n1.galois(kSqrt5, false);
  const Scalar n2 = n1 * c2;
  const Scalar c3 = n2.galois(kSqrt2, false);
  const Scalar n3 = n2 * c3;
  const Rational norm = n3.to_rational();
  Scalar out = c1 * c2 * c3;
  for (auto& c : out.coeffs_) c /= norm;
  return out;
}

std::complex<double> Scalar::as_float() const {
  const double radicals[] = {1.0, std::sqrt(2.0), std::sqrt(5.0), std::sqrt(10.0)};
  double re = 0.0;
  double im = 0.0;
  for (int r = 0; r < 4; ++r) {
    re += coeffs_[r].get_d() * radicals[r];
    im += coeffs_[4 + r].get_d() * radicals[r];
  }
  return {re, im};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int k = 0; k < 8; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int k = 0; k < 8; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out;
  for (int k = 0; k < 8; ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  Rational term;
  for (int ka = 0; ka < 8; ++ka) {
    if (a.coeffs_[ka] == 0) continue;
    for (int kb = 0; kb < 8; ++kb) {
      if (b.coeffs_[kb] == 0) continue;
      const int ra = ka & 3;
      const int rb = kb & 3;
      const int ia = ka >> 2;
      const int ib = kb >> 2;
      term = a.coeffs_[ka] * b.coeffs_[kb];
      term *= radical_square(ra, rb);
      const int r = ra ^ rb;
      if (ia + ib == 2) {
        out.coeffs_[r] -= term;
      } else {
        out.coeffs_[r + 4 * (ia + ib)] += term;
      }
    }
  }
  return out;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << (k >= 4 ? "i*-" : "-");
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool first_term = first;
    first = false;
    if (k >= 4 && !(first_term && negative)) os << "i*";
    os << orbitlab::to_string(abs(c));
    if ((k & 3) != 0) os << '*' << kRadicalNames[k & 3];
  }
  if (first) return "0";
  return os.str();
}

Scalar Scalar::parse(std::string_view text) { return LiteralParser(text).parse_scalar(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::optional<Scalar> sqrt_in_field(const Rational& q) {
  if (q == 0) return Scalar{};
  const Rational magnitude = abs(q);
  for (int r : {0, 1, 2, 3}) {
    const long t = radical_square(r, r);
    const Rational scaled = magnitude * t;
    mpz_class num = scaled.get_num();
    mpz_class den = scaled.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    // sqrt(q) = sqrt(q t) / sqrt(t) = (rn/rd) * sqrt(t) / t.
    Rational coef(rn, rd * t);
    coef.canonicalize();
    Scalar root = Scalar::radical(static_cast<Scalar::Radical>(r), coef);
    return q < 0 ? root * Scalar::i() : root;
  }
  return std::nullopt;
}

}  // namespace orbitlab
