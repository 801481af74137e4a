#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbitlab/linalg.hpp"
#include "orbitlab/scalar.hpp"

namespace orbitlab {

/// 2x2 matrix, row-major: {m00, m01, m10, m11}. Columns are the images of e1, e2.
using Mat2 = std::array<Scalar, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_adjoint(const Mat2& a);  // conjugate transpose
Scalar mat2_trace(const Mat2& a);
Scalar mat2_det(const Mat2& a);

/// Exponents of e1 in each tensor factor; the e2 exponent is degree - a.
struct Monomial {
  std::vector<int> e1;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// S^{k1}(C^2) (x) ... (x) S^{kr}(C^2).
class RepSpace {
 public:
  explicit RepSpace(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t factors() const { return degrees_.size(); }
  std::size_t dimension() const;

  bool contains(const Monomial& m) const;
  /// All basis monomials in canonical (lexicographic) order.
  std::vector<Monomial> monomials() const;
  std::size_t index_of(const Monomial& m) const;

  /// <m, m> = prod_j 1/binomial(k_j, a_j).
  Rational monomial_norm_squared(const Monomial& m) const;

  bool operator==(const RepSpace&) const = default;

 private:
  std::vector<int> degrees_;
};

/// Sparse exact vector over the monomial basis. Zero coefficients are never stored.
class RepVector {
 public:
  explicit RepVector(RepSpace space) : space_(std::move(space)) {}
  static RepVector monomial(const RepSpace& space, const Monomial& m, const Scalar& coef = 1);

  const RepSpace& space() const { return space_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const Scalar& coef);

  RepVector& operator+=(const RepVector& o);
  RepVector& operator-=(const RepVector& o);
  RepVector& operator*=(const Scalar& s);
  friend RepVector operator+(RepVector a, const RepVector& b) { return a += b; }
  friend RepVector operator-(RepVector a, const RepVector& b) { return a -= b; }
  friend RepVector operator*(const Scalar& s, RepVector v) { return v *= s; }
  friend RepVector operator*(RepVector v, const Scalar& s) { return v *= s; }

  bool operator==(const RepVector&) const = default;

  /// Dense coordinates in the canonical monomial order.
  ScalarVector dense() const;
  static RepVector from_dense(const RepSpace& space, const ScalarVector& coords);

 private:
  RepSpace space_;
  std::map<Monomial, Scalar> terms_;
};

// Element of su(2)^r: traceless anti-Hermitian 2x2 blocks.
class LieAlgebraElement {
 public:
  /// Throws DomainError if a block is not traceless anti-Hermitian.
  explicit LieAlgebraElement(std::vector<Mat2> blocks);
  static LieAlgebraElement zero(std::size_t factors);

  const std::vector<Mat2>& blocks() const { return blocks_; }
  std::size_t factors() const { return blocks_.size(); }
  bool is_zero() const;

  LieAlgebraElement& operator+=(const LieAlgebraElement& o);
  LieAlgebraElement& operator-=(const LieAlgebraElement& o);
  /// Real multiples only; throws DomainError for non-real s.
  LieAlgebraElement& operator*=(const Scalar& s);
  friend LieAlgebraElement operator+(LieAlgebraElement a, const LieAlgebraElement& b) { return a += b; }
  friend LieAlgebraElement operator-(LieAlgebraElement a, const LieAlgebraElement& b) { return a -= b; }
  friend LieAlgebraElement operator*(const Scalar& s, LieAlgebraElement x) { return x *= s; }

  bool operator==(const LieAlgebraElement&) const = default;

 private:
  std::vector<Mat2> blocks_;
};

// Element of SU(2)^r.
class GroupElement {
 public:
  /// Throws DomainError unless each block has det 1 and M*M = I.
  explicit GroupElement(std::vector<Mat2> blocks);
  static GroupElement identity(std::size_t factors);

  const std::vector<Mat2>& blocks() const { return blocks_; }
  std::size_t factors() const { return blocks_.size(); }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  bool operator==(const GroupElement&) const = default;

 private:
  std::vector<Mat2> blocks_;
};

GroupElement power(const GroupElement& g, int exponent);

/// d rho(X) v: derivation on each symmetric power, summed over factors.
RepVector lie_action(const LieAlgebraElement& x, const RepVector& v);
/// rho(g) v: linear substitution e_j -> g e_j in each factor.
RepVector group_action(const GroupElement& g, const RepVector& v);
/// Linear in u, conjugate-linear in v.
Scalar inner_product(const RepVector& u, const RepVector& v);

LieAlgebraElement bracket(const LieAlgebraElement& x, const LieAlgebraElement& y);
/// Ad(g) X = g X g^{-1}.
LieAlgebraElement adjoint(const GroupElement& g, const LieAlgebraElement& x);

/// Cartan-Killing form, B(X, Y) = sum_j 4 tr(X_j Y_j). Negative definite.
Scalar killing_form(const LieAlgebraElement& x, const LieAlgebraElement& y);
/// -B, the positive definite Ad-invariant inner product used for orthonormality.
Scalar killing_inner(const LieAlgebraElement& x, const LieAlgebraElement& y);

/// Real basis of su(2)^r, three per factor: diag(i,-i), [[0,1],[-1,0]], [[0,i],[i,0]].
std::vector<LieAlgebraElement> su2_basis(std::size_t factors);
/// Names matching su2_basis: "a1","b1","c1","a2",...
std::vector<std::string> su2_basis_names(std::size_t factors);

/// Linear operator on a RepSpace, stored as the images of the basis monomials.
class RepOperator {
 public:
  RepOperator(const RepSpace& space, const std::function<RepVector(const RepVector&)>& f);

  const RepSpace& space() const { return space_; }
  RepVector apply(const RepVector& v) const;
  /// Dense matrix in the canonical monomial order (columns = images).
  ScalarMatrix matrix() const;

  friend RepOperator operator*(const RepOperator& a, const RepOperator& b);  // a after b
  friend RepOperator operator+(const RepOperator& a, const RepOperator& b);
  friend RepOperator operator*(const Scalar& s, const RepOperator& a);
  bool operator==(const RepOperator&) const = default;

 private:
  RepOperator(RepSpace space, std::vector<RepVector> columns)
      : space_(std::move(space)), columns_(std::move(columns)) {}

  RepSpace space_;
  std::vector<RepVector> columns_;
};

RepOperator lie_operator(const LieAlgebraElement& x, const RepSpace& space);
RepOperator group_operator(const GroupElement& g, const RepSpace& space);

}  // namespace orbitlab
