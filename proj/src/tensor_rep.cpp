#include "orbitlab/tensor_rep.hpp"

#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

void check_factors(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": factor count mismatch (" << a << " vs " << b << ")";
    throw DomainError(os.str());
  }
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Scalar ipow(const Scalar& base, int e) {
  Scalar out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

// Coefficients of (g e1)^a (g e2)^(k-a) on e1^s e2^(k-s), s = 0..k.
std::vector<Scalar> substitute(const Mat2& g, int degree, int a) {
  const int b = degree - a;
  // g e1 = g00 e1 + g10 e2, g e2 = g01 e1 + g11 e2
  std::vector<Scalar> out(degree + 1);
  for (int s = 0; s <= a; ++s) {
    const Scalar left = Scalar(Rational(binomial(a, s))) * ipow(g[0], s) * ipow(g[2], a - s);
    if (left.is_zero()) continue;
    for (int t = 0; t <= b; ++t) {
      const Scalar right = Scalar(Rational(binomial(b, t))) * ipow(g[1], t) * ipow(g[3], b - t);
      if (right.is_zero()) continue;
      out[s + t] += left * right;
    }
  }
  return out;
}

Mat2 scaled(const Mat2& m, const Scalar& s) { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }

}  // namespace

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_adjoint(const Mat2& a) { return {a[0].conj(), a[2].conj(), a[1].conj(), a[3].conj()}; }

Scalar mat2_trace(const Mat2& a) { return a[0] + a[3]; }

Scalar mat2_det(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }

// --- RepSpace ---------------------------------------------------------------

RepSpace::RepSpace(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw DomainError("representation space needs at least one factor");
  for (int k : degrees_) {
    if (k < 0) throw DomainError("symmetric power degree must be nonnegative");
  }
}

std::size_t RepSpace::dimension() const {
  std::size_t d = 1;
  for (int k : degrees_) d *= static_cast<std::size_t>(k + 1);
  return d;
}

bool RepSpace::contains(const Monomial& m) const {
  if (m.e1.size() != degrees_.size()) return false;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (m.e1[j] < 0 || m.e1[j] > degrees_[j]) return false;
  }
  return true;
}

std::vector<Monomial> RepSpace::monomials() const {
  std::vector<Monomial> out;
  out.reserve(dimension());
  Monomial m{std::vector<int>(degrees_.size(), 0)};
  while (true) {
    out.push_back(m);
    std::size_t j = degrees_.size();
    while (j > 0) {
      --j;
      if (m.e1[j] < degrees_[j]) {
        ++m.e1[j];
        break;
      }
      m.e1[j] = 0;
      if (j == 0) return out;
    }
  }
}

std::size_t RepSpace::index_of(const Monomial& m) const {
  if (!contains(m)) throw DomainError("monomial not in space");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    idx = idx * static_cast<std::size_t>(degrees_[j] + 1) + static_cast<std::size_t>(m.e1[j]);
  }
  return idx;
}

Rational RepSpace::monomial_norm_squared(const Monomial& m) const {
  mpz_class den = 1;
  for (std::size_t j = 0; j < degrees_.size(); ++j) den *= binomial(degrees_[j], m.e1[j]);
  return Rational(1, den);
}

// --- RepVector --------------------------------------------------------------

RepVector RepVector::monomial(const RepSpace& space, const Monomial& m, const Scalar& coef) {
  RepVector v(space);
  v.add(m, coef);
  return v;
}

Scalar RepVector::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar{} : it->second;
}

void RepVector::add(const Monomial& m, const Scalar& coef) {
  if (coef.is_zero()) return;
  if (!space_.contains(m)) throw DomainError("monomial does not belong to the space");
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RepVector& RepVector::operator+=(const RepVector& o) {
  if (!(space_ == o.space_)) throw DomainError("vector space mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

RepVector& RepVector::operator-=(const RepVector& o) {
  if (!(space_ == o.space_)) throw DomainError("vector space mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

RepVector& RepVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ScalarVector RepVector::dense() const {
  ScalarVector out(space_.dimension());
  for (const auto& [m, c] : terms_) out[space_.index_of(m)] = c;
  return out;
}

RepVector RepVector::from_dense(const RepSpace& space, const ScalarVector& coords) {
  if (coords.size() != space.dimension()) throw DomainError("coordinate count mismatch");
  RepVector v(space);
  const auto basis = space.monomials();
  for (std::size_t k = 0; k < coords.size(); ++k) v.add(basis[k], coords[k]);
  return v;
}

// --- Lie algebra and group elements -----------------------------------------

LieAlgebraElement::LieAlgebraElement(std::vector<Mat2> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("Lie algebra element needs at least one block");
  for (const auto& m : blocks_) {
    if (!mat2_trace(m).is_zero()) throw DomainError("su(2) block must be traceless");
    const Mat2 adj = mat2_adjoint(m);
    for (int k = 0; k < 4; ++k) {
      if (!(adj[k] == -m[k])) throw DomainError("su(2) block must be anti-Hermitian");
    }
  }
}

LieAlgebraElement LieAlgebraElement::zero(std::size_t factors) {
  return LieAlgebraElement(std::vector<Mat2>(factors));
}

bool LieAlgebraElement::is_zero() const {
  for (const auto& m : blocks_) {
    for (const auto& s : m) {
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

LieAlgebraElement& LieAlgebraElement::operator+=(const LieAlgebraElement& o) {
  check_factors(factors(), o.factors(), "Lie algebra sum");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    for (int k = 0; k < 4; ++k) blocks_[j][k] += o.blocks_[j][k];
  }
  return *this;
}

LieAlgebraElement& LieAlgebraElement::operator-=(const LieAlgebraElement& o) {
  check_factors(factors(), o.factors(), "Lie algebra difference");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    for (int k = 0; k < 4; ++k) blocks_[j][k] -= o.blocks_[j][k];
  }
  return *this;
}

LieAlgebraElement& LieAlgebraElement::operator*=(const Scalar& s) {
  if (!s.is_real()) throw DomainError("su(2) is a real Lie algebra; scalar must be real");
  for (auto& m : blocks_) m = scaled(m, s);
  return *this;
}

GroupElement::GroupElement(std::vector<Mat2> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("group element needs at least one block");
  const Mat2 id{1, 0, 0, 1};
  for (const auto& m : blocks_) {
    if (!(mat2_det(m) == Scalar(1))) throw DomainError("SU(2) block must have determinant 1");
    if (!(mat2_mul(mat2_adjoint(m), m) == id)) throw DomainError("SU(2) block must be unitary");
  }
}

GroupElement GroupElement::identity(std::size_t factors) {
  return GroupElement(std::vector<Mat2>(factors, Mat2{1, 0, 0, 1}));
}

GroupElement GroupElement::inverse() const {
  std::vector<Mat2> inv;
  inv.reserve(blocks_.size());
  for (const auto& m : blocks_) inv.push_back(mat2_adjoint(m));
  return GroupElement(std::move(inv));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  check_factors(a.factors(), b.factors(), "group product");
  std::vector<Mat2> out;
  for (std::size_t j = 0; j < a.factors(); ++j) out.push_back(mat2_mul(a.blocks_[j], b.blocks_[j]));
  return GroupElement(std::move(out));
}

GroupElement power(const GroupElement& g, int exponent) {
  GroupElement base = exponent < 0 ? g.inverse() : g;
  GroupElement out = GroupElement::identity(g.factors());
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

// --- Actions ----------------------------------------------------------------

RepVector lie_action(const LieAlgebraElement& x, const RepVector& v) {
  const RepSpace& space = v.space();
  check_factors(x.factors(), space.factors(), "lie_action");
  RepVector out(space);
  for (const auto& [m, c] : v.terms()) {
    for (std::size_t j = 0; j < space.factors(); ++j) {
      const Mat2& xm = x.blocks()[j];
      const int a = m.e1[j];
      const int b = space.degrees()[j] - a;
      // X e1 = x00 e1 + x10 e2, X e2 = x01 e1 + x11 e2, applied as a derivation.
      out.add(m, c * (Scalar(a) * xm[0] + Scalar(b) * xm[3]));
      if (a > 0 && !xm[2].is_zero()) {
        Monomial down = m;
        --down.e1[j];
        out.add(down, c * Scalar(a) * xm[2]);
      }
      if (b > 0 && !xm[1].is_zero()) {
        Monomial up = m;
        ++up.e1[j];
        out.add(up, c * Scalar(b) * xm[1]);
      }
    }
  }
  return out;
}

RepVector group_action(const GroupElement& g, const RepVector& v) {
  const RepSpace& space = v.space();
  check_factors(g.factors(), space.factors(), "group_action");
  RepVector out(space);
  for (const auto& [m, c] : v.terms()) {
    // Expand the tensor product of per-factor substitutions.
    std::vector<std::pair<Monomial, Scalar>> partial{{Monomial{}, c}};
    for (std::size_t j = 0; j < space.factors(); ++j) {
      const auto images = substitute(g.blocks()[j], space.degrees()[j], m.e1[j]);
      std::vector<std::pair<Monomial, Scalar>> next;
      for (const auto& [pm, pc] : partial) {
        for (int s = 0; s < static_cast<int>(images.size()); ++s) {
          if (images[s].is_zero()) continue;
          Monomial grown = pm;
          grown.e1.push_back(s);
          next.emplace_back(std::move(grown), pc * images[s]);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pm, pc] : partial) out.add(pm, pc);
  }
  return out;
}

Scalar inner_product(const RepVector& u, const RepVector& v) {
  if (!(u.space() == v.space())) throw DomainError("inner_product: space mismatch");
  Scalar out;
  for (const auto& [m, c] : u.terms()) {
    auto it = v.terms().find(m);
    if (it == v.terms().end()) continue;
    out += c * it->second.conj() * Scalar(u.space().monomial_norm_squared(m));
  }
  return out;
}

LieAlgebraElement bracket(const LieAlgebraElement& x, const LieAlgebraElement& y) {
  check_factors(x.factors(), y.factors(), "bracket");
  std::vector<Mat2> out;
  for (std::size_t j = 0; j < x.factors(); ++j) {
    const Mat2 xy = mat2_mul(x.blocks()[j], y.blocks()[j]);
    const Mat2 yx = mat2_mul(y.blocks()[j], x.blocks()[j]);
    out.push_back({xy[0] - yx[0], xy[1] - yx[1], xy[2] - yx[2], xy[3] - yx[3]});
  }
  return LieAlgebraElement(std::move(out));
}

LieAlgebraElement adjoint(const GroupElement& g, const LieAlgebraElement& x) {
  check_factors(g.factors(), x.factors(), "adjoint");
  std::vector<Mat2> out;
  for (std::size_t j = 0; j < x.factors(); ++j) {
    out.push_back(mat2_mul(mat2_mul(g.blocks()[j], x.blocks()[j]), mat2_adjoint(g.blocks()[j])));
  }
  return LieAlgebraElement(std::move(out));
}

Scalar killing_form(const LieAlgebraElement& x, const LieAlgebraElement& y) {
  check_factors(x.factors(), y.factors(), "killing_form");
  Scalar out;
  for (std::size_t j = 0; j < x.factors(); ++j) out += mat2_trace(mat2_mul(x.blocks()[j], y.blocks()[j]));
  return Scalar(4) * out;
}

Scalar killing_inner(const LieAlgebraElement& x, const LieAlgebraElement& y) { return -killing_form(x, y); }

std::vector<LieAlgebraElement> su2_basis(std::size_t factors) {
  const Scalar i = Scalar::i();
  const Mat2 generators[] = {
      {i, 0, 0, -i},
      {0, 1, -1, 0},
      {0, i, i, 0},
  };
  std::vector<LieAlgebraElement> out;
  for (std::size_t j = 0; j < factors; ++j) {
    for (const auto& gen : generators) {
      std::vector<Mat2> blocks(factors);
      blocks[j] = gen;
      out.emplace_back(std::move(blocks));
    }
  }
  return out;
}

std::vector<std::string> su2_basis_names(std::size_t factors) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= factors; ++j) {
    for (const char* stem : {"a", "b", "c"}) out.push_back(stem + std::to_string(j));
  }
  return out;
}

// --- RepOperator ------------------------------------------------------------

RepOperator::RepOperator(const RepSpace& space, const std::function<RepVector(const RepVector&)>& f)
    : space_(space) {
  for (const auto& m : space.monomials()) columns_.push_back(f(RepVector::monomial(space, m)));
}

RepVector RepOperator::apply(const RepVector& v) const {
  if (!(v.space() == space_)) throw DomainError("operator applied to a vector of another space");
  RepVector out(space_);
  for (const auto& [m, c] : v.terms()) out += c * columns_[space_.index_of(m)];
  return out;
}

ScalarMatrix RepOperator::matrix() const {
  const std::size_t d = space_.dimension();
  ScalarMatrix out(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    for (const auto& [m, c] : columns_[col].terms()) out(space_.index_of(m), col) = c;
  }
  return out;
}

RepOperator operator*(const RepOperator& a, const RepOperator& b) {
  if (!(a.space_ == b.space_)) throw DomainError("operator space mismatch");
  std::vector<RepVector> cols;
  for (const auto& col : b.columns_) cols.push_back(a.apply(col));
  return RepOperator(a.space_, std::move(cols));
}

RepOperator operator+(const RepOperator& a, const RepOperator& b) {
  if (!(a.space_ == b.space_)) throw DomainError("operator space mismatch");
  std::vector<RepVector> cols = a.columns_;
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k] += b.columns_[k];
  return RepOperator(a.space_, std::move(cols));
}

RepOperator operator*(const Scalar& s, const RepOperator& a) {
  std::vector<RepVector> cols = a.columns_;
  for (auto& c : cols) c *= s;
  return RepOperator(a.space_, std::move(cols));
}

RepOperator lie_operator(const LieAlgebraElement& x, const RepSpace& space) {
  return RepOperator(space, [&](const RepVector& v) { return lie_action(x, v); });
}

RepOperator group_operator(const GroupElement& g, const RepSpace& space) {
  return RepOperator(space, [&](const RepVector& v) { return group_action(g, v); });
}

}  // namespace orbitlab
