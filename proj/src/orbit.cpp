#include "orbitlab/orbit.hpp"

#include "orbitlab/errors.hpp"
#include "orbitlab/named.hpp"

namespace orbitlab {

namespace {

void require_nonzero(const RepVector& v) {
  if (v.is_zero()) throw DomainError("the zero vector has no projective class");
}

// X v - (<X v, v> / <v, v>) v, the horizontal part at the unnormalized v.
RepVector horizontal(const RepVector& v, const LieAlgebraElement& x, const Scalar& norm) {
  RepVector xv = lie_action(x, v);
  const Scalar vertical = inner_product(xv, v) / norm;
  return xv - vertical * v;
}

LieAlgebraElement combine(const std::vector<LieAlgebraElement>& basis, const ScalarVector& coeffs) {
  LieAlgebraElement out = LieAlgebraElement::zero(basis.front().factors());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * basis[k];
  }
  return out;
}

}  // namespace

bool TangentFrame::gram_is_diagonal() const {
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    for (std::size_t c = 0; c < gram.cols(); ++c) {
      if (r != c && !gram(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool TangentFrame::gram_is_identity() const {
  if (!gram_is_diagonal()) return false;
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    if (!(gram(r, r) == Scalar(1))) return false;
  }
  return true;
}

Scalar moment_map(const RepVector& v, const LieAlgebraElement& x) {
  require_nonzero(v);
  const Scalar pairing = inner_product(lie_action(x, v), v) / inner_product(v, v);
  return Scalar(Rational(-1, 2)) * Scalar::i() * pairing;
}

std::vector<LieAlgebraElement> isotropy_algebra(const RepVector& v) {
  require_nonzero(v);
  const auto basis = su2_basis(v.space().factors());
  const Scalar norm = inner_product(v, v);

  std::vector<ScalarVector> columns;
  for (const auto& e : basis) {
    const RepVector xv = lie_action(e, v);
    const ScalarVector h = horizontal(v, e, norm).dense();
    ScalarVector col;
    col.reserve(2 * h.size() + 1);
    for (const auto& s : h) {
      col.push_back(s.real_part());
      col.push_back(s.imag_part());
    }
    col.push_back(inner_product(xv, v).real_part());
    columns.push_back(std::move(col));
  }

  ScalarMatrix system(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < columns[c].size(); ++r) system(r, c) = columns[c][r];
  }

  std::vector<LieAlgebraElement> out;
  for (const auto& kernel : nullspace(system)) out.push_back(combine(basis, kernel));
  return out;
}

OrbitReport classify_orbit(const RepVector& v) {
  require_nonzero(v);
  const auto basis = su2_basis(v.space().factors());
  const Scalar norm = inner_product(v, v);

  OrbitReport report;
  report.isotropy_basis = isotropy_algebra(v);
  report.orbit_real_dim = static_cast<int>(basis.size() - report.isotropy_basis.size());
  report.ambient_complex_dim = static_cast<int>(v.space().dimension()) - 1;

  report.moment_map_zero = true;
  for (const auto& e : basis) {
    if (!moment_map(v, e).is_zero()) report.moment_map_zero = false;
  }

  std::vector<RepVector> lifts;
  for (const auto& e : basis) lifts.push_back(horizontal(v, e, norm));
  report.isotropic = true;
  for (std::size_t a = 0; a < lifts.size() && report.isotropic; ++a) {
    for (std::size_t b = a + 1; b < lifts.size(); ++b) {
      if (!inner_product(lifts[a], lifts[b]).imag_part().is_zero()) {
        report.isotropic = false;
        break;
      }
    }
  }
  report.lagrangian = report.isotropic && report.orbit_real_dim == report.ambient_complex_dim;
  return report;
}

Scalar fs_inner(const RepVector& v, const LieAlgebraElement& x, const LieAlgebraElement& y,
                const Rational& curvature) {
  require_nonzero(v);
  if (curvature <= 0) throw DomainError("curvature must be positive");
  const Scalar norm = inner_product(v, v);
  const Scalar raw = inner_product(horizontal(v, x, norm), horizontal(v, y, norm)) / norm;
  return raw * Scalar(Rational(4 / curvature));
}

Scalar fs_norm_squared(const RepVector& v, const LieAlgebraElement& x, const Rational& curvature) {
  return fs_inner(v, x, x, curvature).real_part();
}

TangentFrame tangent_frame(const RepVector& v, const Rational& curvature) {
  const OrbitReport report = classify_orbit(v);
  if (!report.lagrangian) throw DomainError("tangent_frame requires a point with a Lagrangian orbit");

  TangentFrame out{v, {}, {}, {}, curvature};
  if (v.space() == named::example_space() && proportionality(v, named::paper_point())) {
    for (auto& [name, x] : named::paper_frame()) {
      out.names.push_back(name);
      out.frame.push_back(x);
    }
  } else {
    // Killing-form complement of the isotropy algebra.
    const auto basis = su2_basis(v.space().factors());
    ScalarMatrix constraints(report.isotropy_basis.size(), basis.size());
    for (std::size_t r = 0; r < report.isotropy_basis.size(); ++r) {
      for (std::size_t c = 0; c < basis.size(); ++c) constraints(r, c) = killing_inner(report.isotropy_basis[r], basis[c]);
    }
    std::vector<LieAlgebraElement> complement;
    if (report.isotropy_basis.empty()) {
      complement = basis;
    } else {
      for (const auto& k : nullspace(constraints)) complement.push_back(combine(basis, k));
    }
    // Gram-Schmidt without normalization keeps everything in the field.
    std::vector<Scalar> norms;
    for (const auto& x : complement) {
      LieAlgebraElement w = x;
      for (std::size_t j = 0; j < out.frame.size(); ++j) {
        const Scalar proj = fs_inner(v, x, out.frame[j], curvature).real_part() / norms[j];
        w -= proj * out.frame[j];
      }
      norms.push_back(fs_norm_squared(v, w, curvature));
      out.frame.push_back(std::move(w));
      out.names.push_back("T" + std::to_string(out.frame.size()));
    }
  }

  const std::size_t n = out.frame.size();
  out.gram = ScalarMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.gram(r, c) = fs_inner(v, out.frame[r], out.frame[c], curvature).real_part();
  }
  return out;
}

std::optional<Scalar> proportionality(const RepVector& u, const RepVector& v) {
  require_nonzero(v);
  if (!(u.space() == v.space())) return std::nullopt;
  const auto& [m, c] = *v.terms().begin();
  const Scalar ratio = u.coeff(m) / c;
  if (!(u == ratio * v)) return std::nullopt;
  return ratio;
}

bool fixes_point(const GroupElement& g, const RepVector& v) {
  return proportionality(group_action(g, v), v).has_value();
}

}  // namespace orbitlab

namespace orbitlab {

namespace {

// Integer weight w with h = diag(i w, -i w), if h has that shape.
std::optional<long> diagonal_weight(const Mat2& m) {
  if (!m[1].is_zero() || !m[2].is_zero()) return std::nullopt;
  const Scalar w = m[0] / Scalar::i();
  if (!w.is_rational()) return std::nullopt;
  const Rational q = w.to_rational();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

Scalar signed_power(const Scalar& z, long e) {
  const Scalar base = e < 0 ? z.inverse() : z;
  Scalar out = 1;
  for (long k = 0; k < std::labs(e); ++k) out *= base;
  return out;
}

}  // namespace

bool on_one_parameter_subgroup(const GroupElement& g, const LieAlgebraElement& h) {
  if (g.factors() != h.factors()) throw DomainError("on_one_parameter_subgroup: factor count mismatch");
  std::vector<long> weights;
  std::optional<std::size_t> pin;
  for (std::size_t j = 0; j < h.factors(); ++j) {
    const auto w = diagonal_weight(h.blocks()[j]);
    if (!w) throw DomainError("one-parameter subgroup test needs a diagonal generator with integer weights");
    weights.push_back(*w);
    if (!pin && std::labs(*w) == 1) pin = j;
  }
  if (!pin) throw DomainError("one-parameter subgroup test needs a weight of absolute value 1");
  for (const auto& m : g.blocks()) {
    if (!m[1].is_zero() || !m[2].is_zero()) return false;
  }
  // exp(t h) has blocks diag(z^w_j, z^-w_j) with z = e^{it}.
  const Scalar z = signed_power(g.blocks()[*pin][0], weights[*pin]);
  for (std::size_t j = 0; j < g.factors(); ++j) {
    if (!(g.blocks()[j][0] == signed_power(z, weights[j]))) return false;
  }
  return true;
}

std::optional<int> component_order(const GroupElement& g, const RepVector& v, const LieAlgebraElement& h,
                                   int max_order) {
  GroupElement power_k = g;
  for (int k = 1; k <= max_order; ++k) {
    if (!fixes_point(power_k, v)) return std::nullopt;
    if (on_one_parameter_subgroup(power_k, h)) return k;
    power_k = power_k * g;
  }
  return std::nullopt;
}

}  // namespace orbitlab
