#include "orbitlab/spectrum.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>

#include "orbitlab/errors.hpp"
#include "orbitlab/named.hpp"

namespace orbitlab {

namespace {

RepSpace cell_space(int ell, int n) {
  if (ell < 0 || n < 0) throw DomainError("l and n must be nonnegative");
  return RepSpace({2 * ell, 2 * n});
}

std::string label(int ell, int n, int q) {
  std::ostringstream os;
  os << "(l,n,q)=(" << ell << "," << n << "," << q << ")";
  return os.str();
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::kHamiltonianStable ? "hamiltonian-stable" : "unstable"; }

std::vector<int> admissible_q(int ell, int n) {
  std::vector<int> out;
  for (int q = 0; q <= 2 * n; ++q) {
    if (2 * n - ell <= 2 * q && 2 * q <= 2 * n + ell) out.push_back(q);
  }
  return out;
}

int weight_zero_p(int ell, int n, int q) { return ell + 2 * (q - n); }

RepVector v_pq(int ell, int n, int p, int q) {
  const RepSpace space = cell_space(ell, n);
  RepVector v(space);
  v.add(Monomial{{p, q}}, 1);
  v.add(Monomial{{2 * ell - p, 2 * n - q}}, (n + p) % 2 == 0 ? 1 : -1);
  return v;
}

std::vector<RepVector> fixed_subspace(const RepSpace& space, const std::vector<LieAlgebraElement>& algebra,
                                      const std::vector<GroupElement>& components) {
  const std::size_t d = space.dimension();
  ScalarMatrix system(0, d);
  auto append = [&](const ScalarMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ScalarVector row(d);
      bool nonzero = false;
      for (std::size_t c = 0; c < d; ++c) {
        row[c] = m(r, c);
        nonzero = nonzero || !row[c].is_zero();
      }
      if (nonzero) system.append_row(row);
    }
  };
  for (const auto& x : algebra) append(lie_operator(x, space).matrix());
  for (const auto& g : components) {
    ScalarMatrix m = group_operator(g, space).matrix();
    for (std::size_t k = 0; k < d; ++k) m(k, k) -= 1;
    append(m);
  }
  std::vector<RepVector> out;
  if (system.rows() == 0) {
    for (const auto& m : space.monomials()) out.push_back(RepVector::monomial(space, m));
    return out;
  }
  for (const auto& x : nullspace(system)) out.push_back(RepVector::from_dense(space, x));
  return out;
}

SphericalSubspace spherical_subspace(int ell, int n) {
  const RepSpace space = cell_space(ell, n);
  const LieAlgebraElement h = named::H();
  const GroupElement sigma = named::sigma();
  const auto fixed = fixed_subspace(space, {h}, {sigma});

  SphericalSubspace out;
  out.ell = ell;
  out.n = n;
  out.d_rho = (2 * ell + 1) * (2 * n + 1);
  // q and 2n - q label the same vector up to sign; keep q <= n.
  for (int q : admissible_q(ell, n)) {
    if (q > n) continue;
    const int p = weight_zero_p(ell, n, q);
    RepVector v = v_pq(ell, n, p, q);
    if (v.is_zero()) continue;
    if (!lie_action(h, v).is_zero() || !(group_action(sigma, v) == v)) {
      throw InternalError("v_pq is not K-fixed at " + label(ell, n, q));
    }
    out.basis.push_back(std::move(v));
    out.labels.emplace_back(p, q);
  }
  out.m_rho = static_cast<int>(out.basis.size());

  if (out.basis.size() != fixed.size()) {
    std::ostringstream os;
    os << "K-fixed dimension " << fixed.size() << " disagrees with v_pq count " << out.basis.size() << " at (l,n)=("
       << ell << "," << n << ")";
    throw InternalError(os.str());
  }
  if (!out.basis.empty()) {
    ScalarMatrix m(0, space.dimension());
    for (const auto& v : out.basis) m.append_row(v.dense());
    if (rank(m) != out.basis.size()) throw InternalError("v_pq family is linearly dependent");
  }
  return out;
}

RepOperator build_D(const TangentFrame& frame, int ell, int n) {
  if (!frame.gram_is_diagonal()) throw DomainError("unsupported frame: Gram matrix is not diagonal");
  const RepSpace space = cell_space(ell, n);
  std::optional<RepOperator> d;
  for (std::size_t k = 0; k < frame.frame.size(); ++k) {
    if (frame.frame[k].factors() != 2) throw DomainError("frame must live in su(2) + su(2)");
    const RepOperator y = lie_operator(frame.frame[k], space);
    RepOperator term = frame.gram(k, k).inverse() * (y * y);
    d = d ? *d + term : term;
  }
  if (!d) throw DomainError("empty frame");
  return *d;
}

long eigenvalue_closed_form(int ell, int n, int q) {
  if (ell < 0 || n < 0) throw DomainError("l and n must be nonnegative");
  const auto qs = admissible_q(ell, n);
  if (std::find(qs.begin(), qs.end(), q) == qs.end()) {
    throw DomainError("q violates 0 <= q <= 2n, 2n - l <= 2q <= 2n + l at " + label(ell, n, q));
  }
  const long l = ell;
  const long nn = n;
  const long shift = 2L * q - 2L * n;
  return 2 * (2 * nn * nn + 2 * nn + l * l + l - shift * shift);
}

long cell_lower_bound(int ell, int n) {
  const long nn = n;
  return 2 * (2 * nn * nn + 2 * nn + ell);
}

StabilityVerdict stability_verdict(const Rational& lambda1, int ambient_complex_dim, const Rational& curvature) {
  StabilityVerdict out;
  out.threshold = Rational(ambient_complex_dim + 1) * curvature / 2;
  out.einstein_constant = out.threshold;
  out.verdict = lambda1 >= out.threshold ? Verdict::kHamiltonianStable : Verdict::kUnstable;
  out.at_bound = lambda1 == out.threshold;
  out.exceeds_upper_bound = lambda1 > out.threshold;
  return out;
}

StabilityReport lambda1_search(const TangentFrame& frame, const SearchConfig& config) {
  if (!(frame.point.space() == named::example_space()) || !proportionality(frame.point, named::paper_point())) {
    throw DomainError("lambda1_search supports the SU(2) x SU(2) example orbit only");
  }
  if (config.lmax < 0 || config.nmax < 0) throw DomainError("search bounds must be nonnegative");

  StabilityReport report;
  report.ambient_complex_dim = static_cast<int>(frame.point.space().dimension()) - 1;
  report.curvature = frame.curvature;
  // Closed-form values belong to the c = 4 metric; D scales as c/4.
  const Rational scale = frame.curvature / 4;
  std::optional<long> best;

  auto evaluate = [&](int ell, int n) {
    report.cells.emplace_back(ell, n);
    const SphericalSubspace sph = spherical_subspace(ell, n);
    if (sph.m_rho == 0) return;
    const RepOperator d = build_D(frame, ell, n);
    for (std::size_t k = 0; k < sph.basis.size(); ++k) {
      const auto [p, q] = sph.labels[k];
      const long closed = eigenvalue_closed_form(ell, n, q);
      const Rational lambda = Rational(closed) * scale;
      if (!(d.apply(sph.basis[k]) == Scalar(Rational(-lambda)) * sph.basis[k])) {
        throw InternalError("operator D disagrees with the closed-form eigenvalue at " + label(ell, n, q));
      }
      report.records.push_back({ell, n, q, p, lambda});
      if (!best || closed < *best) best = closed;
      if (n >= 1 && closed < 2 * (2L * n * n + 2L * n + 1L * ell * ell)) {
        std::ostringstream os;
        os << "the bound 2(2n^2+2n+l^2) fails at " << label(ell, n, q) << ": lambda = " << closed;
        report.notes.push_back(os.str());
      }
    }
  };

  if (config.prune) {
    report.notes.push_back("cells visited in order of the lower bound 2(2n^2+2n+l), pruned above the best eigenvalue");
    for (long b = 2; b <= config.bound_cap && (!best || b <= *best); b += 2) {
      for (int n = 0; 2L * (2L * n * n + 2L * n) <= b; ++n) {
        const long ell = b / 2 - 2L * n * n - 2L * n;
        if (ell < 0 || (ell == 0 && n == 0)) continue;
        evaluate(static_cast<int>(ell), n);
      }
    }
  } else {
    report.notes.push_back("exhaustive search over l <= " + std::to_string(config.lmax) +
                           ", n <= " + std::to_string(config.nmax));
    for (int ell = 0; ell <= config.lmax; ++ell) {
      for (int n = 0; n <= config.nmax; ++n) {
        if (ell != 0 || n != 0) evaluate(ell, n);
      }
    }
  }
  if (!best) throw DomainError("no spherical representation found within the search bounds");

  report.lambda1 = Rational(*best) * scale;
  for (const auto& r : report.records) {
    if (r.lambda == report.lambda1) report.witnesses.push_back(r);
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(), [](const EigenRecord& a, const EigenRecord& b) {
    return std::tie(a.ell, a.n, a.q) < std::tie(b.ell, b.n, b.q);
  });
  for (const auto& w : report.witnesses) report.multiplicity += (2L * w.ell + 1) * (2L * w.n + 1);

  const StabilityVerdict v = stability_verdict(report.lambda1, report.ambient_complex_dim, frame.curvature);
  if (v.exceeds_upper_bound) {
    throw InternalError("lambda1 = " + report.lambda1.get_str() + " exceeds the upper bound " + v.threshold.get_str() +
                        " for minimal Lagrangians");
  }
  report.threshold = v.threshold;
  report.einstein_constant = v.einstein_constant;
  report.verdict = v.verdict;
  report.at_bound = v.at_bound;
  return report;
}

}  // namespace orbitlab
