#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitlab/orbit.hpp"
#include "orbitlab/tensor_rep.hpp"

namespace orbitlab {

// K-fixed vectors of V_{l,n} = S^{2l}(C^2) (x) S^{2n}(C^2) for the isotropy
// K of the example point (identity component exp(R H), components via sigma).
struct SphericalSubspace {
  int ell = 0;
  int n = 0;
  std::vector<RepVector> basis;
  /// (p, q) label of each basis vector v_pq.
  std::vector<std::pair<int, int>> labels;
  int d_rho = 0;
  int m_rho = 0;
};

struct EigenRecord {
  int ell = 0;
  int n = 0;
  int q = 0;
  int p = 0;
  Rational lambda;

  bool operator==(const EigenRecord&) const = default;
};

enum class Verdict { kHamiltonianStable, kUnstable };

std::string to_string(Verdict v);

struct StabilityVerdict {
  Rational threshold;
  Rational einstein_constant;
  Verdict verdict = Verdict::kUnstable;
  /// lambda1 equals the threshold.
  bool at_bound = false;
  /// lambda1 exceeds the threshold, impossible for a minimal Lagrangian.
  bool exceeds_upper_bound = false;
};

struct StabilityReport {
  Rational lambda1;
  std::vector<EigenRecord> witnesses;
  Rational threshold;
  Rational einstein_constant;
  Verdict verdict = Verdict::kUnstable;
  bool at_bound = false;
  int ambient_complex_dim = 0;
  Rational curvature;
  /// Sum of d_rho over the witnesses: multiplicity of lambda1 on L^2(G/K).
  long multiplicity = 0;
  /// (l, n) cells whose spherical subspace was computed.
  std::vector<std::pair<int, int>> cells;
  std::vector<EigenRecord> records;
  std::vector<std::string> notes;
};

struct SearchConfig {
  bool prune = true;
  /// Box for exhaustive mode.
  int lmax = 6;
  int nmax = 6;
  /// Pruned mode gives up past this lower bound.
  long bound_cap = 100000;
};

/// The admissible q for (l, n): 0 <= q <= 2n and 2n - l <= 2q <= 2n + l.
std::vector<int> admissible_q(int ell, int n);
/// p of v_pq on the H-weight-zero locus: p = l + 2(q - n).
int weight_zero_p(int ell, int n, int q);
/// v_pq = e1^p e2^{2l-p} (x) e1^q e2^{2n-q} + (-1)^{n+p} e1^{2l-p} e2^p (x) e1^{2n-q} e2^q.
RepVector v_pq(int ell, int n, int p, int q);

/// Common fixed vectors of the given Lie algebra and group elements, by exact elimination.
std::vector<RepVector> fixed_subspace(const RepSpace& space, const std::vector<LieAlgebraElement>& algebra,
                                      const std::vector<GroupElement>& components);

SphericalSubspace spherical_subspace(int ell, int n);

/// D = sum_i (1/g_ii) d rho(Y_i)^2 on V_{l,n}. Rejects non-diagonal Gram matrices.
RepOperator build_D(const TangentFrame& frame, int ell, int n);

/// lambda_pq = 2(2n^2 + 2n + l^2 + l - (2q - 2n)^2). Throws DomainError off the admissible set.
long eigenvalue_closed_form(int ell, int n, int q);

/// Lower bound 2(2n^2 + 2n + l) for every eigenvalue carried by V_{l,n}.
long cell_lower_bound(int ell, int n);

StabilityVerdict stability_verdict(const Rational& lambda1, int ambient_complex_dim, const Rational& curvature);

/// First nonzero Laplace eigenvalue of G/K with witnesses, each cross-checked
/// against the exact operator D.
StabilityReport lambda1_search(const TangentFrame& frame, const SearchConfig& config = {});

}  // namespace orbitlab
