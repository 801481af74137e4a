#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/linalg.hpp"
#include "orbitlab/tensor_rep.hpp"

namespace orbitlab {

struct OrbitReport {
  int orbit_real_dim = 0;
  int ambient_complex_dim = 0;
  bool moment_map_zero = false;
  bool isotropic = false;
  bool lagrangian = false;
  std::vector<LieAlgebraElement> isotropy_basis;
};

// Tangent frame of an orbit G/K at a point: a basis of the Killing-form
// complement of the isotropy algebra together with its induced metric.
struct TangentFrame {
  RepVector point;
  std::vector<std::string> names;
  std::vector<LieAlgebraElement> frame;
  ScalarMatrix gram;
  Rational curvature = 4;

  bool gram_is_diagonal() const;
  bool gram_is_identity() const;
};

/// mu([v])(X) = -(i/2) <X v, v> / <v, v>. Always real.
Scalar moment_map(const RepVector& v, const LieAlgebraElement& x);

/// Real basis of {X : X v in i R v}, i.e. the Lie algebra of the stabilizer of [v].
std::vector<LieAlgebraElement> isotropy_algebra(const RepVector& v);

OrbitReport classify_orbit(const RepVector& v);

/// Hermitian pairing <u_X, u_Y> of horizontal lifts at the unit vector along v.
/// Real part is the induced metric, minus the imaginary part is omega. The
/// metric is scaled by 4/c for holomorphic sectional curvature c.
Scalar fs_inner(const RepVector& v, const LieAlgebraElement& x, const LieAlgebraElement& y,
                const Rational& curvature = 4);
/// |X^|^2 at [v]; a real Scalar (rational for rational-coefficient inputs).
Scalar fs_norm_squared(const RepVector& v, const LieAlgebraElement& x, const Rational& curvature = 4);

/// Requires a Lagrangian orbit. At the built-in example point this is the
/// named frame V1, F1, G1, F2, G2; elsewhere an orthogonalized complement.
TangentFrame tangent_frame(const RepVector& v, const Rational& curvature = 4);

/// c with u = c v, if u is a multiple of v (v nonzero).
std::optional<Scalar> proportionality(const RepVector& u, const RepVector& v);
/// Whether g fixes the projective point [v].
bool fixes_point(const GroupElement& g, const RepVector& v);

}  // namespace orbitlab

namespace orbitlab {

/// Whether g lies on the one-parameter subgroup exp(R h) for a diagonal h
/// whose weights include +-1 (so that the parameter is pinned by one block).
bool on_one_parameter_subgroup(const GroupElement& g, const LieAlgebraElement& h);

/// Smallest k in [1, max_order] with g^k on exp(R h), checking along the way
/// that every power fixes [v]. Empty if g leaves [v] or no such k exists.
std::optional<int> component_order(const GroupElement& g, const RepVector& v, const LieAlgebraElement& h,
                                   int max_order = 24);

}  // namespace orbitlab
