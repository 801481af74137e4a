#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/tensor_rep.hpp"

// Built-in objects of the SU(2) x SU(2) example on S^2(C^2) (x) C^2.
namespace orbitlab::named {

/// V = S^2(C^2) (x) C^2, degrees (2, 1).
RepSpace example_space();
/// (e1^2 (x) e1 + e2^2 (x) e2) / sqrt2, the point with a Lagrangian orbit in CP^5.
RepVector paper_point();
/// (e1^2 + e2^2) / sqrt2 in S^2(C^2): a real-form point with a Lagrangian orbit in CP^2.
RepVector real_form_point();

/// X1, X2, Y1, Y2, H, V, V1, F1, F2, G1, G2 (two factors).
std::optional<LieAlgebraElement> lie_element(const std::string& name);
/// sigma, tau, and "identity".
std::optional<GroupElement> group_element(const std::string& name);

/// Isotropy generator H = (diag(i,-i), diag(-2i,2i)).
LieAlgebraElement H();
/// Order-4 component generator sigma.
GroupElement sigma();
/// tau = (id, -id).
GroupElement tau();

/// The -B-orthonormal Killing-field directions X1, Y1, X2, Y2 and the unit vector V.
std::vector<std::pair<std::string, LieAlgebraElement>> killing_basis();
/// V1, F1, G1, F2, G2: orthonormal for the induced metric at paper_point().
std::vector<std::pair<std::string, LieAlgebraElement>> paper_frame();

std::vector<std::string> lie_element_names();

}  // namespace orbitlab::named
