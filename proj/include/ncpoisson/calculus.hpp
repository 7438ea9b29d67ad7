#pragma once

#include <vector>

#include "ncpoisson/poly.hpp"

namespace ncp {

/// Array of partials, one NcPoly per generator.
using Gradient = std::vector<NcPoly>;

/// Cyclic partial derivative ∂f/∂x_i : F -> A. For each occurrence of x_i in
/// a cyclic word, contributes the rotation placing that occurrence last with
/// the x_i removed; an occurrence of x_i^-1 contributes
/// -x_i^-1 (rotation with the occurrence removed) x_i^-1.
NcPoly cyclic_diff(const TracePoly& f, int i);
NcPoly cyclic_diff(const CycWord& w, int i);

Gradient gradient(const TracePoly& f, int n);

/// Double derivative Df/Dx_i : A -> A⊗A^op, splitting each occurrence of x_i
/// into prefix ⊗ suffix (with the Laurent correction for x_i^-1).
Tensor double_diff(const NcPoly& f, int i);

/// Derivation of A determined by x_j -> images[j] (and a -> 0), extended by
/// the Leibniz rule; x_j^-1 maps to -x_j^-1 images[j] x_j^-1.
NcPoly apply_derivation(const std::vector<NcPoly>& images, const NcPoly& f);

/// Substitutes u_j -> x_chart^-1 x_j in a word/polynomial over chart
/// variables (generator indices != chart).
Word expand_u(const Word& w, int chart);
NcPoly expand_u(const NcPoly& f, int chart);
TracePoly expand_u(const TracePoly& f, int chart);

/// Partials in homogeneous coordinates of a trace polynomial given in chart
/// variables u_j = x_chart^-1 x_j: the chain rule
///   ∂f/∂x_j = (∂f/∂u_j) x_chart^-1            (j != chart)
///   ∂f/∂x_chart = -Σ_j x_chart^-1 x_j (∂f/∂u_j) x_chart^-1.
/// Returns n entries indexed by x-generator.
Gradient affine_partials(const TracePoly& f_u, int n, int chart);

}  // namespace ncp
