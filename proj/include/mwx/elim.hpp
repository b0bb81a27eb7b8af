// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_ELIM_HPP
#define MWX_ELIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwx/chars.hpp"
#include "mwx/factor.hpp"
#include "mwx/modp.hpp"
#include "mwx/mpoly.hpp"
#include "mwx/unipoly.hpp"
#include "mwx/weyl.hpp"

namespace mwx {

// Which specialization polynomial to construct.
enum class ElimVariant { phi, psi };

// Provenance of one elimination run: raw resultant degree, stripped
// factors with multiplicities, extra vanishing detected at +-1 (roots of
// the output itself, legitimate for degenerate lambda), and the constant
// used for the final monic normalization.
struct ElimInfo {
    Case cs;
    ElimVariant variant;
    int z_degree = 0;
    std::vector<std::pair<std::string, int>> stripped;
    std::string normalizer;
    int grid_points = 0;
};

// Exact construction over Q. Throws degenerate_error when a stage degree
// or stripping multiplicity deviates from the pinned generic recipe.
QPoly build_phi(const WeierstrassData& w, ElimInfo* info = nullptr);
QPoly build_psi(const WeierstrassData& w, ElimInfo* info = nullptr); // E7 only

// The same pipeline run entirely mod p (good reduction required; throws
// bad_prime_error when the modulus disturbs a stage). Uses a quadratic
// extension for the evaluation grid when p is smaller than the sample
// budget.
ZpVec build_phi_mod(const WeierstrassData& w, u64 p, ElimInfo* info = nullptr);
ZpVec build_psi_mod(const WeierstrassData& w, u64 p, ElimInfo* info = nullptr);

// Diagnostic introspection: measures the raw resultant degree and the
// maximal exact multiplicities of the standard extraneous factors at a
// given lambda, without consulting the pinned recipe. Used to pin the
// recipes and to investigate degenerate inputs.
struct ElimProbe {
    int t1_deg_x = 0, t2_deg_x = 0;
    int z_degree = 0;
    int val0 = 0;
    int m_minus1 = 0, m_plus1 = 0, m_cyclo3 = 0;
    int g_degree = 0, m_g = 0;
    int residual_degree = 0;
};
ElimProbe elim_probe(Case cs, ElimVariant var, const WeierstrassData& w);

// Per-variable degree bounds for the X^(deg-i) coefficient of Phi as a
// polynomial in lambda, from the structural degree tracker (a paired
// value/degree run of the pipeline at a fixed reference point).
std::vector<std::vector<int>> phi_coeff_degree_bounds(Case cs, int i_max);

// Interpolation-based reconstruction of the top i_max coefficients of Phi
// as polynomials in lambda (grid validated, deterministic resample on
// degenerate grid points, hold-out checked).
std::vector<MPolyQ> symbolic_coefficients(Case cs, int i_max);

// Predicted root values of Phi at a torus point: the evaluations of the
// minuscule-coset monomials (E6: -1/value convention), or of the full
// root system (E8, and E7-psi).
std::vector<Rat> predicted_phi_roots(Case cs, const TorusPoint<Rat>& xi);
std::vector<Rat> predicted_psi_roots(const TorusPoint<Rat>& xi); // E7

// prod (X - r) over a list of scalars.
QPoly poly_from_roots(const std::vector<Rat>& roots);
ZpVec poly_from_roots_mod(const Zp& F, const std::vector<Rat>& roots);

} // namespace mwx

#endif
