/*
   Copyright 2026 The lcac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace lcac {

/// Coefficient vector over the generators. Elements are C[d]-combinations
/// (entries in d and parameters only); bracket values may additionally carry
/// the spectral variables x, y, z.
using Element = std::vector<Polynomial>;
using LambdaExpression = std::vector<Polynomial>;

/// A finite Lie conformal algebra presented by generators and structure
/// polynomials: the bracket of generators i and j is
/// sum_k structure[i][j][k](d, x) * e_k, with x the spectral variable.
struct AlgebraPresentation {
    RegistryPtr reg;
    std::vector<std::string> gens;
    std::vector<std::vector<std::vector<Polynomial>>> structure;

    size_t rank() const { return gens.size(); }
    const std::vector<Polynomial>& entry(size_t i, size_t j) const { return structure[i][j]; }

    /// Shape and variable-usage validation; throws invalid_argument.
    void validate() const;
};

Element zero_element(const AlgebraPresentation& p);
Element gen_element(const AlgebraPresentation& p, size_t i);

LambdaExpression expr_add(const LambdaExpression& a, const LambdaExpression& b);
LambdaExpression expr_sub(const LambdaExpression& a, const LambdaExpression& b);
LambdaExpression expr_scale(const LambdaExpression& a, const Polynomial& c);
bool expr_zero(const LambdaExpression& a);

struct PairResidual {
    size_t i, j;
    LambdaExpression res;
};

struct TripleResidual {
    size_t i, j, k;
    LambdaExpression res;
};

template <class R>
bool residuals_zero(const std::vector<R>& rs) {
    for (const auto& r : rs)
        if (!expr_zero(r.res)) return false;
    return true;
}

/// Generator bracket [e_i spectral e_j] as a coefficient vector in
/// (d, spectral, parameters).
LambdaExpression bracket_gens(const AlgebraPresentation& p, size_t i, size_t j, Variable spectral);

/// Full bracket extended by conformal sesquilinearity:
/// [f(d)a_s g(d)b] = f(-s) g(d+s) [a_s b].
LambdaExpression bracket(const AlgebraPresentation& p, const Element& x, const Element& y, Variable spectral);

/// Residual [e_i x e_j] + [e_j y e_i]|_{y -> -x-d} per generator pair;
/// all zero iff skew-symmetry holds.
std::vector<PairResidual> check_skew(const AlgebraPresentation& p);

/// Jacobi residual [e_i x [e_j y e_k]] - [[e_i x e_j]_{x+y} e_k]
/// - [e_j y [e_i x e_k]] per generator triple.
std::vector<TripleResidual> check_jacobi(const AlgebraPresentation& p);

/// j! times the x^j coefficient of the bracket.
Element jth_product(const AlgebraPresentation& p, const Element& x, const Element& y, unsigned j);

// Constructors. All of them except make_solvable verify their output against
// check_skew and check_jacobi and refuse to return an invalid presentation.

AlgebraPresentation make_vir(RegistryPtr reg);

/// Current algebra over a finite-dimensional Lie algebra given by structure
/// constants sc[i][j][k] ([g_i, g_j] = sum_k sc[i][j][k] g_k).
AlgebraPresentation make_current(RegistryPtr reg, const std::vector<std::string>& names,
                                 const std::vector<std::vector<std::vector<Rational>>>& sc);

/// Virasoro acting on a current algebra: [L x a] = (d + x) a.
AlgebraPresentation make_semidirect(RegistryPtr reg, const std::vector<std::string>& names,
                                    const std::vector<std::vector<std::vector<Rational>>>& sc);

/// W(a,b): [L x L] = (d + 2x) L, [L x Y] = (d + a x + b) Y, [Y x Y] = 0.
/// a and b may be parameter polynomials.
AlgebraPresentation make_w(RegistryPtr reg, const Polynomial& a, const Polynomial& b);

/// Solvable normal form: [B x B] = 0, [A x B] = P1 B, [A x A] = Q1 B.
/// Deliberately unchecked; run the checkers explicitly.
AlgebraPresentation make_solvable(RegistryPtr reg, const Polynomial& p1, const Polynomial& q1);

/// Non-solvable non-semisimple normal form:
/// [A x A] = (d + 2x) A + Q B, [A x B] = delta (d + a x + b) B, [B x B] = 0.
AlgebraPresentation make_rank2(RegistryPtr reg, int delta, const Polynomial& a, const Polynomial& b,
                               const Polynomial& q);

/// The exceptional-cocycle table, keyed by a in {1, 0, -1, -4, -6}
/// (delta = 1, b = 0). beta/gamma may be symbolic; rows without a gamma slot
/// require gamma = 0.
Polynomial rank2_table_q(RegistryPtr reg, int a_key, const Polynomial& beta, const Polynomial& gamma);
AlgebraPresentation make_rank2_row(RegistryPtr reg, int a_key, const Polynomial& beta, const Polynomial& gamma);

/// All central elements sum f_i(d) e_i with deg f_i <= degree_bound, as an
/// affine space over the coefficient slots. Requires a parameter-free
/// presentation.
SolutionSpace center_candidates(const AlgebraPresentation& p, unsigned degree_bound);

Element element_from_vector(const AlgebraPresentation& p, const RatVec& coeffs, unsigned degree_bound);

/// Determinant of a matrix of polynomials (Laplace expansion; the matrices
/// here are tiny).
Polynomial poly_mat_det(const std::vector<std::vector<Polynomial>>& m);

/// Rebases the presentation along e~_i = sum_j M[i][j](d) e_j. M must be
/// unimodular over Q[d] (constant nonzero determinant); throws
/// non_unimodular otherwise.
AlgebraPresentation change_of_basis(const AlgebraPresentation& p,
                                    const std::vector<std::vector<Polynomial>>& m);

}  // namespace lcac
