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

#include "conformal.hpp"

namespace lcac {

using ModElement = std::vector<Polynomial>;  // coefficients over the module basis

/// Free conformal module presented by its generator actions:
/// e_i x v_j = sum_k action[i][j][k](d, x) v_k.
/// Candidate-module constructors deliberately do not self-verify; run
/// check_module_axioms.
struct FreeModulePresentation {
    AlgebraPresentation algebra;
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Polynomial>>> action;

    size_t dim() const { return basis.size(); }
    void validate() const;
};

/// Finite-dimensional C[d]-torsion module: d acts by the matrix del_action,
/// generator i acts by the lambda-matrix action[i] (entries polynomials in x).
struct TorsionModule {
    AlgebraPresentation algebra;
    size_t dim = 0;
    RatMat del_action;
    std::vector<std::vector<std::vector<Polynomial>>> action;

    void validate() const;
};

/// C[d]-linear map between free modules over the same algebra:
/// v_j |-> sum_k matrix[j][k](d) w_k.
struct ModuleMorphism {
    FreeModulePresentation source;
    FreeModulePresentation target;
    std::vector<std::vector<Polynomial>> matrix;
};

/// x_s m extended by sesquilinearity, identical in shape to the bracket
/// engine.
ModElement action(const FreeModulePresentation& m, const Element& x, const ModElement& elem, Variable spectral);

/// Residuals of a_x (b_y m) - [a_x b]_{x+y} m - b_y (a_x m) over all
/// (generator, generator, basis) triples.
std::vector<TripleResidual> check_module_axioms(const FreeModulePresentation& m);

/// Torsion residuals: d-compatibility phi_a(x) D - D phi_a(x) - x phi_a(x)
/// per generator, then the bracket axiom per generator pair. Residual
/// matrices are flattened entry-wise.
std::vector<PairResidual> check_module_axioms(const TorsionModule& m);

/// M_{a,b} over Vir: L x v = (d + a x + b) v. a, b may be symbolic.
FreeModulePresentation make_mab(const AlgebraPresentation& vir, const Polynomial& a, const Polynomial& b);

/// One-dimensional C_u: d acts as the scalar u, the lambda-action is zero.
TorsionModule make_trivial(const AlgebraPresentation& alg, const Rational& u);

/// The algebra acting on itself by its own brackets.
FreeModulePresentation make_regular(const AlgebraPresentation& alg);

/// Rank one with e_i x v = phi[i](d, x) v.
FreeModulePresentation make_rank_one(const AlgebraPresentation& alg, const std::vector<Polynomial>& phi);

/// Residuals of action(e_i, phi(v_j)) - phi(action(e_i, v_j)) over all
/// generator/basis pairs; zero iff phi is a conformal-module morphism.
std::vector<PairResidual> check_morphism(const ModuleMorphism& phi);

}  // namespace lcac
