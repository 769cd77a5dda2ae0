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

#include "modules.hpp"

namespace lcac {

/// Flattens the polynomial identity p == 0 into linear equations over the
/// listed unknown variables, one equation per residual monomial. p must be
/// affine in the unknowns.
void append_poly_equations(LinearSystem& sys, const Polynomial& p, const std::vector<Variable>& unknowns);

/// All f of degree <= d with f(x+y)((a-1)x - y + b) = -y f(y), as a solution
/// space over the coefficient slots f_0..f_d. The equation is the bracket
/// compatibility of a rank-one action B x v = f(x) v against
/// [A x B] = (d + a x + b) B.
SolutionSpace solve_f(const Rational& a, const Rational& b, unsigned d);

/// All p of degree <= d with
/// (x-y) p(x+y) + Q(-x-y, x) f(x+y) = x p(x) - y p(y),
/// the compatibility of A x v = (d + p(x)) v against
/// [A x A] = (d + 2x) A + Q B with B x v = f(x) v. Q must be parameter-free,
/// f a polynomial in x.
SolutionSpace solve_p(const Rational& a, const Rational& b, const Polynomial& q, const Polynomial& f, unsigned d);

/// One classified family of rank-one actions: a module presentation whose
/// action polynomials carry fresh parameters (the family's free
/// coordinates), verified against the module axioms with those parameters
/// symbolic.
struct ActionFamily {
    std::string case_tag;  // "i", "ii", "iii", "iv"
    FreeModulePresentation module;
    std::vector<std::string> free_params;
    std::string note;
    bool verified = false;
};

/// Bounded-degree classification of rank-one actions of a rank-two normal
/// form. Dispatches on the shape of the presentation; throws
/// invalid_argument for anything that is not one of the normal forms or that
/// still carries symbolic parameters.
std::vector<ActionFamily> classify_rank_one(const AlgebraPresentation& p, unsigned degree_bound);

}  // namespace lcac
