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

#include "classify.hpp"

namespace lcac {

/// Cocycle data for an abelian extension 0 -> M -> E -> H -> 0 on a rank-two
/// H with module line v: q1 deforms [A x A], q2 the mixed bracket, q3 the
/// B-diagonal.
struct CocycleData {
    Polynomial q1, q2, q3;
};

/// The two extension settings the reductions handle: H = Vir + (co)central B
/// acting on M_{a,b} through A (q2 sits in [A x B]); or H = Vir + abelian B
/// acting through B only (q2 sits in [B x A]).
enum class ExtSetting { vir_acts, abelian_acts };

ExtSetting detect_setting(const AlgebraPresentation& h, const FreeModulePresentation& m);

/// Rank-three presentation on (A, B, v) carrying H, the module action and
/// the cocycle. Not self-verified: its axiom residuals ARE the cocycle
/// equations.
AlgebraPresentation build_extension(const AlgebraPresentation& h, const FreeModulePresentation& m,
                                    const CocycleData& c);

struct CocycleResiduals {
    std::vector<PairResidual> skew;
    std::vector<TripleResidual> jacobi;
    bool zero() const { return residuals_zero(skew) && residuals_zero(jacobi); }
};

/// check_skew + check_jacobi of the extension presentation.
CocycleResiduals check_cocycle(const AlgebraPresentation& h, const FreeModulePresentation& m,
                               const CocycleData& c);

/// Which generator absorbs g(d) * v, and with which sign (+1: e~ = e + g v).
struct ShiftSpec {
    size_t target = 0;
    int direction = -1;
};

struct ReduceOutcome {
    unsigned degree_bound = 0;
    std::optional<Polynomial> g;
    std::optional<AlgebraPresentation> reduced;

    bool no_reduction() const { return !g.has_value(); }
};

/// Searches for g with deg g <= degree_bound such that the basis change
/// target -> target + direction * g(d) * v (v = last generator) zeroes every
/// v-component of brackets involving the target. NoReduction (empty g)
/// certifies a cohomologically nontrivial extension up to that degree.
ReduceOutcome reduce_extension(const AlgebraPresentation& e, const ShiftSpec& shift, unsigned degree_bound);

}  // namespace lcac
