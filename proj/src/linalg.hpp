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

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace lcac {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// A x = b over the rationals; `labels` names the unknown slots (polynomial
/// coefficient positions) for reporting.
struct LinearSystem {
    RatMat a;
    RatVec b;
    std::vector<std::string> labels;

    size_t unknowns() const { return labels.size(); }
    void add_row(RatVec row, Rational rhs) {
        a.push_back(std::move(row));
        b.push_back(std::move(rhs));
    }
};

/// Affine solution set: a particular solution (absent iff the system is
/// inconsistent) plus a null-space basis in reduced row-echelon normal form.
struct SolutionSpace {
    std::optional<RatVec> particular;
    std::vector<RatVec> nullspace;
    std::vector<std::string> labels;

    bool empty() const { return !particular.has_value(); }
    size_t dimension() const { return empty() ? 0 : nullspace.size(); }
};

/// Exact Gauss-Jordan elimination. Deterministic: pivots are chosen as the
/// first nonzero entry in column order. Every reported vector is re-checked
/// against the system before returning.
SolutionSpace solve_linear(const LinearSystem& sys);

/// Fraction-free Bareiss elimination rank. Kept as an independent route for
/// cross-checking solve_linear's consistency verdicts.
size_t bareiss_rank(RatMat m);

}  // namespace lcac
