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

/// Element of the extended annihilation Lie algebra: a finite combination of
/// indexed symbols g_(n) plus a multiple of the adjoined derivation d.
/// Coefficients are polynomials in parameters only (plain rationals once the
/// presentation is specialized).
struct IndexedElement {
    std::map<std::pair<size_t, unsigned>, Polynomial> terms;  // (generator, index) -> coefficient
    Polynomial del_coeff;

    bool is_zero() const;
    IndexedElement operator+(const IndexedElement& o) const;
    IndexedElement operator-(const IndexedElement& o) const;
    IndexedElement operator*(const Polynomial& c) const;
    friend bool operator==(const IndexedElement& a, const IndexedElement& b) {
        return a.terms == b.terms && a.del_coeff == b.del_coeff;
    }

    void add(size_t gen, unsigned index, const Polynomial& c);
};

IndexedElement indexed_gen(size_t gen, unsigned index, const RegistryPtr& reg);
IndexedElement indexed_del(const RegistryPtr& reg);

std::string indexed_str(const IndexedElement& e, const AlgebraPresentation& p);

/// Exact bracket in Lie(A)^e. Generator pairs expand through
/// [a_(m), b_(n)] = sum_i C(m,i) (a_(i) b)_(m+n-i), with C[d]-coefficients
/// inside the j-th products rewritten away via (d a)_(s) = -s a_(s-1);
/// [d, a_(n)] = -n a_(n-1).
IndexedElement ann_bracket(const AlgebraPresentation& p, const IndexedElement& x, const IndexedElement& y);

/// n! times the x^n coefficient of the action: the representation of g_(n).
ModElement rep_action(const FreeModulePresentation& m, size_t gen, unsigned n, const ModElement& elem);

/// N(g, v_j): indices above this act as zero on v_j.
unsigned rep_bound(const FreeModulePresentation& m, size_t gen, size_t basis);

/// The full bound table (generator, basis) -> N(g, v).
std::map<std::pair<size_t, size_t>, unsigned> rep_bounds(const FreeModulePresentation& m);

/// Applies an annihilation-algebra element through the representation.
ModElement apply_indexed(const FreeModulePresentation& m, const IndexedElement& e, const ModElement& elem);

struct RepResidual {
    std::string label;
    ModElement res;
};

/// Verifies [a_(m), b_(n)] v = a_(m)(b_(n) v) - b_(n)(a_(m) v) for all index
/// pairs up to max_index, plus the d-compatibility
/// g_(n)(d v) - d(g_(n) v) = -n g_(n-1) v.
std::vector<RepResidual> check_rep(const FreeModulePresentation& m, unsigned max_index);

bool rep_residuals_zero(const std::vector<RepResidual>& rs);

}  // namespace lcac
