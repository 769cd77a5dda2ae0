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

#include "rng.hpp"

namespace lcac::test {

inline Polynomial random_poly(Rng& rng, const RegistryPtr& reg, const std::vector<Variable>& vars,
                              unsigned max_deg, unsigned terms) {
    Polynomial p(Rational(0), reg);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        for (Variable v : vars) m = m.times(Monomial::of(v, unsigned(rng.range(0, max_deg))));
        p += Polynomial::term(rng.rational(7, 3), m, reg);
    }
    return p;
}

inline std::map<Variable, Rational> random_point(Rng& rng, const std::vector<Variable>& vars) {
    std::map<Variable, Rational> pt;
    for (Variable v : vars) pt[v] = rng.rational(7, 3);
    return pt;
}

}  // namespace lcac::test
