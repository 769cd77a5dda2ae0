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

#include <cstdint>

#include "poly.hpp"

namespace lcac {

/// splitmix64; self-contained so sampled values are identical on every
/// platform and standard library.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    int64_t range(int64_t lo, int64_t hi) { return lo + int64_t(next() % uint64_t(hi - lo + 1)); }

    Rational rational(int64_t max_num = 9, int64_t max_den = 4) {
        Rational r(range(-max_num, max_num), range(1, max_den));
        return r;
    }

    Rational nonzero_rational(int64_t max_num = 9, int64_t max_den = 4) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    /// Random polynomial in one reserved variable with small rational
    /// coefficients; guaranteed nonzero when `nonzero`.
    Polynomial poly_in(Variable v, unsigned max_deg, const RegistryPtr& reg, bool nonzero = true) {
        while (true) {
            Polynomial p(Rational(0), reg);
            for (unsigned i = 0; i <= max_deg; ++i) {
                Rational c = rational(5, 3);
                if (c != 0) p += Polynomial::variable(v, reg).pow(i) * c;
            }
            if (!nonzero || !p.is_zero()) return p;
        }
    }
};

}  // namespace lcac
