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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lcac {

// Exact scalars. cpp_rational keeps gcd(|num|, den) = 1 and den > 0 by
// construction, which is exactly the canonical form the rest of the code
// relies on for bit-for-bit equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "n" for integers and "n/m" otherwise (m > 1).
inline std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= Int(n - i);
        acc /= Int(i + 1);
    }
    return acc;
}

/// n(n-1)...(n-k+1); zero as soon as k > n.
inline Int falling_factorial(unsigned n, unsigned k) {
    Int acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= Int(int64_t(n) - int64_t(i));
    return acc;
}

inline Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace lcac
