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

#include "poly.hpp"

#include <sstream>

namespace lcac {

namespace {
const char* kReservedNames[] = {"d", "x", "y", "z"};
}

std::string monomial_str(const Monomial& m, const Registry& reg) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.entries()) {
        if (!first) os << "*";
        first = false;
        os << (Registry::reserved(v) ? kReservedNames[v.id] : reg.name(v));
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << rat_str(mag);
        } else {
            std::string vars = reg_ ? monomial_str(m, *reg_) : std::string("?");
            if (mag == 1)
                os << vars;
            else
                os << rat_str(mag) << "*" << vars;
        }
    }
    return os.str();
}

}  // namespace lcac
