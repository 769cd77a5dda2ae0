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

#include "doctest.h"
#include "linalg.hpp"
#include "rng.hpp"

using namespace lcac;

TEST_CASE("solve_linear: unique, inconsistent, underdetermined") {
    {
        LinearSystem s;
        s.labels = {"x", "y"};
        s.add_row({1, 1}, 1);
        s.add_row({1, -1}, 1);
        SolutionSpace sol = solve_linear(s);
        REQUIRE(!sol.empty());
        CHECK(*sol.particular == RatVec{1, 0});
        CHECK(sol.nullspace.empty());
    }
    {
        LinearSystem s;
        s.labels = {"x"};
        s.add_row({0}, 1);  // 0 = 1
        CHECK(solve_linear(s).empty());
    }
    {
        LinearSystem s;
        s.labels = {"x", "y"};
        s.add_row({1, 1}, 0);
        SolutionSpace sol = solve_linear(s);
        REQUIRE(!sol.empty());
        CHECK(*sol.particular == RatVec{0, 0});
        REQUIRE(sol.nullspace.size() == 1);
        CHECK(sol.nullspace[0] == RatVec{-1, 1});
    }
}

TEST_CASE("solve_linear: exact rationals, no drift") {
    LinearSystem s;
    s.labels = {"x", "y", "z"};
    s.add_row({Rational(1, 3), Rational(1, 7), Rational(2)}, Rational(1));
    s.add_row({Rational(5), Rational(-1, 2), Rational(1, 11)}, Rational(0));
    s.add_row({Rational(0), Rational(13), Rational(-3)}, Rational(1, 2));
    SolutionSpace sol = solve_linear(s);
    REQUIRE(!sol.empty());
    const RatVec& v = *sol.particular;
    CHECK(Rational(1, 3) * v[0] + Rational(1, 7) * v[1] + 2 * v[2] == 1);
    CHECK(5 * v[0] - Rational(1, 2) * v[1] + Rational(1, 11) * v[2] == 0);
    CHECK(13 * v[1] - 3 * v[2] == Rational(1, 2));
    CHECK(sol.nullspace.empty());
}

TEST_CASE("solve_linear agrees with bareiss_rank on random systems") {
    Rng rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        size_t rows = size_t(rng.range(1, 6)), cols = size_t(rng.range(1, 5));
        LinearSystem s;
        for (size_t c = 0; c < cols; ++c) s.labels.push_back("u" + std::to_string(c));
        RatMat aug;
        for (size_t r = 0; r < rows; ++r) {
            RatVec row;
            for (size_t c = 0; c < cols; ++c) row.push_back(rng.rational(4, 2));
            Rational b = rng.rational(4, 2);
            RatVec a = row;
            a.push_back(b);
            aug.push_back(a);
            s.add_row(row, b);
        }
        SolutionSpace sol = solve_linear(s);
        RatMat plain;
        for (const auto& r : aug) plain.push_back(RatVec(r.begin(), r.end() - 1));
        size_t ra = bareiss_rank(plain), raug = bareiss_rank(aug);
        CHECK(sol.empty() == (raug > ra));
        if (!sol.empty()) CHECK(sol.nullspace.size() == cols - ra);
    }
}
