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

#include "linalg.hpp"

#include "error.hpp"

namespace lcac {

namespace {

bool satisfies(const LinearSystem& sys, const RatVec& x, bool homogeneous) {
    for (size_t r = 0; r < sys.a.size(); ++r) {
        Rational acc = 0;
        for (size_t c = 0; c < x.size(); ++c) acc += sys.a[r][c] * x[c];
        if (acc != (homogeneous ? Rational(0) : sys.b[r])) return false;
    }
    return true;
}

}  // namespace

SolutionSpace solve_linear(const LinearSystem& sys) {
    const size_t n = sys.unknowns();
    RatMat m = sys.a;
    RatVec rhs = sys.b;
    for (const auto& row : m)
        if (row.size() != n) fail(errc::invalid_argument, "linear system row width mismatch");

    std::vector<size_t> pivot_col;  // per pivot row
    size_t row = 0;
    for (size_t col = 0; col < n && row < m.size(); ++col) {
        size_t pr = row;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[pr], m[row]);
        std::swap(rhs[pr], rhs[row]);
        Rational inv = 1 / m[row][col];
        for (size_t c = col; c < n; ++c) m[row][c] *= inv;
        rhs[row] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[row][c];
            rhs[r] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    SolutionSpace out;
    out.labels = sys.labels;

    for (size_t r = row; r < m.size(); ++r)
        if (rhs[r] != 0) return out;  // 0 = nonzero: inconsistent, particular stays empty

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    RatVec part(n, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) part[pivot_col[r]] = rhs[r];
    out.particular = part;

    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(n, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][fc];
        out.nullspace.push_back(std::move(v));
    }

    if (!satisfies(sys, *out.particular, false)) fail(errc::invalid_argument, "solver self-check failed");
    for (const auto& v : out.nullspace)
        if (!satisfies(sys, v, true)) fail(errc::invalid_argument, "solver self-check failed");
    return out;
}

size_t bareiss_rank(RatMat m) {
    if (m.empty()) return 0;
    // Clear denominators row by row so the elimination stays over integers.
    for (auto& row : m) {
        Int lcm = 1;
        for (const auto& v : row) lcm = boost::multiprecision::lcm(lcm, denominator(v));
        for (auto& v : row) v *= Rational(lcm);
    }
    const size_t rows = m.size(), cols = m[0].size();
    Rational prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && m[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace lcac
