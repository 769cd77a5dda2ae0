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

#include "conformal.hpp"

#include <map>
#include <set>

namespace lcac {

namespace {

std::vector<Variable> element_vars(const RegistryPtr& reg) {
    std::vector<Variable> vs{var_del()};
    if (reg)
        for (Variable v : reg->parameters()) vs.push_back(v);
    return vs;
}

std::vector<Variable> structure_vars(const RegistryPtr& reg) {
    auto vs = element_vars(reg);
    vs.push_back(var_lambda());
    return vs;
}

void check_spectral(Variable s) {
    if (s != var_lambda() && s != var_mu() && s != var_nu())
        fail(errc::invalid_argument, "spectral variable must be one of x, y, z");
}

}  // namespace

void AlgebraPresentation::validate() const {
    if (gens.empty()) fail(errc::invalid_argument, "presentation needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (!seen.insert(g).second) fail(errc::invalid_argument, "duplicate generator name: " + g);
        if (g == "d" || g == "x" || g == "y" || g == "z")
            fail(errc::invalid_argument, "generator name clashes with a reserved variable: " + g);
    }
    const size_t n = gens.size();
    if (structure.size() != n) fail(errc::invalid_argument, "structure table has wrong shape");
    auto allowed = structure_vars(reg);
    for (const auto& row : structure) {
        if (row.size() != n) fail(errc::invalid_argument, "structure table has wrong shape");
        for (const auto& cell : row) {
            if (cell.size() != n) fail(errc::invalid_argument, "structure table has wrong shape");
            for (const auto& p : cell)
                if (!p.uses_only(allowed))
                    fail(errc::invalid_argument, "structure polynomials may only use d, x and parameters");
        }
    }
}

Element zero_element(const AlgebraPresentation& p) { return Element(p.rank()); }

Element gen_element(const AlgebraPresentation& p, size_t i) {
    Element e(p.rank());
    e[i] = Polynomial::constant(1, p.reg);
    return e;
}

LambdaExpression expr_add(const LambdaExpression& a, const LambdaExpression& b) {
    LambdaExpression out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

LambdaExpression expr_sub(const LambdaExpression& a, const LambdaExpression& b) {
    LambdaExpression out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

LambdaExpression expr_scale(const LambdaExpression& a, const Polynomial& c) {
    LambdaExpression out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool expr_zero(const LambdaExpression& a) {
    for (const auto& p : a)
        if (!p.is_zero()) return false;
    return true;
}

LambdaExpression bracket_gens(const AlgebraPresentation& p, size_t i, size_t j, Variable spectral) {
    check_spectral(spectral);
    LambdaExpression out(p.rank());
    for (size_t k = 0; k < p.rank(); ++k) {
        const Polynomial& q = p.structure[i][j][k];
        out[k] = spectral == var_lambda() ? q : q.substitute(var_lambda(), Polynomial::variable(spectral, p.reg));
    }
    return out;
}

LambdaExpression bracket(const AlgebraPresentation& p, const Element& x, const Element& y, Variable spectral) {
    check_spectral(spectral);
    const size_t n = p.rank();
    if (x.size() != n || y.size() != n) fail(errc::invalid_argument, "element size does not match presentation");
    auto allowed = element_vars(p.reg);
    for (const auto& c : x)
        if (!c.uses_only(allowed)) fail(errc::invalid_argument, "element coefficients may only use d and parameters");
    for (const auto& c : y)
        if (!c.uses_only(allowed)) fail(errc::invalid_argument, "element coefficients may only use d and parameters");

    Polynomial s = Polynomial::variable(spectral, p.reg);
    Polynomial d_plus_s = Polynomial::variable(var_del(), p.reg) + s;
    LambdaExpression out(n);
    for (auto& c : out) c = Polynomial(Rational(0), p.reg);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        Polynomial fi = x[i].substitute(var_del(), -s);  // f(-s)
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Polynomial gj = y[j].substitute(var_del(), d_plus_s);  // g(d+s)
            Polynomial scale = fi * gj;
            const auto br = bracket_gens(p, i, j, spectral);
            for (size_t k = 0; k < n; ++k)
                if (!br[k].is_zero()) out[k] += scale * br[k];
        }
    }
    return out;
}

std::vector<PairResidual> check_skew(const AlgebraPresentation& p) {
    const size_t n = p.rank();
    Polynomial skew_sub = -Polynomial::variable(var_lambda(), p.reg) - Polynomial::variable(var_del(), p.reg);
    std::vector<PairResidual> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            LambdaExpression lhs = bracket_gens(p, i, j, var_lambda());
            LambdaExpression rev = bracket_gens(p, j, i, var_mu());
            LambdaExpression res(n);
            for (size_t k = 0; k < n; ++k) res[k] = lhs[k] + rev[k].substitute(var_mu(), skew_sub);
            out.push_back({i, j, std::move(res)});
        }
    }
    return out;
}

std::vector<TripleResidual> check_jacobi(const AlgebraPresentation& p) {
    const size_t n = p.rank();
    const Polynomial d = Polynomial::variable(var_del(), p.reg);
    const Polynomial lam = Polynomial::variable(var_lambda(), p.reg);
    const Polynomial mu = Polynomial::variable(var_mu(), p.reg);

    std::vector<TripleResidual> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                LambdaExpression res(n);
                for (auto& c : res) c = Polynomial(Rational(0), p.reg);

                // [e_i x [e_j y e_k]]: right sesquilinearity pushes the inner
                // coefficient through as h(d+x, y).
                LambdaExpression inner = bracket_gens(p, j, k, var_mu());
                for (size_t l = 0; l < n; ++l) {
                    if (inner[l].is_zero()) continue;
                    Polynomial h = inner[l].substitute(var_del(), d + lam);
                    const auto br = bracket_gens(p, i, l, var_lambda());
                    for (size_t m = 0; m < n; ++m)
                        if (!br[m].is_zero()) res[m] += h * br[m];
                }

                // [[e_i x e_j]_{x+y} e_k]: left sesquilinearity evaluates the
                // inner coefficient at d = -x-y, the outer bracket at x+y.
                LambdaExpression ab = bracket_gens(p, i, j, var_lambda());
                for (size_t l = 0; l < n; ++l) {
                    if (ab[l].is_zero()) continue;
                    Polynomial c = ab[l].substitute(var_del(), -lam - mu);
                    const auto br = bracket_gens(p, l, k, var_lambda());
                    for (size_t m = 0; m < n; ++m)
                        if (!br[m].is_zero()) res[m] -= c * br[m].substitute(var_lambda(), lam + mu);
                }

                // [e_j y [e_i x e_k]]
                LambdaExpression inner2 = bracket_gens(p, i, k, var_lambda());
                for (size_t l = 0; l < n; ++l) {
                    if (inner2[l].is_zero()) continue;
                    Polynomial u = inner2[l].substitute(var_del(), d + mu);
                    const auto br = bracket_gens(p, j, l, var_mu());
                    for (size_t m = 0; m < n; ++m)
                        if (!br[m].is_zero()) res[m] -= u * br[m];
                }

                out.push_back({i, j, k, std::move(res)});
            }
        }
    }
    return out;
}

Element jth_product(const AlgebraPresentation& p, const Element& x, const Element& y, unsigned j) {
    LambdaExpression br = bracket(p, x, y, var_lambda());
    Element out(p.rank());
    Rational jf(factorial(j));
    for (size_t k = 0; k < p.rank(); ++k) out[k] = br[k].coefficient_of(var_lambda(), j) * jf;
    return out;
}

namespace {

AlgebraPresentation finish_checked(AlgebraPresentation p, const char* what) {
    p.validate();
    if (!residuals_zero(check_skew(p)))
        fail(errc::invalid_argument, std::string(what) + ": structure violates skew-symmetry");
    if (!residuals_zero(check_jacobi(p)))
        fail(errc::invalid_argument, std::string(what) + ": structure violates the Jacobi identity");
    return p;
}

void check_structure_constants(const std::vector<std::vector<std::vector<Rational>>>& sc, size_t n) {
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (sc[i].size() != n || sc[i][j].size() != n)
                fail(errc::invalid_argument, "structure constant tensor has wrong shape");
            for (size_t k = 0; k < n; ++k)
                if (sc[i][j][k] != -sc[j][i][k])
                    fail(errc::invalid_argument, "structure constants are not antisymmetric");
        }
    // [[g_i, g_j], g_k] + [[g_j, g_k], g_i] + [[g_k, g_i], g_j] = 0
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    Rational acc = 0;
                    for (size_t m = 0; m < n; ++m)
                        acc += sc[i][j][m] * sc[m][k][l] + sc[j][k][m] * sc[m][i][l] + sc[k][i][m] * sc[m][j][l];
                    if (acc != 0) fail(errc::invalid_argument, "structure constants violate the Jacobi identity");
                }
}

}  // namespace

AlgebraPresentation make_vir(RegistryPtr reg) {
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = {"L"};
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    p.structure = {{{d + x * Rational(2)}}};
    return finish_checked(std::move(p), "make_vir");
}

AlgebraPresentation make_current(RegistryPtr reg, const std::vector<std::string>& names,
                                 const std::vector<std::vector<std::vector<Rational>>>& sc) {
    const size_t n = names.size();
    if (sc.size() != n) fail(errc::invalid_argument, "structure constant tensor has wrong shape");
    check_structure_constants(sc, n);
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = names;
    p.structure.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) p.structure[i][j][k] = Polynomial::constant(sc[i][j][k], reg);
    return finish_checked(std::move(p), "make_current");
}

AlgebraPresentation make_semidirect(RegistryPtr reg, const std::vector<std::string>& names,
                                    const std::vector<std::vector<std::vector<Rational>>>& sc) {
    const size_t n = names.size();
    if (sc.size() != n) fail(errc::invalid_argument, "structure constant tensor has wrong shape");
    check_structure_constants(sc, n);
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = {"L"};
    for (const auto& nm : names) p.gens.push_back(nm);
    const size_t r = n + 1;
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    p.structure.assign(r, std::vector<std::vector<Polynomial>>(r, std::vector<Polynomial>(r)));
    p.structure[0][0][0] = d + x * Rational(2);
    for (size_t i = 0; i < n; ++i) {
        p.structure[0][i + 1][i + 1] = d + x;  // [L x a] = (d+x) a
        p.structure[i + 1][0][i + 1] = x;      // [a x L] = x a   (skew image)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                p.structure[i + 1][j + 1][k + 1] = Polynomial::constant(sc[i][j][k], reg);
    }
    return finish_checked(std::move(p), "make_semidirect");
}

AlgebraPresentation make_w(RegistryPtr reg, const Polynomial& a, const Polynomial& b) {
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = {"L", "Y"};
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial one(Rational(1), reg);
    p.structure.assign(2, std::vector<std::vector<Polynomial>>(2, std::vector<Polynomial>(2)));
    p.structure[0][0][0] = d + x * Rational(2);
    p.structure[0][1][1] = d + a * x + b;
    p.structure[1][0][1] = (a - one) * d + a * x - b;
    return finish_checked(std::move(p), "make_w");
}

AlgebraPresentation make_solvable(RegistryPtr reg, const Polynomial& p1, const Polynomial& q1) {
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = {"A", "B"};
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    p.structure.assign(2, std::vector<std::vector<Polynomial>>(2, std::vector<Polynomial>(2)));
    p.structure[0][0][1] = q1;
    p.structure[0][1][1] = p1;
    p.structure[1][0][1] = -p1.substitute(var_lambda(), -x - d);
    p.validate();
    return p;
}

AlgebraPresentation make_rank2(RegistryPtr reg, int delta, const Polynomial& a, const Polynomial& b,
                               const Polynomial& q) {
    if (delta != 0 && delta != 1) fail(errc::invalid_argument, "delta must be 0 or 1");
    AlgebraPresentation p;
    p.reg = reg;
    p.gens = {"A", "B"};
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial one(Rational(1), reg);
    p.structure.assign(2, std::vector<std::vector<Polynomial>>(2, std::vector<Polynomial>(2)));
    p.structure[0][0][0] = d + x * Rational(2);
    p.structure[0][0][1] = q;
    if (delta == 1) {
        p.structure[0][1][1] = d + a * x + b;
        p.structure[1][0][1] = (a - one) * d + a * x - b;
    }
    return finish_checked(std::move(p), "make_rank2");
}

Polynomial rank2_table_q(RegistryPtr reg, int a_key, const Polynomial& beta, const Polynomial& gamma) {
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial c = x * Rational(2) + d;   // 2x + d
    Polynomial s = x * x + x * d;         // x^2 + x d
    switch (a_key) {
        case 1:
            if (!gamma.is_zero()) fail(errc::invalid_argument, "table row a=1 has no gamma slot");
            return beta * c;
        case 0:
            return beta * c * s + gamma * c * d;
        case -1:
            return beta * c * d * d + gamma * c * s * d;
        case -4:
            if (!gamma.is_zero()) fail(errc::invalid_argument, "table row a=-4 has no gamma slot");
            return beta * c * s.pow(3);
        case -6:
            if (!gamma.is_zero()) fail(errc::invalid_argument, "table row a=-6 has no gamma slot");
            return beta * c * (s.pow(4) * Rational(11) + s.pow(3) * d * d * Rational(2));
        default:
            fail(errc::unknown_table_row, "no table row for a = " + std::to_string(a_key));
    }
}

AlgebraPresentation make_rank2_row(RegistryPtr reg, int a_key, const Polynomial& beta, const Polynomial& gamma) {
    Polynomial a(Rational(a_key), reg);
    Polynomial b(Rational(0), reg);
    return make_rank2(reg, 1, a, b, rank2_table_q(reg, a_key, beta, gamma));
}

SolutionSpace center_candidates(const AlgebraPresentation& p, unsigned degree_bound) {
    const size_t n = p.rank();
    for (const auto& row : p.structure)
        for (const auto& cell : row)
            for (const auto& q : cell)
                if (!q.uses_only({var_del(), var_lambda()}))
                    fail(errc::invalid_argument, "center_candidates requires specialized parameters");

    LinearSystem sys;
    for (size_t i = 0; i < n; ++i)
        for (unsigned t = 0; t <= degree_bound; ++t)
            sys.labels.push_back(p.gens[i] + ":d^" + std::to_string(t));

    // One column per basis element d^t e_i of the search space.
    std::map<std::pair<size_t, Monomial>, size_t, bool (*)(const std::pair<size_t, Monomial>&,
                                                           const std::pair<size_t, Monomial>&)>
        eq_index([](const std::pair<size_t, Monomial>& a, const std::pair<size_t, Monomial>& b) {
            if (a.first != b.first) return a.first < b.first;
            return Monomial::cmp(a.second, b.second) < 0;
        });

    std::vector<RatVec> rows;
    size_t col = 0;
    for (size_t i = 0; i < n; ++i) {
        for (unsigned t = 0; t <= degree_bound; ++t, ++col) {
            Element e(n);
            e[i] = Polynomial::variable(var_del(), p.reg).pow(t);
            for (size_t j = 0; j < n; ++j) {
                LambdaExpression br = bracket(p, e, gen_element(p, j), var_lambda());
                for (size_t k = 0; k < n; ++k) {
                    for (const auto& [mono, c] : br[k].terms()) {
                        auto key = std::make_pair(j * n + k, mono);
                        auto it = eq_index.find(key);
                        if (it == eq_index.end()) {
                            it = eq_index.emplace(key, rows.size()).first;
                            rows.emplace_back(sys.labels.size(), Rational(0));
                        }
                        rows[it->second][col] += c;
                    }
                }
            }
        }
    }
    for (auto& r : rows) sys.add_row(std::move(r), 0);
    return solve_linear(sys);
}

Element element_from_vector(const AlgebraPresentation& p, const RatVec& coeffs, unsigned degree_bound) {
    Element e(p.rank());
    for (auto& c : e) c = Polynomial(Rational(0), p.reg);
    size_t idx = 0;
    for (size_t i = 0; i < p.rank(); ++i)
        for (unsigned t = 0; t <= degree_bound; ++t, ++idx)
            if (coeffs.at(idx) != 0)
                e[i] += Polynomial::variable(var_del(), p.reg).pow(t) * coeffs[idx];
    return e;
}

Polynomial poly_mat_det(const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    if (n == 0) fail(errc::invalid_argument, "empty matrix");
    for (const auto& row : m)
        if (row.size() != n) fail(errc::invalid_argument, "matrix is not square");
    if (n == 1) return m[0][0];
    Polynomial det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * poly_mat_det(minor);
        det = j % 2 == 0 ? det + cof : det - cof;
    }
    return det;
}

AlgebraPresentation change_of_basis(const AlgebraPresentation& p,
                                    const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = p.rank();
    if (m.size() != n) fail(errc::invalid_argument, "basis-change matrix has wrong shape");
    for (const auto& row : m) {
        if (row.size() != n) fail(errc::invalid_argument, "basis-change matrix has wrong shape");
        for (const auto& q : row)
            if (q.contains(var_lambda()) || q.contains(var_mu()) || q.contains(var_nu()))
                fail(errc::invalid_argument, "basis-change entries must be polynomials in d");
    }

    Polynomial det = poly_mat_det(m);
    if (det.is_zero() || !det.is_constant())
        fail(errc::non_unimodular, "basis-change matrix determinant is not a nonzero constant");
    Rational det_c = det.constant_value();

    // inverse = adjugate / det; adj[k][l] = (-1)^{k+l} minor(l,k)
    std::vector<std::vector<Polynomial>> inv(n, std::vector<Polynomial>(n));
    if (n == 1) {
        inv[0][0] = Polynomial::constant(1 / det_c, p.reg);
    } else {
        for (size_t k = 0; k < n; ++k) {
            for (size_t l = 0; l < n; ++l) {
                std::vector<std::vector<Polynomial>> minor;
                for (size_t r = 0; r < n; ++r) {
                    if (r == l) continue;
                    std::vector<Polynomial> row;
                    for (size_t c = 0; c < n; ++c)
                        if (c != k) row.push_back(m[r][c]);
                    minor.push_back(std::move(row));
                }
                Polynomial cof = poly_mat_det(minor) * (1 / det_c);
                inv[k][l] = (k + l) % 2 == 0 ? cof : -cof;
            }
        }
    }

    AlgebraPresentation out;
    out.reg = p.reg;
    out.gens = p.gens;
    out.structure.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            LambdaExpression br = bracket(p, m[i], m[j], var_lambda());
            for (size_t l = 0; l < n; ++l) {
                Polynomial acc(Rational(0), p.reg);
                for (size_t k = 0; k < n; ++k)
                    if (!br[k].is_zero() && !inv[k][l].is_zero()) acc += br[k] * inv[k][l];
                out.structure[i][j][l] = std::move(acc);
            }
        }
    }
    out.validate();
    return out;
}

}  // namespace lcac
