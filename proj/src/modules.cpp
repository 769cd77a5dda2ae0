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

#include "modules.hpp"

#include <set>

namespace lcac {

namespace {

void check_spectral(Variable s) {
    if (s != var_lambda() && s != var_mu() && s != var_nu())
        fail(errc::invalid_argument, "spectral variable must be one of x, y, z");
}

std::vector<Variable> coeff_vars(const RegistryPtr& reg) {
    std::vector<Variable> vs{var_del()};
    if (reg)
        for (Variable v : reg->parameters()) vs.push_back(v);
    return vs;
}

}  // namespace

void FreeModulePresentation::validate() const {
    algebra.validate();
    if (basis.empty()) fail(errc::invalid_argument, "module needs at least one basis element");
    std::set<std::string> seen;
    for (const auto& b : basis)
        if (!seen.insert(b).second) fail(errc::invalid_argument, "duplicate basis name: " + b);
    const size_t n = algebra.rank(), s = basis.size();
    if (action.size() != n) fail(errc::invalid_argument, "action table has wrong shape");
    auto allowed = coeff_vars(algebra.reg);
    allowed.push_back(var_lambda());
    for (const auto& row : action) {
        if (row.size() != s) fail(errc::invalid_argument, "action table has wrong shape");
        for (const auto& cell : row) {
            if (cell.size() != s) fail(errc::invalid_argument, "action table has wrong shape");
            for (const auto& p : cell)
                if (!p.uses_only(allowed))
                    fail(errc::invalid_argument, "action polynomials may only use d, x and parameters");
        }
    }
}

void TorsionModule::validate() const {
    algebra.validate();
    if (dim == 0) fail(errc::invalid_argument, "torsion module dimension must be positive");
    if (del_action.size() != dim) fail(errc::invalid_argument, "del matrix has wrong shape");
    for (const auto& row : del_action)
        if (row.size() != dim) fail(errc::invalid_argument, "del matrix has wrong shape");
    if (action.size() != algebra.rank()) fail(errc::invalid_argument, "action table has wrong shape");
    for (const auto& mat : action) {
        if (mat.size() != dim) fail(errc::invalid_argument, "action matrix has wrong shape");
        for (const auto& row : mat) {
            if (row.size() != dim) fail(errc::invalid_argument, "action matrix has wrong shape");
            for (const auto& p : row)
                if (!p.uses_only({var_lambda()}))
                    fail(errc::invalid_argument, "torsion action entries must be polynomials in x");
        }
    }
}

ModElement action(const FreeModulePresentation& m, const Element& x, const ModElement& elem, Variable spectral) {
    check_spectral(spectral);
    const size_t n = m.algebra.rank(), s = m.dim();
    if (x.size() != n) fail(errc::invalid_argument, "element size does not match the algebra");
    if (elem.size() != s) fail(errc::invalid_argument, "module element size does not match the basis");
    const RegistryPtr& reg = m.algebra.reg;
    auto allowed = coeff_vars(reg);
    for (const auto& c : x)
        if (!c.uses_only(allowed)) fail(errc::invalid_argument, "element coefficients may only use d and parameters");
    for (const auto& c : elem)
        if (!c.uses_only(allowed)) fail(errc::invalid_argument, "module coefficients may only use d and parameters");

    Polynomial sp = Polynomial::variable(spectral, reg);
    Polynomial d_plus_s = Polynomial::variable(var_del(), reg) + sp;
    ModElement out(s);
    for (auto& c : out) c = Polynomial(Rational(0), reg);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        Polynomial fi = x[i].substitute(var_del(), -sp);
        for (size_t j = 0; j < s; ++j) {
            if (elem[j].is_zero()) continue;
            Polynomial gj = elem[j].substitute(var_del(), d_plus_s);
            Polynomial scale = fi * gj;
            for (size_t k = 0; k < s; ++k) {
                const Polynomial& a = m.action[i][j][k];
                if (a.is_zero()) continue;
                Polynomial ak = spectral == var_lambda() ? a : a.substitute(var_lambda(), sp);
                out[k] += scale * ak;
            }
        }
    }
    return out;
}

std::vector<TripleResidual> check_module_axioms(const FreeModulePresentation& m) {
    m.validate();
    const size_t n = m.algebra.rank(), s = m.dim();
    const RegistryPtr& reg = m.algebra.reg;
    const Polynomial d = Polynomial::variable(var_del(), reg);
    const Polynomial lam = Polynomial::variable(var_lambda(), reg);
    const Polynomial mu = Polynomial::variable(var_mu(), reg);

    auto act_gen = [&](size_t gi, size_t bj, Variable sp) {
        ModElement out(s);
        for (size_t k = 0; k < s; ++k) {
            const Polynomial& a = m.action[gi][bj][k];
            out[k] = sp == var_lambda() ? a : a.substitute(var_lambda(), Polynomial::variable(sp, reg));
        }
        return out;
    };

    std::vector<TripleResidual> out;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            for (size_t v = 0; v < s; ++v) {
                LambdaExpression res(s);
                for (auto& c : res) c = Polynomial(Rational(0), reg);

                // a_x (b_y v)
                ModElement inner = act_gen(b, v, var_mu());
                for (size_t k = 0; k < s; ++k) {
                    if (inner[k].is_zero()) continue;
                    Polynomial h = inner[k].substitute(var_del(), d + lam);
                    ModElement outer = act_gen(a, k, var_lambda());
                    for (size_t l = 0; l < s; ++l)
                        if (!outer[l].is_zero()) res[l] += h * outer[l];
                }

                // [a_x b]_{x+y} v
                LambdaExpression ab = bracket_gens(m.algebra, a, b, var_lambda());
                for (size_t c = 0; c < n; ++c) {
                    if (ab[c].is_zero()) continue;
                    Polynomial coeff = ab[c].substitute(var_del(), -lam - mu);
                    ModElement av = act_gen(c, v, var_lambda());
                    for (size_t l = 0; l < s; ++l)
                        if (!av[l].is_zero()) res[l] -= coeff * av[l].substitute(var_lambda(), lam + mu);
                }

                // b_y (a_x v)
                ModElement inner2 = act_gen(a, v, var_lambda());
                for (size_t k = 0; k < s; ++k) {
                    if (inner2[k].is_zero()) continue;
                    Polynomial u = inner2[k].substitute(var_del(), d + mu);
                    ModElement outer = act_gen(b, k, var_mu());
                    for (size_t l = 0; l < s; ++l)
                        if (!outer[l].is_zero()) res[l] -= u * outer[l];
                }

                out.push_back({a, b, v, std::move(res)});
            }
        }
    }
    return out;
}

std::vector<PairResidual> check_module_axioms(const TorsionModule& m) {
    m.validate();
    const size_t n = m.algebra.rank(), s = m.dim;
    const RegistryPtr& reg = m.algebra.reg;
    const Polynomial lam = Polynomial::variable(var_lambda(), reg);
    const Polynomial mu = Polynomial::variable(var_mu(), reg);

    auto mat_mul = [&](const std::vector<std::vector<Polynomial>>& a,
                       const std::vector<std::vector<Polynomial>>& b) {
        std::vector<std::vector<Polynomial>> out(s, std::vector<Polynomial>(s));
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) {
                Polynomial acc(Rational(0), reg);
                for (size_t k = 0; k < s; ++k)
                    if (!a[i][k].is_zero() && !b[k][j].is_zero()) acc += a[i][k] * b[k][j];
                out[i][j] = std::move(acc);
            }
        return out;
    };
    auto subst = [&](const std::vector<std::vector<Polynomial>>& a, const Polynomial& target) {
        std::vector<std::vector<Polynomial>> out(s, std::vector<Polynomial>(s));
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) out[i][j] = a[i][j].substitute(var_lambda(), target);
        return out;
    };
    auto flatten = [&](const std::vector<std::vector<Polynomial>>& a) {
        LambdaExpression out;
        for (const auto& row : a)
            for (const auto& e : row) out.push_back(e);
        return out;
    };

    std::vector<std::vector<Polynomial>> del(s, std::vector<Polynomial>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) del[i][j] = Polynomial::constant(m.del_action[i][j], reg);

    std::vector<PairResidual> out;
    // a_x (d m) = (d + x)(a_x m): phi_a D - D phi_a - x phi_a = 0
    for (size_t a = 0; a < n; ++a) {
        auto r = mat_mul(m.action[a], del);
        auto l = mat_mul(del, m.action[a]);
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) r[i][j] = r[i][j] - l[i][j] - lam * m.action[a][i][j];
        out.push_back({a, a, flatten(r)});
    }
    // phi_a(x) phi_b(y) - phi_b(y) phi_a(x) - sum_c P_ab^c(-x-y, x) phi_c(x+y)
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            auto pa = m.action[a];
            auto pb = subst(m.action[b], mu);
            auto comm = mat_mul(pa, pb);
            auto rev = mat_mul(pb, pa);
            LambdaExpression abx = bracket_gens(m.algebra, a, b, var_lambda());
            std::vector<std::vector<Polynomial>> rhs(s, std::vector<Polynomial>(s, Polynomial(Rational(0), reg)));
            for (size_t c = 0; c < n; ++c) {
                if (abx[c].is_zero()) continue;
                Polynomial coeff = abx[c].substitute(var_del(), -lam - mu);
                auto pc = subst(m.action[c], lam + mu);
                for (size_t i = 0; i < s; ++i)
                    for (size_t j = 0; j < s; ++j)
                        if (!pc[i][j].is_zero()) rhs[i][j] += coeff * pc[i][j];
            }
            for (size_t i = 0; i < s; ++i)
                for (size_t j = 0; j < s; ++j) comm[i][j] = comm[i][j] - rev[i][j] - rhs[i][j];
            out.push_back({a, b, flatten(comm)});
        }
    }
    return out;
}

FreeModulePresentation make_mab(const AlgebraPresentation& vir, const Polynomial& a, const Polynomial& b) {
    if (vir.rank() != 1) fail(errc::invalid_argument, "make_mab expects a rank-one algebra");
    FreeModulePresentation m;
    m.algebra = vir;
    m.basis = {"v"};
    Polynomial d = Polynomial::variable(var_del(), vir.reg);
    Polynomial x = Polynomial::variable(var_lambda(), vir.reg);
    m.action = {{{d + a * x + b}}};
    return m;
}

TorsionModule make_trivial(const AlgebraPresentation& alg, const Rational& u) {
    TorsionModule m;
    m.algebra = alg;
    m.dim = 1;
    m.del_action = {{u}};
    m.action.assign(alg.rank(), {{Polynomial(Rational(0), alg.reg)}});
    return m;
}

FreeModulePresentation make_regular(const AlgebraPresentation& alg) {
    FreeModulePresentation m;
    m.algebra = alg;
    m.basis = alg.gens;
    m.action = alg.structure;
    return m;
}

FreeModulePresentation make_rank_one(const AlgebraPresentation& alg, const std::vector<Polynomial>& phi) {
    if (phi.size() != alg.rank()) fail(errc::invalid_argument, "one action polynomial per generator required");
    FreeModulePresentation m;
    m.algebra = alg;
    m.basis = {"v"};
    m.action.assign(alg.rank(), {{Polynomial(Rational(0), alg.reg)}});
    for (size_t i = 0; i < alg.rank(); ++i) m.action[i][0][0] = phi[i];
    return m;
}

std::vector<PairResidual> check_morphism(const ModuleMorphism& phi) {
    phi.source.validate();
    phi.target.validate();
    const size_t n = phi.source.algebra.rank();
    const size_t ss = phi.source.dim(), ts = phi.target.dim();
    if (phi.source.algebra.gens != phi.target.algebra.gens || phi.target.algebra.rank() != n)
        fail(errc::invalid_argument, "morphism endpoints live over different algebras");
    if (phi.matrix.size() != ss) fail(errc::invalid_argument, "morphism matrix has wrong shape");
    for (const auto& row : phi.matrix)
        if (row.size() != ts) fail(errc::invalid_argument, "morphism matrix has wrong shape");

    const RegistryPtr& reg = phi.source.algebra.reg;
    const Polynomial d = Polynomial::variable(var_del(), reg);
    const Polynomial lam = Polynomial::variable(var_lambda(), reg);

    std::vector<PairResidual> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < ss; ++j) {
            LambdaExpression res(ts);
            for (auto& c : res) c = Polynomial(Rational(0), reg);
            // action(e_i, phi(v_j)): F_{jk}(d+x) * target-action of e_i on w_k
            for (size_t k = 0; k < ts; ++k) {
                if (phi.matrix[j][k].is_zero()) continue;
                Polynomial f = phi.matrix[j][k].substitute(var_del(), d + lam);
                for (size_t l = 0; l < ts; ++l)
                    if (!phi.target.action[i][k][l].is_zero()) res[l] += f * phi.target.action[i][k][l];
            }
            // phi(action(e_i, v_j)): source action coefficient times F (C[d]-linear in x-scalars)
            for (size_t k = 0; k < ss; ++k) {
                const Polynomial& a = phi.source.action[i][j][k];
                if (a.is_zero()) continue;
                for (size_t l = 0; l < ts; ++l)
                    if (!phi.matrix[k][l].is_zero()) res[l] -= a * phi.matrix[k][l];
            }
            out.push_back({i, j, std::move(res)});
        }
    }
    return out;
}

}  // namespace lcac
