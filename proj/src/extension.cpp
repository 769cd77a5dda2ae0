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

#include "extension.hpp"

namespace lcac {

ExtSetting detect_setting(const AlgebraPresentation& h, const FreeModulePresentation& m) {
    h.validate();
    m.validate();
    if (h.rank() != 2 || m.dim() != 1) fail(errc::setting_mismatch, "expected a rank-two algebra and a rank-one module");
    const RegistryPtr& reg = h.reg;
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial d2x = d + x * Rational(2);

    if (!(h.structure[0][0][0] == d2x) || !h.structure[0][0][1].is_zero() || !h.structure[0][1][0].is_zero() ||
        !h.structure[0][1][1].is_zero() || !h.structure[1][0][0].is_zero() || !h.structure[1][0][1].is_zero() ||
        !h.structure[1][1][0].is_zero())
        fail(errc::setting_mismatch, "algebra is not Vir + abelian B with [A x B] = 0");
    const Polynomial& bb = h.structure[1][1][1];
    if (!bb.is_zero() && bb != d2x)
        fail(errc::setting_mismatch, "[B x B] must be 0 or (d + 2x) B");

    const Polynomial& phi_a = m.action[0][0][0];
    const Polynomial& phi_b = m.action[1][0][0];

    if (phi_b.is_zero() && !phi_a.is_zero()) {
        // A acts by d + a x + b.
        if (!(phi_a.coefficient_of(var_del(), 1) == Polynomial(Rational(1), reg)) ||
            phi_a.degree_in(var_del()) != 1 || phi_a.degree_in(var_lambda()) > 1)
            fail(errc::setting_mismatch, "A-action is not of the form (d + a x + b) v");
        return ExtSetting::vir_acts;
    }
    if (phi_a.is_zero()) {
        if (!bb.is_zero()) fail(errc::setting_mismatch, "[B x B] must vanish when B carries the action");
        if (phi_b.degree_in(var_del()) != 0)
            fail(errc::setting_mismatch, "B-action must be a polynomial in x");
        return ExtSetting::abelian_acts;
    }
    fail(errc::setting_mismatch, "module matches neither extension setting");
}

AlgebraPresentation build_extension(const AlgebraPresentation& h, const FreeModulePresentation& m,
                                    const CocycleData& c) {
    ExtSetting setting = detect_setting(h, m);
    const RegistryPtr& reg = h.reg;
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial skew_sub = -x - d;
    auto skew = [&](const Polynomial& q) { return -q.substitute(var_lambda(), skew_sub); };

    AlgebraPresentation e;
    e.reg = reg;
    e.gens = {h.gens[0], h.gens[1], m.basis[0]};
    e.structure.assign(3, std::vector<std::vector<Polynomial>>(3, std::vector<Polynomial>(3)));

    e.structure[0][0][0] = h.structure[0][0][0];
    e.structure[0][0][2] = c.q1;
    e.structure[1][1][1] = h.structure[1][1][1];
    e.structure[1][1][2] = c.q3;
    if (setting == ExtSetting::vir_acts) {
        e.structure[0][1][2] = c.q2;
        e.structure[1][0][2] = skew(c.q2);
    } else {
        e.structure[1][0][2] = c.q2;
        e.structure[0][1][2] = skew(c.q2);
    }
    e.structure[0][2][2] = m.action[0][0][0];
    e.structure[2][0][2] = skew(m.action[0][0][0]);
    e.structure[1][2][2] = m.action[1][0][0];
    e.structure[2][1][2] = skew(m.action[1][0][0]);
    e.validate();
    return e;
}

CocycleResiduals check_cocycle(const AlgebraPresentation& h, const FreeModulePresentation& m,
                               const CocycleData& c) {
    AlgebraPresentation e = build_extension(h, m, c);
    return {check_skew(e), check_jacobi(e)};
}

ReduceOutcome reduce_extension(const AlgebraPresentation& e, const ShiftSpec& shift, unsigned degree_bound) {
    e.validate();
    const size_t n = e.rank();
    const size_t vi = n - 1;  // absorbed generator: the module line, listed last
    if (shift.target >= n || shift.target == vi)
        fail(errc::invalid_argument, "shift target must be a non-module generator");
    if (shift.direction != 1 && shift.direction != -1) fail(errc::invalid_argument, "direction must be +1 or -1");

    const RegistryPtr& reg = e.reg;
    Polynomial d = Polynomial::variable(var_del(), reg);

    std::vector<Variable> us;
    Polynomial g_sym(Rational(0), reg);
    LinearSystem sys;
    for (unsigned i = 0; i <= degree_bound; ++i) {
        Variable u = reg->intern("_g" + std::to_string(i));
        us.push_back(u);
        sys.labels.push_back("g[" + std::to_string(i) + "]");
        g_sym += Polynomial::variable(u, reg) * d.pow(i);
    }

    auto shift_matrix = [&](const Polynomial& g) {
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
        for (size_t i = 0; i < n; ++i) m[i][i] = Polynomial(Rational(1), reg);
        m[shift.target][vi] = shift.direction == 1 ? g : -g;
        return m;
    };

    AlgebraPresentation sym = change_of_basis(e, shift_matrix(g_sym));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == vi || j == vi) continue;
            if (i != shift.target && j != shift.target) continue;
            append_poly_equations(sys, sym.structure[i][j][vi], us);
        }
    }

    ReduceOutcome out;
    out.degree_bound = degree_bound;
    SolutionSpace sol = solve_linear(sys);
    if (sol.empty()) return out;  // NoReduction: nontrivial class up to this degree

    Polynomial g(Rational(0), reg);
    for (unsigned i = 0; i <= degree_bound; ++i)
        if ((*sol.particular)[i] != 0) g += d.pow(i) * (*sol.particular)[i];

    AlgebraPresentation reduced = change_of_basis(e, shift_matrix(g));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == vi || j == vi) continue;
            if (i != shift.target && j != shift.target) continue;
            if (!reduced.structure[i][j][vi].is_zero())
                fail(errc::invalid_argument, "reduction self-check failed");
        }
    out.g = std::move(g);
    out.reduced = std::move(reduced);
    return out;
}

}  // namespace lcac
