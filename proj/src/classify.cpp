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

#include "classify.hpp"

#include <map>

namespace lcac {

void append_poly_equations(LinearSystem& sys, const Polynomial& p, const std::vector<Variable>& unknowns) {
    std::map<uint32_t, size_t> col_of;
    for (size_t c = 0; c < unknowns.size(); ++c) col_of[unknowns[c].id] = c;

    std::map<Monomial, size_t, TermOrderDesc> row_of;
    std::vector<RatVec> rows;
    RatVec rhs;

    auto row_for = [&](const Monomial& key) {
        auto it = row_of.find(key);
        if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back(unknowns.size(), Rational(0));
            rhs.emplace_back(0);
        }
        return it->second;
    };

    for (const auto& [mono, c] : p.terms()) {
        std::optional<size_t> col;
        for (const auto& [v, e] : mono.entries()) {
            auto it = col_of.find(v.id);
            if (it == col_of.end()) continue;
            if (e > 1 || col) fail(errc::invalid_argument, "expression is not affine in the unknowns");
            col = it->second;
        }
        if (col) {
            size_t r = row_for(mono.without(unknowns[*col]));
            rows[r][*col] += c;
        } else {
            size_t r = row_for(mono);
            rhs[r] -= c;
        }
    }
    for (size_t r = 0; r < rows.size(); ++r) sys.add_row(std::move(rows[r]), std::move(rhs[r]));
}

SolutionSpace solve_f(const Rational& a, const Rational& b, unsigned d) {
    auto reg = make_registry();
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial y = Polynomial::variable(var_mu(), reg);

    std::vector<Variable> us;
    Polynomial f(Rational(0), reg);
    LinearSystem sys;
    for (unsigned i = 0; i <= d; ++i) {
        Variable u = reg->declare("_f" + std::to_string(i));
        us.push_back(u);
        sys.labels.push_back("f[" + std::to_string(i) + "]");
        f += Polynomial::variable(u, reg) * x.pow(i);
    }

    Polynomial expr = f.substitute(var_lambda(), x + y) * (x * (a - 1) - y + Polynomial(b, reg)) +
                      y * f.substitute(var_lambda(), y);
    append_poly_equations(sys, expr, us);
    return solve_linear(sys);
}

namespace {

/// Copies a polynomial that only uses reserved variables into another
/// registry (reserved ids coincide across registries).
Polynomial rebase_reserved(const Polynomial& p, const RegistryPtr& target) {
    Polynomial out(Rational(0), target);
    for (const auto& [mono, c] : p.terms()) {
        for (const auto& [v, e] : mono.entries())
            if (!Registry::reserved(v))
                fail(errc::invalid_argument, "polynomial still carries parameters; specialize them first");
        out += Polynomial::term(c, mono, target);
    }
    return out;
}

}  // namespace

SolutionSpace solve_p(const Rational& /*a*/, const Rational& /*b*/, const Polynomial& q, const Polynomial& f,
                      unsigned d) {
    auto reg = make_registry();
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial y = Polynomial::variable(var_mu(), reg);

    Polynomial ql = rebase_reserved(q, reg);
    Polynomial fl = rebase_reserved(f, reg);
    if (ql.degree_in(var_mu()) || ql.degree_in(var_nu()))
        fail(errc::invalid_argument, "Q must be a polynomial in d and x");
    if (fl.degree_in(var_del()) || fl.degree_in(var_mu()) || fl.degree_in(var_nu()))
        fail(errc::invalid_argument, "f must be a polynomial in x");

    std::vector<Variable> us;
    Polynomial p(Rational(0), reg);
    LinearSystem sys;
    for (unsigned i = 0; i <= d; ++i) {
        Variable u = reg->declare("_p" + std::to_string(i));
        us.push_back(u);
        sys.labels.push_back("p[" + std::to_string(i) + "]");
        p += Polynomial::variable(u, reg) * x.pow(i);
    }

    Polynomial expr = (x - y) * p.substitute(var_lambda(), x + y) +
                      ql.substitute(var_del(), -x - y) * fl.substitute(var_lambda(), x + y) -
                      x * p + y * p.substitute(var_lambda(), y);
    append_poly_equations(sys, expr, us);
    return solve_linear(sys);
}

namespace {

struct FreshParams {
    RegistryPtr reg;
    int counter = 0;
    std::vector<std::string> used;

    Polynomial next() {
        std::string name = "_c" + std::to_string(++counter);
        used.push_back(name);
        return Polynomial::variable(reg->intern(name), reg);
    }
};

/// Materializes an affine solution space of polynomial coefficients (slot i
/// is the coefficient of pow_var^i) as one polynomial whose free coordinates
/// are fresh parameters.
Polynomial family_poly(const SolutionSpace& sp, FreshParams& fresh, std::vector<std::string>& names) {
    const RegistryPtr& reg = fresh.reg;
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial out(Rational(0), reg);
    const RatVec& part = *sp.particular;
    for (size_t i = 0; i < part.size(); ++i)
        if (part[i] != 0) out += x.pow(uint32_t(i)) * part[i];
    for (const auto& vec : sp.nullspace) {
        size_t before = fresh.used.size();
        Polynomial c = fresh.next();
        names.push_back(fresh.used[before]);
        for (size_t i = 0; i < vec.size(); ++i)
            if (vec[i] != 0) out += c * x.pow(uint32_t(i)) * vec[i];
    }
    return out;
}

ActionFamily finish_family(std::string tag, const AlgebraPresentation& p, const Polynomial& a_act,
                           const Polynomial& b_act, std::vector<std::string> frees, std::string note) {
    ActionFamily fam;
    fam.case_tag = std::move(tag);
    fam.module = make_rank_one(p, {a_act, b_act});
    fam.free_params = std::move(frees);
    fam.note = std::move(note);
    fam.verified = residuals_zero(check_module_axioms(fam.module));
    return fam;
}

}  // namespace

std::vector<ActionFamily> classify_rank_one(const AlgebraPresentation& p, unsigned degree_bound) {
    p.validate();
    if (p.rank() != 2) fail(errc::invalid_argument, "classification handles rank-two presentations");
    for (const auto& row : p.structure)
        for (const auto& cell : row)
            for (const auto& q : cell)
                if (!q.uses_only({var_del(), var_lambda()}))
                    fail(errc::invalid_argument, "specialize parameters before classification");
    if (!residuals_zero(check_skew(p)) || !residuals_zero(check_jacobi(p)))
        fail(errc::invalid_argument, "presentation is not a Lie conformal algebra");

    const RegistryPtr& reg = p.reg;
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial d2x = d + x * Rational(2);
    Polynomial zero(Rational(0), reg);

    const Polynomial& aa_a = p.structure[0][0][0];
    const Polynomial& aa_b = p.structure[0][0][1];  // Q or Q1
    const Polynomial& ab_a = p.structure[0][1][0];
    const Polynomial& ab_b = p.structure[0][1][1];  // delta(d+ax+b) or P1
    const Polynomial& bb_a = p.structure[1][1][0];
    const Polynomial& bb_b = p.structure[1][1][1];

    FreshParams fresh{reg, 0, {}};
    std::vector<ActionFamily> out;

    auto vir_action = [&](std::vector<std::string>& names) {
        // A x v = (d + p(x)) v with p every degree-bounded solution of the
        // Vir compatibility; the space is {alpha x + beta} at any bound.
        SolutionSpace ps = solve_p(0, 0, zero, zero, degree_bound);
        return d + family_poly(ps, fresh, names);
    };
    auto free_poly = [&](std::vector<std::string>& names) {
        Polynomial out_poly(Rational(0), reg);
        for (unsigned i = 0; i <= degree_bound; ++i) {
            size_t before = fresh.used.size();
            Polynomial c = fresh.next();
            names.push_back(fresh.used[before]);
            out_poly += c * x.pow(i);
        }
        return out_poly;
    };

    if (ab_a.is_zero() && bb_a.is_zero() && bb_b.is_zero() && ab_b.is_zero() && aa_a == d2x &&
        aa_b.is_zero() && p.structure[1][0][0].is_zero() && p.structure[1][0][1].is_zero()) {
        // (iii): Vir + central abelian line, delta = 0.
        std::vector<std::string> n1;
        Polynomial a1 = vir_action(n1);
        out.push_back(finish_family("iii", p, a1, zero, n1,
                                    "B acts as zero; irreducibility needs a nonzero x-coefficient"));
        std::vector<std::string> n2;
        Polynomial b2 = free_poly(n2);
        out.push_back(finish_family("iii", p, zero, b2, n2, "A acts as zero; any nonzero phi gives a module"));
        return out;
    }

    if (aa_a == d2x && bb_b == d2x && aa_b.is_zero() && bb_a.is_zero() && ab_a.is_zero() && ab_b.is_zero()) {
        // (iv): direct sum of two Virasoro ideals.
        std::vector<std::string> n1;
        Polynomial a1 = vir_action(n1);
        out.push_back(finish_family("iv", p, a1, zero, n1, "B summand acts as zero"));
        std::vector<std::string> n2;
        Polynomial b2 = vir_action(n2);
        out.push_back(finish_family("iv", p, zero, b2, n2, "A summand acts as zero"));
        return out;
    }

    if (aa_a == d2x && bb_a.is_zero() && bb_b.is_zero() && ab_a.is_zero() && !ab_b.is_zero()) {
        // (ii): the non-solvable non-semisimple form with delta = 1.
        Polynomial rest = ab_b - d;
        if (ab_b.coefficient_of(var_del(), 1) != Polynomial(Rational(1), reg) || rest.degree_in(var_del()) != 0 ||
            rest.degree_in(var_lambda()) > 1)
            fail(errc::invalid_argument, "unrecognized normal form: [A x B] is not d + a x + b");
        Rational a = rest.coefficient_of(var_lambda(), 1).constant_value();
        Rational b = rest.coefficient_of(var_lambda(), 0).constant_value();
        const Polynomial& q = aa_b;

        bool emitted_joint = false;
        SolutionSpace fs = solve_f(a, b, degree_bound);
        if (fs.dimension() > 0) {
            // Every solution of the f-equation at these (a,b) is constant;
            // solve for (p, gamma) jointly so the family reports one
            // coherent parameterization.
            LinearSystem sys;
            auto lreg = make_registry();
            Polynomial lx = Polynomial::variable(var_lambda(), lreg);
            Polynomial ly = Polynomial::variable(var_mu(), lreg);
            std::vector<Variable> us;
            Polynomial pp(Rational(0), lreg);
            for (unsigned i = 0; i <= degree_bound; ++i) {
                Variable u = lreg->declare("_p" + std::to_string(i));
                us.push_back(u);
                sys.labels.push_back("p[" + std::to_string(i) + "]");
                pp += Polynomial::variable(u, lreg) * lx.pow(i);
            }
            Variable ug = lreg->declare("_gamma");
            us.push_back(ug);
            sys.labels.push_back("gamma");
            Polynomial gamma = Polynomial::variable(ug, lreg);

            Polynomial ql(Rational(0), lreg);
            for (const auto& [mono, c] : q.terms()) ql += Polynomial::term(c, mono, lreg);
            Polynomial diag_eq = (lx - ly) * pp.substitute(var_lambda(), lx + ly) +
                             ql.substitute(var_del(), -lx - ly) * gamma - lx * pp +
                             ly * pp.substitute(var_lambda(), ly);
            Polynomial mixed_eq = gamma * (lx * (a - 1) + Polynomial(b, lreg));
            append_poly_equations(sys, diag_eq, us);
            append_poly_equations(sys, mixed_eq, us);
            SolutionSpace joint = solve_linear(sys);
            bool gamma_free = false;
            for (const auto& v : joint.nullspace)
                if (v.back() != 0) gamma_free = true;
            if (!joint.empty() && gamma_free) {
                // Rebuild the family over the presentation registry.
                std::vector<std::string> n2;
                Polynomial a_act(Rational(0), reg), b_act(Rational(0), reg);
                const RatVec& part = *joint.particular;
                for (size_t i = 0; i + 1 < part.size(); ++i)
                    if (part[i] != 0) a_act += x.pow(uint32_t(i)) * part[i];
                if (part.back() != 0) b_act += Polynomial(part.back(), reg);
                for (const auto& vec : joint.nullspace) {
                    size_t before = fresh.used.size();
                    Polynomial c = fresh.next();
                    n2.push_back(fresh.used[before]);
                    for (size_t i = 0; i + 1 < vec.size(); ++i)
                        if (vec[i] != 0) a_act += c * x.pow(uint32_t(i)) * vec[i];
                    if (vec.back() != 0) b_act += c * vec.back();
                }
                a_act = d + a_act;
                out.push_back(finish_family("ii", p, a_act, b_act, n2,
                                            "gamma != 0 only with a=1, b=0, Q=0; alpha != 0 needed when gamma=0"));
                emitted_joint = true;
            }
        }
        if (!emitted_joint) {
            std::vector<std::string> n1;
            SolutionSpace ps0 = solve_p(a, b, q, zero, degree_bound);
            Polynomial a_act = d + family_poly(ps0, fresh, n1);
            out.push_back(finish_family("ii", p, a_act, zero, n1,
                                        "B acts as zero; irreducibility needs a nonzero x-coefficient"));
        }
        return out;
    }

    if (aa_a.is_zero() && ab_a.is_zero() && bb_a.is_zero() && bb_b.is_zero()) {
        // (i): the solvable normal form [A x B] = P1 B, [A x A] = Q1 B.
        const Polynomial& p1 = ab_b;
        const Polynomial& q1 = aa_b;
        std::vector<std::string> names;
        Polynomial phi_a = free_poly(names);

        // phi_B is cut out by P1(-x-y, x) phi_B(x+y) = 0 and the same for Q1.
        LinearSystem sys;
        auto lreg = make_registry();
        Polynomial lx = Polynomial::variable(var_lambda(), lreg);
        Polynomial ly = Polynomial::variable(var_mu(), lreg);
        std::vector<Variable> us;
        Polynomial phib(Rational(0), lreg);
        for (unsigned i = 0; i <= degree_bound; ++i) {
            Variable u = lreg->declare("_b" + std::to_string(i));
            us.push_back(u);
            sys.labels.push_back("phiB[" + std::to_string(i) + "]");
            phib += Polynomial::variable(u, lreg) * lx.pow(i);
        }
        for (const Polynomial* constraint : {&p1, &q1}) {
            Polynomial cl(Rational(0), lreg);
            for (const auto& [mono, c] : constraint->terms()) cl += Polynomial::term(c, mono, lreg);
            append_poly_equations(sys, cl.substitute(var_del(), -lx - ly) * phib.substitute(var_lambda(), lx + ly),
                                  us);
        }
        SolutionSpace bs = solve_linear(sys);
        Polynomial phi_b(Rational(0), reg);
        for (const auto& vec : bs.nullspace) {
            size_t before = fresh.used.size();
            Polynomial c = fresh.next();
            names.push_back(fresh.used[before]);
            for (size_t i = 0; i < vec.size(); ++i)
                if (vec[i] != 0) phi_b += c * x.pow(uint32_t(i)) * vec[i];
        }
        std::string note = bs.dimension() == 0
                               ? "phi_B = 0 is forced (P1 or Q1 nonzero); phi_A must be nonzero"
                               : "phi_A and phi_B free; they may not both vanish";
        out.push_back(finish_family("i", p, phi_a, phi_b, names, note));
        return out;
    }

    fail(errc::invalid_argument, "unrecognized normal form");
}

}  // namespace lcac
