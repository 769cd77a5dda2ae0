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
#include "modules.hpp"
#include "testutil.hpp"

using namespace lcac;
using lcac::test::random_poly;

namespace {

struct Fix {
    RegistryPtr reg = make_registry();
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial one{Rational(1), reg};
    Polynomial zero{Rational(0), reg};

    Polynomial param(const std::string& name) { return Polynomial::variable(reg->intern(name), reg); }
};

}  // namespace

TEST_CASE("action: M_{a,b} and sesquilinearity") {
    Fix f;
    Polynomial a = f.param("a"), b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);
    FreeModulePresentation m = make_mab(vir, a, b);

    ModElement v = {f.one};
    ModElement av = action(m, gen_element(vir, 0), v, var_lambda());
    CHECK(av[0] == f.d + a * f.x + b);

    Element dl = {f.d};
    ModElement dlv = action(m, dl, v, var_lambda());
    CHECK(dlv[0] == -f.x * (f.d + a * f.x + b));

    // regular module of Vir: L acting on L
    FreeModulePresentation reg_mod = make_regular(vir);
    ModElement ll = action(reg_mod, gen_element(vir, 0), {f.one}, var_lambda());
    CHECK(ll[0] == f.d + f.x * Rational(2));
}

TEST_CASE("check_module_axioms: M_{a,b} and the W(1,0) family pass symbolically") {
    Fix f;
    Polynomial a = f.param("a"), b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);
    CHECK(residuals_zero(check_module_axioms(make_mab(vir, a, b))));

    Polynomial alpha = f.param("alpha"), beta = f.param("beta"), gamma = f.param("gamma");
    AlgebraPresentation w10 = make_w(f.reg, f.one, f.zero);
    FreeModulePresentation m10 = make_rank_one(w10, {f.d + alpha * f.x + beta, gamma});
    CHECK(residuals_zero(check_module_axioms(m10)));

    CHECK(residuals_zero(check_module_axioms(make_regular(vir))));
}

TEST_CASE("check_module_axioms: gamma != 0 fails over W(2,0)") {
    Fix f;
    Polynomial alpha = f.param("alpha"), beta = f.param("beta"), gamma = f.param("gamma");
    AlgebraPresentation w20 = make_w(f.reg, Polynomial(Rational(2), f.reg), f.zero);
    FreeModulePresentation m = make_rank_one(w20, {f.d + alpha * f.x + beta, gamma});
    auto rs = check_module_axioms(m);
    CHECK(!residuals_zero(rs));
    // the (L, Y, v) residual is the violated bracket-compatibility: -gamma x
    for (const auto& r : rs)
        if (r.i == 0 && r.j == 1) CHECK(r.res[0] == -gamma * f.x);
}

TEST_CASE("rank-one actions over the abelian solvable form") {
    Fix f;
    // P1 = Q1 = 0: any pair (phi_A, phi_B) in x works
    AlgebraPresentation ab = make_solvable(f.reg, f.zero, f.zero);
    FreeModulePresentation m = make_rank_one(ab, {f.x * f.x, f.one});
    CHECK(residuals_zero(check_module_axioms(m)));

    // with P1 = c nonzero, phi_B must vanish
    Polynomial c = f.param("c");
    AlgebraPresentation solv = make_solvable(f.reg, c, f.zero);
    FreeModulePresentation bad = make_rank_one(solv, {f.x * f.x, f.one});
    CHECK(!residuals_zero(check_module_axioms(bad)));
    FreeModulePresentation good = make_rank_one(solv, {f.x * f.x, f.zero});
    CHECK(residuals_zero(check_module_axioms(good)));
}

TEST_CASE("torsion modules: C_u passes, any nonzero action fails") {
    Fix f;
    Polynomial a = f.param("a"), b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);
    AlgebraPresentation w = make_w(f.reg, a, b);

    CHECK(residuals_zero(check_module_axioms(make_trivial(vir, Rational(1, 2)))));
    CHECK(residuals_zero(check_module_axioms(make_trivial(w, Rational(-3)))));

    // scalar lambda-action on a one-dimensional torsion module violates
    // d-compatibility ([phi, D] = 0 but x phi != 0)
    TorsionModule t = make_trivial(vir, Rational(0));
    t.action[0][0][0] = f.one;
    CHECK(!residuals_zero(check_module_axioms(t)));

    // two-dimensional torsion with a nilpotent action matrix still fails
    TorsionModule t2;
    t2.algebra = vir;
    t2.dim = 2;
    t2.del_action = {{0, 0}, {0, 0}};
    t2.action = {{{f.zero, f.one}, {f.zero, f.zero}}};
    CHECK(!residuals_zero(check_module_axioms(t2)));
}

TEST_CASE("check_morphism: the (d+b) embedding and failures") {
    Fix f;
    Polynomial b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);

    ModuleMorphism phi;
    phi.source = make_mab(vir, f.one, b);   // M_{1,b}
    phi.target = make_mab(vir, f.zero, b);  // M_{0,b}
    phi.matrix = {{f.d + b}};
    CHECK(residuals_zero(check_morphism(phi)));

    ModuleMorphism ident;
    ident.source = make_mab(vir, f.param("a"), b);
    ident.target = ident.source;
    ident.matrix = {{f.one}};
    CHECK(residuals_zero(check_morphism(ident)));

    // v -> w from M_{1,0} to M_{2,0}: residual x w
    ModuleMorphism bad;
    bad.source = make_mab(vir, f.one, f.zero);
    bad.target = make_mab(vir, Polynomial(Rational(2), f.reg), f.zero);
    bad.matrix = {{f.one}};
    auto rs = check_morphism(bad);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].res[0] == f.x);
}

TEST_CASE("morphism composition stays a morphism") {
    Fix f;
    Polynomial b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);
    Rng rng(17);
    for (int it = 0; it < 10; ++it) {
        Rational c = rng.nonzero_rational();
        // scale on M_{1,b}, then embed into M_{0,b}
        ModuleMorphism scale;
        scale.source = make_mab(vir, f.one, b);
        scale.target = scale.source;
        scale.matrix = {{Polynomial(c, f.reg)}};
        ModuleMorphism embed;
        embed.source = make_mab(vir, f.one, b);
        embed.target = make_mab(vir, f.zero, b);
        embed.matrix = {{f.d + b}};
        CHECK(residuals_zero(check_morphism(scale)));
        CHECK(residuals_zero(check_morphism(embed)));

        ModuleMorphism comp;
        comp.source = scale.source;
        comp.target = embed.target;
        comp.matrix = {{(f.d + b) * c}};
        CHECK(residuals_zero(check_morphism(comp)));
    }
}

TEST_CASE("module axiom residual is exactly zero on random elements too") {
    Fix f;
    Polynomial a = f.param("a"), b = f.param("b");
    AlgebraPresentation vir = make_vir(f.reg);
    FreeModulePresentation m = make_mab(vir, a, b);
    Rng rng(29);
    Polynomial y = Polynomial::variable(var_mu(), f.reg);
    for (int it = 0; it < 15; ++it) {
        Element ex = {random_poly(rng, f.reg, {var_del()}, 3, 2)};
        Element ey = {random_poly(rng, f.reg, {var_del()}, 3, 2)};
        ModElement mv = {random_poly(rng, f.reg, {var_del()}, 3, 2)};
        ModElement unit = {f.one};

        // a_x (b_y m): the y-dependent coefficient passes through a_x as
        // h(d + x, y) by sesquilinearity
        ModElement inner = action(m, ey, mv, var_mu());
        Polynomial t1 = inner[0].substitute(var_del(), f.d + f.x) * action(m, ex, unit, var_lambda())[0];
        // [a_x b]_{x+y} m
        LambdaExpression br = bracket(vir, ex, ey, var_lambda());
        Polynomial coeff = br[0].substitute(var_del(), -f.x - y);
        ModElement base = action(m, gen_element(vir, 0), mv, var_lambda());
        Polynomial t2 = coeff * base[0].substitute(var_lambda(), f.x + y);
        // b_y (a_x m)
        ModElement inner2 = action(m, ex, mv, var_lambda());
        Polynomial t3 = inner2[0].substitute(var_del(), f.d + y) * action(m, ey, unit, var_mu())[0];

        CHECK((t1 - t2 - t3).is_zero());
    }
}
