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
#include "testutil.hpp"

using namespace lcac;
using lcac::test::random_point;
using lcac::test::random_poly;

namespace {

struct Ring {
    RegistryPtr reg = make_registry();
    Polynomial d = Polynomial::variable(var_del(), reg);
    Polynomial x = Polynomial::variable(var_lambda(), reg);
    Polynomial y = Polynomial::variable(var_mu(), reg);
    Polynomial one{Rational(1), reg};
    Polynomial zero{Rational(0), reg};

    Polynomial param(const std::string& name) { return Polynomial::variable(reg->intern(name), reg); }
};

}  // namespace

TEST_CASE("addition: cancellation, identity, symmetry") {
    Ring r;
    CHECK((r.d + r.x * Rational(2)) + (r.x * Rational(-2)) == r.d);
    Polynomial p = r.d * r.d + r.x * Rational(3);
    CHECK(p + Polynomial() == p);
    Polynomial b = r.param("b");
    CHECK((r.d + b) + (r.d - b) == r.d * Rational(2));
}

TEST_CASE("multiplication: conjugates, identity, parameter scaling") {
    Ring r;
    CHECK((r.d + r.x) * (r.d - r.x) == r.d * r.d - r.x * r.x);
    Polynomial p = r.d * r.d - r.x + r.one;
    CHECK(p * r.one == p);
    Polynomial beta = r.param("beta");
    CHECK((r.x * Rational(2) + r.d) * beta == beta * r.x * Rational(2) + beta * r.d);
}

TEST_CASE("substitute: shifts and the skew substitution") {
    Ring r;
    Polynomial a = r.param("a"), b = r.param("b");

    CHECK((r.d + r.x * Rational(2)).substitute(var_lambda(), r.x + r.y) ==
          r.d + r.x * Rational(2) + r.y * Rational(2));

    // (d + a x + b)[x -> -x-d] = (1-a) d - a x + b, checked against
    // evaluation at random points as an independent oracle.
    Polynomial p = r.d + a * r.x + b;
    Polynomial sub = p.substitute(var_lambda(), -r.x - r.d);
    CHECK(sub == (r.one - a) * r.d - a * r.x + b);
    Rng rng(7);
    std::vector<Variable> vars{var_del(), var_lambda(), *r.reg->find("a"), *r.reg->find("b")};
    for (int i = 0; i < 20; ++i) {
        auto pt = random_point(rng, vars);
        auto pt2 = pt;
        pt2[var_lambda()] = -pt[var_lambda()] - pt[var_del()];
        CHECK(sub.evaluate(pt) == p.evaluate(pt2));
    }

    CHECK((r.x * r.x).substitute(var_lambda(), r.zero).is_zero());
}

TEST_CASE("coefficients_in: extraction and reconstruction") {
    Ring r;
    auto cs = (r.d + r.x * Rational(2)).coefficients_in(var_lambda());
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == r.d);
    CHECK(cs[1] == Polynomial(Rational(2), r.reg));

    auto c5 = Polynomial(Rational(5), r.reg).coefficients_in(var_lambda());
    REQUIRE(c5.size() == 1);
    CHECK(c5[0] == Polynomial(Rational(5), r.reg));

    // (2x + d)(x^2 + x d) = 2x^3 + 3d x^2 + d^2 x: coefficients [0, d^2, 3d, 2]
    Polynomial p = (r.x * Rational(2) + r.d) * (r.x * r.x + r.x * r.d);
    auto cp = p.coefficients_in(var_lambda());
    REQUIRE(cp.size() == 4);
    CHECK(cp[0].is_zero());
    CHECK(cp[1] == r.d * r.d);
    CHECK(cp[2] == r.d * Rational(3));
    CHECK(cp[3] == Polynomial(Rational(2), r.reg));

    // reconstruction: sum c_j x^j = p, on random polynomials
    Rng rng(11);
    std::vector<Variable> vars{var_del(), var_lambda(), var_mu()};
    for (int i = 0; i < 50; ++i) {
        Polynomial q = random_poly(rng, r.reg, vars, 4, 6);
        auto cq = q.coefficients_in(var_lambda());
        Polynomial back(Rational(0), r.reg);
        for (size_t j = 0; j < cq.size(); ++j) back += cq[j] * r.x.pow(uint32_t(j));
        CHECK(back == q);
    }
}

TEST_CASE("exact_divide: linear factors and failure") {
    Ring r;
    Polynomial b = r.param("b");
    CHECK((r.d * r.d + b * r.d).exact_divide(r.d + b) == r.d);
    CHECK_THROWS_AS((r.d + r.one).exact_divide(r.d), error);
    CHECK(((r.d + b) * (r.d + r.x * Rational(2))).exact_divide(r.d + b) == r.d + r.x * Rational(2));
    CHECK_THROWS_AS(r.one.exact_divide(r.zero), error);
}

TEST_CASE("specialize: parameter bindings") {
    Ring r;
    Polynomial a = r.param("a"), b = r.param("b"), beta = r.param("beta");
    Variable va = *r.reg->find("a"), vb = *r.reg->find("b"), vbeta = *r.reg->find("beta");

    CHECK((r.d + a * r.x + b).specialize({{va, 1}, {vb, 0}}) == r.d + r.x);
    CHECK((beta * (r.x * Rational(2) + r.d)).specialize({{vbeta, 0}}).is_zero());
    CHECK((r.d + a * r.x + b).specialize({{va, 2}}) == r.d + r.x * Rational(2) + b);
    CHECK_THROWS_AS(r.d.specialize({{var_del(), 1}}), error);
}

TEST_CASE("ring laws on random triples") {
    Ring r;
    Polynomial a = r.param("a");
    Rng rng(23);
    std::vector<Variable> vars{var_del(), var_lambda(), *r.reg->find("a")};
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = random_poly(rng, r.reg, vars, 3, 3);
        Polynomial q = random_poly(rng, r.reg, vars, 3, 3);
        Polynomial s = random_poly(rng, r.reg, vars, 3, 3);
        CHECK(p + q == q + p);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p * q == q * p);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    Ring r;
    Rng rng(31);
    std::vector<Variable> vars{var_del(), var_lambda(), var_mu()};
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, r.reg, vars, 3, 4);
        Polynomial q = random_poly(rng, r.reg, vars, 3, 4);
        Polynomial target = random_poly(rng, r.reg, vars, 2, 3);
        CHECK((p * q).substitute(var_lambda(), target) ==
              p.substitute(var_lambda(), target) * q.substitute(var_lambda(), target));
        CHECK((p + q).substitute(var_lambda(), target) ==
              p.substitute(var_lambda(), target) + q.substitute(var_lambda(), target));
    }
}

TEST_CASE("exact_divide inverts multiplication") {
    Ring r;
    Rng rng(41);
    std::vector<Variable> vars{var_del(), var_lambda()};
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, r.reg, vars, 3, 4);
        Polynomial q = random_poly(rng, r.reg, vars, 3, 4);
        if (q.is_zero()) continue;
        CHECK((p * q).exact_divide(q) == p);
    }
}

TEST_CASE("canonical form: construction order cannot be observed") {
    Ring r;
    Polynomial p1 = r.d + r.x * Rational(2) + r.d * r.x;
    Polynomial p2 = r.d * r.x + r.x + r.d + r.x;
    CHECK(p1 == p2);
    CHECK(p1.str() == p2.str());

    Polynomial half(Rational(1, 2), r.reg);
    CHECK((half + half) == r.one);
    CHECK((r.x * half + r.x * half) == r.x);
}

TEST_CASE("canonical rendering") {
    Ring r;
    Polynomial b = r.param("b");
    CHECK((r.d + r.x * Rational(2)).str() == "2*x + d");
    CHECK(r.zero.str() == "0");
    CHECK(Polynomial(Rational(-3, 2), r.reg).str() == "-3/2");
    CHECK((r.x.pow(2) - r.d).str() == "x^2 - d");
    CHECK((b * r.d * Rational(2) - r.one).str() == "2*b*d - 1");
    CHECK((-r.x).str() == "-x");
}

TEST_CASE("registry: reserved names and mismatch detection") {
    Ring r;
    CHECK_THROWS_AS(r.reg->declare("d"), error);
    r.reg->declare("u");
    CHECK_THROWS_AS(r.reg->declare("u"), error);

    auto other = make_registry();
    Polynomial p = Polynomial::variable(var_del(), r.reg);
    Polynomial q = Polynomial::variable(var_del(), other);
    CHECK_THROWS_AS(p + q, error);
    CHECK_THROWS_AS(p * q, error);
    // registry-free constants are compatible with everything
    CHECK(p + Polynomial(Rational(1)) == p + r.one);
}
