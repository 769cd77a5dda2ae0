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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "paper_verify.hpp"

using namespace lcac;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse: Virasoro document") {
    Document doc = parse_document("algebra Vir { gen L; bracket L L = (d + 2x) L; }\n"
                                  "task check_jacobi Vir;\n");
    REQUIRE(doc.decls.size() == 2);
    const AlgebraDecl* a = doc.find_algebra("Vir");
    REQUIRE(a);
    Polynomial d = Polynomial::variable(var_del(), doc.reg);
    Polynomial x = Polynomial::variable(var_lambda(), doc.reg);
    CHECK(a->pres.structure[0][0][0] == d + x * Rational(2));
}

TEST_CASE("parse: implicit multiplication, powers, fractions, unary minus") {
    Document doc = parse_document("param a;\n"
                                  "algebra T { gen A, B; bracket A A = 0;"
                                  " bracket A B = (3/2 x^2 - a d + 2x - 1) B; }\n");
    const AlgebraDecl* t = doc.find_algebra("T");
    REQUIRE(t);
    Polynomial d = Polynomial::variable(var_del(), doc.reg);
    Polynomial x = Polynomial::variable(var_lambda(), doc.reg);
    Polynomial a = Polynomial::variable(*doc.reg->find("a"), doc.reg);
    Polynomial one(Rational(1), doc.reg);
    CHECK(t->pres.structure[0][1][1] == x * x * Rational(3, 2) - a * d + x * Rational(2) - one);
}

TEST_CASE("parse: unwritten transpose brackets are completed by skew") {
    Document doc = parse_document("param a, b;\n"
                                  "algebra W { gen L, Y; bracket L L = (d + 2x) L;"
                                  " bracket L Y = (d + a*x + b) Y; }\n");
    const AlgebraDecl* w = doc.find_algebra("W");
    REQUIRE(w);
    CHECK(residuals_zero(check_skew(w->pres)));
    CHECK(residuals_zero(check_jacobi(w->pres)));
    Polynomial d = Polynomial::variable(var_del(), doc.reg);
    Polynomial x = Polynomial::variable(var_lambda(), doc.reg);
    Polynomial a = Polynomial::variable(*doc.reg->find("a"), doc.reg);
    Polynomial b = Polynomial::variable(*doc.reg->find("b"), doc.reg);
    Polynomial one(Rational(1), doc.reg);
    CHECK(w->pres.structure[1][0][1] == (a - one) * d + a * x - b);
}

TEST_CASE("parse: diagnostics carry positions") {
    try {
        parse_document("algebra Vir { gen L; bracket L L = (d + 2x L; }\n");
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("1:") == 0);  // line 1
    }

    CHECK_THROWS_AS(parse_document("param d;\n"), error);
    CHECK_THROWS_AS(parse_document("param a;\nparam a;\n"), error);
    CHECK_THROWS_AS(parse_document("task check_skew Nope;\n"), error);
    CHECK_THROWS_AS(parse_document("algebra A1 { gen L; bracket L L = 0; }\n"
                                   "algebra A1 { gen M; bracket M M = 0; }\n"),
                    error);
    CHECK_THROWS_AS(parse_document("param _x;\n"), error);
    CHECK_THROWS_AS(parse_document("algebra A { gen L; bracket L L = (d + y) L; }\n"), error);
}

TEST_CASE("parse: modules, torsion modules and cocycles") {
    Document doc = parse_document(
        "param u;\n"
        "algebra Vir { gen L; bracket L L = (d + 2x) L; }\n"
        "module M over Vir { basis v; act L v = (d + 2x + 1) v; }\n"
        "module T over Vir { torsion -1/2; }\n"
        "cocycle C over Vir with M { q1 = (2*x + d) d; }\n"
        "task check_module M;\n"
        "task check_module T;\n");
    const ModuleDecl* m = doc.find_module("M");
    REQUIRE(m);
    CHECK(!m->torsion);
    CHECK(residuals_zero(check_module_axioms(*m->free_mod)));
    const ModuleDecl* t = doc.find_module("T");
    REQUIRE(t);
    CHECK(t->torsion);
    CHECK(t->torsion_u == Rational(-1, 2));
    CHECK(residuals_zero(check_module_axioms(*t->torsion_mod)));
    const CocycleDecl* c = doc.find_cocycle("C");
    REQUIRE(c);
    CHECK(c->data.q2.is_zero());
}

TEST_CASE("serialize round-trip: fixed point and document equality") {
    const char* sources[] = {
        "param a, b;\nalgebra W { gen L, Y; bracket L L = (d + 2x) L; bracket L Y = (d + a*x + b) Y; }\n",
        "algebra Vir { gen L; bracket L L = (d + 2x) L; }\nmodule M over Vir { basis v; act L v = d v; }\n"
        "task check_module M;\n",
        "algebra H { gen A, B; bracket A A = (d + 2*x) A; }\nmodule V over H { basis v; act A v = 0; }\n"
        "cocycle C over H with V { q2 = x^2; }\ntask reduce C shift B plus;\n",
    };
    for (const char* src : sources) {
        Document doc = parse_document(src);
        std::string once = serialize_document(doc);
        Document doc2 = parse_document(once);
        std::string twice = serialize_document(doc2);
        CHECK(once == twice);
    }
}

TEST_CASE("corpus files are canonical and exercise the exit-code contract") {
    std::string dir = LCAC_CORPUS_DIR;
    // canonical: serialize(parse(file)) reproduces the bytes exactly
    for (const char* name : {"vir.lca", "wab.lca", "w10.lca", "cur_sl2.lca", "table_rows.lca", "mab.lca",
                             "extension38.lca", "extension39.lca"}) {
        std::string text = slurp(dir + "/" + name);
        Document doc = parse_document(text);
        CHECK(serialize_document(doc) == text);
    }
    // the failing document parses but its task fails
    Document bad = parse_document(slurp(dir + "/failing_jacobi.lca"));
    Report r = run_document(bad, default_options());
    CHECK(!r.all_complete());
    // the syntactically broken document does not parse
    CHECK_THROWS_AS(parse_document(slurp(dir + "/bad_syntax.lca")), error);
}

TEST_CASE("builtin corpus parses and serializes stably") {
    Document doc = parse_document(builtin_corpus());
    std::string once = serialize_document(doc);
    CHECK(serialize_document(parse_document(once)) == once);
}

TEST_CASE("report rendering: text and json") {
    Report r;
    r.entries.push_back({"check_skew Vir", kStatusPass, {}, 3});
    r.entries.push_back({"reduce E shift A plus", kStatusNoReduction, {"degree_bound = 12"}, 5});
    std::string text = render_text(r);
    CHECK(text.find("[pass] check_skew Vir") != std::string::npos);
    CHECK(text.find("degree_bound = 12") != std::string::npos);

    std::string json = render_json(r);
    CHECK(json.find("\"task\": \"check_skew Vir\"") != std::string::npos);
    CHECK(json.find("\"millis\": 0") != std::string::npos);  // normalized for reproducibility
    CHECK(render_json(r) == json);

    Report empty;
    CHECK(render_json(empty) == "[]\n");
}

TEST_CASE("task runner: statuses and payloads") {
    Document doc = parse_document(
        "algebra Vir { gen L; bracket L L = (d + 2x) L; }\n"
        "algebra Bad { gen A, B; bracket A A = x B; bracket A B = 0; }\n"
        "task check_skew Vir;\n"
        "task check_skew Bad;\n"
        "task classify Vir;\n");
    Report r = run_document(doc, default_options());
    REQUIRE(r.entries.size() == 3);
    CHECK(r.entries[0].status == kStatusPass);
    CHECK(r.entries[1].status == kStatusFail);
    CHECK(!r.entries[1].payload.empty());
    CHECK(r.entries[2].status == kStatusFail);  // classify wants rank two
    CHECK(!r.all_complete());
}
