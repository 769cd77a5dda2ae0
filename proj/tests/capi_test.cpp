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

#include <string>

#include "doctest.h"
#include "lcac.h"

namespace {

struct Doc {
    lcac_document* d = nullptr;
    ~Doc() { lcac_document_free(d); }
};

struct Str {
    char* s = nullptr;
    ~Str() { lcac_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

constexpr const char* kVir = "algebra Vir { gen L; bracket L L = (d + 2x) L; }\ntask check_jacobi Vir;\n";

}  // namespace

TEST_CASE("capi: parse, run, serialize") {
    Doc doc;
    Str err;
    REQUIRE(lcac_parse_string(kVir, &doc.d, &err.s) == LCAC_OK);

    lcac_options opts;
    lcac_options_init(&opts);
    Str report;
    CHECK(lcac_run_tasks(doc.d, &opts, &report.s) == LCAC_OK);
    CHECK(report.str().find("[pass] check_jacobi Vir") != std::string::npos);

    Str text;
    text.s = lcac_document_serialize(doc.d);
    Doc doc2;
    REQUIRE(lcac_parse_string(text.s, &doc2.d, nullptr) == LCAC_OK);
    Str text2;
    text2.s = lcac_document_serialize(doc2.d);
    CHECK(text.str() == text2.str());
}

TEST_CASE("capi: parse errors carry diagnostics") {
    Doc doc;
    Str err;
    CHECK(lcac_parse_string("algebra { }", &doc.d, &err.s) == LCAC_ERR_PARSE);
    CHECK(doc.d == nullptr);
    CHECK(err.str().find("1:") == 0);
}

TEST_CASE("capi: task failure status") {
    Doc doc;
    CHECK(lcac_parse_string("algebra Bad { gen A, B; bracket A A = 0; bracket A B = d B; }\n"
                            "task check_jacobi Bad;\n",
                            &doc.d, nullptr) == LCAC_OK);
    lcac_options opts;
    lcac_options_init(&opts);
    Str report;
    CHECK(lcac_run_tasks(doc.d, &opts, &report.s) == LCAC_ERR_TASK_FAILED);
    CHECK(report.str().find("[fail]") != std::string::npos);
}

TEST_CASE("capi: classify and annihilation-table commands") {
    Doc doc;
    CHECK(lcac_parse_string("algebra W10 { gen A, B; bracket A A = (d + 2x) A; bracket A B = (d + x) B; }\n",
                            &doc.d, nullptr) == LCAC_OK);
    lcac_options opts;
    lcac_options_init(&opts);
    opts.degree_bound = 6;

    Str rep;
    CHECK(lcac_classify(doc.d, "W10", &opts, &rep.s) == LCAC_OK);
    CHECK(rep.str().find("solution-space") != std::string::npos);
    CHECK(rep.str().find("family (ii)") != std::string::npos);

    Str bad;
    CHECK(lcac_classify(doc.d, "Nope", &opts, &bad.s) == LCAC_ERR_INVALID);

    opts.max_index = 2;
    Str tab;
    CHECK(lcac_annihilation_table(doc.d, "W10", &opts, &tab.s) == LCAC_OK);
    CHECK(tab.str().find("[A(1), A(1)] = ") != std::string::npos);
}

TEST_CASE("capi: reduce over a cocycle declaration") {
    const char* src =
        "algebra H { gen A, B; bracket A A = (d + 2x) A; bracket A B = 0; }\n"
        "module V over H { basis v; act A v = 0; act B v = (x^2 + 1) v; }\n"
        "cocycle C over H with V { q1 = (2*x + d)*(d^2 + 1); q2 = -(x^2 + 1)*((x + d)^2 + 1); }\n";
    Doc doc;
    Str err;
    REQUIRE(lcac_parse_string(src, &doc.d, &err.s) == LCAC_OK);
    lcac_options opts;
    lcac_options_init(&opts);
    Str rep;
    CHECK(lcac_reduce(doc.d, "C", "A", 1, &opts, &rep.s) == LCAC_OK);
    CHECK(rep.str().find("g = d^2 + 1") != std::string::npos);
}

TEST_CASE("capi: json reports are byte-identical at a fixed seed") {
    lcac_options opts;
    lcac_options_init(&opts);
    opts.json = 1;
    opts.seed = 42;

    Doc doc;
    REQUIRE(lcac_parse_string(kVir, &doc.d, nullptr) == LCAC_OK);
    Str r1, r2;
    CHECK(lcac_run_tasks(doc.d, &opts, &r1.s) == LCAC_OK);
    CHECK(lcac_run_tasks(doc.d, &opts, &r2.s) == LCAC_OK);
    CHECK(r1.str() == r2.str());
    CHECK(r1.str().find("\"millis\": 0") != std::string::npos);
}

TEST_CASE("capi: io errors and null arguments") {
    Doc doc;
    Str err;
    CHECK(lcac_parse_file("/nonexistent/file.lca", &doc.d, &err.s) == LCAC_ERR_IO);
    CHECK(lcac_parse_string(nullptr, &doc.d, nullptr) == LCAC_ERR_INVALID);
    CHECK(lcac_run_tasks(nullptr, nullptr, nullptr) == LCAC_ERR_INVALID);
}
