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

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "lcac.h"

namespace {

struct DocHandle {
    lcac_document* doc = nullptr;
    ~DocHandle() { lcac_document_free(doc); }
};

struct StrHandle {
    char* s = nullptr;
    ~StrHandle() { lcac_string_free(s); }
};

int load(const std::string& path, DocHandle& h) {
    StrHandle err;
    int rc = lcac_parse_file(path.c_str(), &h.doc, &err.s);
    if (rc != LCAC_OK) {
        std::fprintf(stderr, "lcac: %s: %s\n", path.c_str(), err.s ? err.s : "parse failed");
        return rc == LCAC_ERR_IO ? 2 : 2;
    }
    return 0;
}

int finish(int rc, const StrHandle& report) {
    if (rc == LCAC_OK || rc == LCAC_ERR_TASK_FAILED) {
        if (report.s) std::fputs(report.s, stdout);
        return rc == LCAC_OK ? 0 : 1;
    }
    if (report.s) std::fprintf(stderr, "lcac: %s\n", report.s);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcac - exact calculus for finite Lie conformal algebras"};
    app.require_subcommand(1);

    lcac_options opts;
    lcac_options_init(&opts);
    bool json = false;
    app.add_option("--degree-bound", opts.degree_bound, "degree bound for linear searches (default 10)");
    app.add_option("--max-index", opts.max_index, "index bound for annihilation tables (default 10)");
    app.add_option("--seed", opts.seed, "seed for randomized property sampling");
    app.add_flag("--json", json, "emit a machine-readable report");

    std::string file, algebra, extension, shift, direction = "minus";

    CLI::App* check = app.add_subcommand("check", "run the tasks of a document");
    check->add_option("file", file, "input .lca document")->required();

    CLI::App* classify = app.add_subcommand("classify", "classify rank-one actions of an algebra");
    classify->add_option("file", file)->required();
    classify->add_option("--algebra", algebra, "algebra name")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "try to split an abelian extension by a basis change");
    reduce->add_option("file", file)->required();
    reduce->add_option("--extension", extension, "extension (algebra or cocycle) name")->required();
    reduce->add_option("--shift", shift, "generator that absorbs g(d) v")->required();
    reduce->add_option("--direction", direction, "plus | minus (default minus)")
        ->check(CLI::IsMember({"plus", "minus"}));

    CLI::App* anntab = app.add_subcommand("annihilation-table", "print annihilation Lie algebra brackets");
    anntab->add_option("file", file)->required();
    anntab->add_option("--algebra", algebra, "algebra name")->required();

    CLI::App* paper = app.add_subcommand("paper-verify", "run the built-in verification suite");

    for (CLI::App* sub : {check, classify, reduce, anntab, paper}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    opts.json = json ? 1 : 0;

    StrHandle report;
    if (paper->parsed()) return finish(lcac_paper_verify(&opts, &report.s), report);

    DocHandle doc;
    if (int rc = load(file, doc)) return rc;

    if (check->parsed()) return finish(lcac_run_tasks(doc.doc, &opts, &report.s), report);
    if (classify->parsed()) return finish(lcac_classify(doc.doc, algebra.c_str(), &opts, &report.s), report);
    if (reduce->parsed())
        return finish(lcac_reduce(doc.doc, extension.c_str(), shift.c_str(), direction == "plus" ? 1 : -1,
                                  &opts, &report.s),
                      report);
    if (anntab->parsed())
        return finish(lcac_annihilation_table(doc.doc, algebra.c_str(), &opts, &report.s), report);
    return 2;
}
