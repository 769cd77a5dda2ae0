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

#include "tasks.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "annihilation.hpp"

namespace lcac {

namespace {

std::string element_line(const std::vector<Polynomial>& elem, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < elem.size(); ++i) {
        if (elem[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << elem[i].str() << ") " << names[i];
    }
    if (first) os << "0";
    return os.str();
}

void payload_skew(ReportEntry& e, const std::vector<PairResidual>& rs, const std::vector<std::string>& gens) {
    for (const auto& r : rs)
        if (!expr_zero(r.res))
            e.payload.push_back("skew(" + gens[r.i] + "," + gens[r.j] + ") = " + element_line(r.res, gens));
}

void payload_jacobi(ReportEntry& e, const std::vector<TripleResidual>& rs, const std::vector<std::string>& gens) {
    for (const auto& r : rs)
        if (!expr_zero(r.res))
            e.payload.push_back("jacobi(" + gens[r.i] + "," + gens[r.j] + "," + gens[r.k] + ") = " +
                                element_line(r.res, gens));
}

const AlgebraDecl& need_algebra(const Document& doc, const std::string& name) {
    const AlgebraDecl* a = doc.find_algebra(name);
    if (!a) fail(errc::unresolved_reference, "unknown algebra '" + name + "'");
    return *a;
}

const ModuleDecl& need_module(const Document& doc, const std::string& name) {
    const ModuleDecl* m = doc.find_module(name);
    if (!m) fail(errc::unresolved_reference, "unknown module '" + name + "'");
    return *m;
}

ReportEntry exec_task(const Document& doc, const TaskDecl& task, const Options& opts) {
    ReportEntry entry;
    entry.task = task_name(task);
    entry.status = kStatusPass;
    switch (task.kind) {
        case TaskKind::check_skew: {
            const auto& a = need_algebra(doc, task.target);
            auto rs = check_skew(a.pres);
            if (!residuals_zero(rs)) entry.status = kStatusFail;
            payload_skew(entry, rs, a.pres.gens);
            break;
        }
        case TaskKind::check_jacobi: {
            const auto& a = need_algebra(doc, task.target);
            auto rs = check_jacobi(a.pres);
            if (!residuals_zero(rs)) entry.status = kStatusFail;
            payload_jacobi(entry, rs, a.pres.gens);
            break;
        }
        case TaskKind::check_module: {
            const auto& m = need_module(doc, task.target);
            if (m.torsion) {
                auto rs = check_module_axioms(*m.torsion_mod);
                if (!residuals_zero(rs)) entry.status = kStatusFail;
                for (const auto& r : rs)
                    if (!expr_zero(r.res)) {
                        const auto& gens = m.torsion_mod->algebra.gens;
                        std::ostringstream os;
                        os << "axiom(" << gens[r.i] << "," << gens[r.j] << ") nonzero matrix residual";
                        entry.payload.push_back(os.str());
                    }
            } else {
                auto rs = check_module_axioms(*m.free_mod);
                if (!residuals_zero(rs)) entry.status = kStatusFail;
                for (const auto& r : rs)
                    if (!expr_zero(r.res)) {
                        const auto& gens = m.free_mod->algebra.gens;
                        entry.payload.push_back("axiom(" + gens[r.i] + "," + gens[r.j] + ";" +
                                                m.free_mod->basis[r.k] + ") = " +
                                                element_line(r.res, m.free_mod->basis));
                    }
            }
            break;
        }
        case TaskKind::check_cocycle: {
            const CocycleDecl* c = doc.find_cocycle(task.target);
            if (!c) fail(errc::unresolved_reference, "unknown cocycle '" + task.target + "'");
            const auto& a = need_algebra(doc, c->algebra);
            const auto& m = need_module(doc, c->module);
            auto rs = check_cocycle(a.pres, *m.free_mod, c->data);
            if (!rs.zero()) entry.status = kStatusFail;
            AlgebraPresentation e = build_extension(a.pres, *m.free_mod, c->data);
            payload_skew(entry, rs.skew, e.gens);
            payload_jacobi(entry, rs.jacobi, e.gens);
            break;
        }
        case TaskKind::classify: {
            const auto& a = need_algebra(doc, task.target);
            auto fams = classify_rank_one(a.pres, opts.degree_bound);
            entry.status = kStatusSolutionSpace;
            for (const auto& f : fams) {
                entry.payload.push_back(render_family(f, a.pres.gens));
                if (!f.verified) entry.status = kStatusFail;
            }
            break;
        }
        case TaskKind::reduce: {
            const CocycleDecl* c = doc.find_cocycle(task.target);
            AlgebraPresentation e;
            if (c) {
                const auto& a = need_algebra(doc, c->algebra);
                const auto& m = need_module(doc, c->module);
                e = build_extension(a.pres, *m.free_mod, c->data);
            } else {
                e = need_algebra(doc, task.target).pres;
            }
            size_t target = SIZE_MAX;
            for (size_t i = 0; i < e.rank(); ++i)
                if (e.gens[i] == task.shift_gen) target = i;
            if (target == SIZE_MAX) fail(errc::unresolved_reference, "unknown generator '" + task.shift_gen + "'");
            ReduceOutcome rr = reduce_extension(e, {target, task.direction}, opts.degree_bound);
            if (rr.no_reduction()) {
                entry.status = kStatusNoReduction;
                entry.payload.push_back("degree_bound = " + std::to_string(rr.degree_bound));
            } else {
                entry.payload.push_back("g = " + rr.g->str());
                for (size_t i = 0; i < e.rank(); ++i)
                    for (size_t j = 0; j < e.rank(); ++j)
                        entry.payload.push_back("[" + e.gens[i] + " x " + e.gens[j] + "] = " +
                                                element_line(rr.reduced->structure[i][j], e.gens));
            }
            break;
        }
        case TaskKind::annihilation_table: {
            const auto& a = need_algebra(doc, task.target);
            for (size_t i = 0; i < a.pres.rank(); ++i)
                for (size_t j = 0; j < a.pres.rank(); ++j)
                    for (unsigned mi = 0; mi <= opts.max_index; ++mi)
                        for (unsigned ni = 0; ni <= opts.max_index; ++ni) {
                            IndexedElement br = ann_bracket(a.pres, indexed_gen(i, mi, a.pres.reg),
                                                            indexed_gen(j, ni, a.pres.reg));
                            entry.payload.push_back("[" + a.pres.gens[i] + "(" + std::to_string(mi) + "), " +
                                                    a.pres.gens[j] + "(" + std::to_string(ni) +
                                                    ")] = " + indexed_str(br, a.pres));
                        }
            break;
        }
        case TaskKind::center: {
            const auto& a = need_algebra(doc, task.target);
            SolutionSpace sp = center_candidates(a.pres, opts.degree_bound);
            entry.status = kStatusSolutionSpace;
            entry.payload.push_back("dimension = " + std::to_string(sp.dimension()));
            for (const auto& vec : sp.nullspace)
                entry.payload.push_back("central: " +
                                        element_line(element_from_vector(a.pres, vec, opts.degree_bound),
                                                     a.pres.gens));
            break;
        }
    }
    return entry;
}

ReportEntry timed_task(const Document& doc, const TaskDecl& task, const Options& opts) {
    auto start = std::chrono::steady_clock::now();
    ReportEntry entry;
    try {
        entry = exec_task(doc, task, opts);
    } catch (const std::exception& err) {
        entry.task = task_name(task);
        entry.status = kStatusFail;
        entry.payload = {std::string("error: ") + err.what()};
    }
    entry.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return entry;
}

}  // namespace

Options default_options() {
    Options o;
    if (const char* env = std::getenv("LCAC_DEGREE_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) o.degree_bound = unsigned(v);
    }
    return o;
}

std::string render_family(const ActionFamily& fam, const std::vector<std::string>& gens) {
    std::ostringstream os;
    os << "family (" << fam.case_tag << "): ";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << "; ";
        const Polynomial& act = fam.module.action[i][0][0];
        os << gens[i] << ".v = ";
        if (act.is_zero())
            os << "0";
        else
            os << "(" << act.str() << ") v";
    }
    os << "; free:";
    if (fam.free_params.empty()) os << " none";
    for (const auto& p : fam.free_params) os << " " << p;
    os << (fam.verified ? "; verified" : "; NOT verified");
    if (!fam.note.empty()) os << "; " << fam.note;
    return os.str();
}

Report run_document(const Document& doc, const Options& opts) {
    Report r;
    for (const auto& d : doc.decls)
        if (const auto* t = std::get_if<TaskDecl>(&d)) r.entries.push_back(timed_task(doc, *t, opts));
    return r;
}

Report run_classify(const Document& doc, const std::string& algebra, const Options& opts) {
    TaskDecl t;
    t.kind = TaskKind::classify;
    t.target = algebra;
    Report r;
    r.entries.push_back(timed_task(doc, t, opts));
    return r;
}

Report run_reduce(const Document& doc, const std::string& extension, const std::string& shift_gen,
                  int direction, const Options& opts) {
    TaskDecl t;
    t.kind = TaskKind::reduce;
    t.target = extension;
    t.shift_gen = shift_gen;
    t.direction = direction;
    Report r;
    r.entries.push_back(timed_task(doc, t, opts));
    return r;
}

Report run_annihilation_table(const Document& doc, const std::string& algebra, const Options& opts) {
    TaskDecl t;
    t.kind = TaskKind::annihilation_table;
    t.target = algebra;
    Report r;
    r.entries.push_back(timed_task(doc, t, opts));
    return r;
}

}  // namespace lcac
