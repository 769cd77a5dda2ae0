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

#include "lcac.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "paper_verify.hpp"

using namespace lcac;

struct lcac_document {
    Document doc;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_msg(char** slot, const std::string& msg) {
    if (slot) *slot = dup_string(msg);
}

Options to_options(const lcac_options* opts) {
    Options o = default_options();
    if (!opts) return o;
    if (opts->degree_bound >= 0) o.degree_bound = unsigned(opts->degree_bound);
    if (opts->max_index >= 0) o.max_index = unsigned(opts->max_index);
    o.seed = opts->seed;
    o.json = opts->json != 0;
    return o;
}

int emit(const Report& report, const Options& o, char** out) {
    if (out) *out = dup_string(o.json ? render_json(report) : render_text(report));
    return report.all_complete() ? LCAC_OK : LCAC_ERR_TASK_FAILED;
}

int classify_errc(errc code) {
    switch (code) {
        case errc::parse_error:
            return LCAC_ERR_PARSE;
        case errc::io_error:
            return LCAC_ERR_IO;
        case errc::unresolved_reference:
        case errc::name_clash:
        case errc::invalid_argument:
        case errc::unknown_table_row:
        case errc::setting_mismatch:
            return LCAC_ERR_INVALID;
        default:
            return LCAC_ERR_INTERNAL;
    }
}

template <class Fn>
int guarded(char** errmsg, Fn&& fn) {
    try {
        return fn();
    } catch (const error& err) {
        set_msg(errmsg, err.what());
        return classify_errc(err.code());
    } catch (const std::exception& err) {
        set_msg(errmsg, err.what());
        return LCAC_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

void lcac_options_init(lcac_options* opts) {
    if (!opts) return;
    opts->degree_bound = -1;
    opts->max_index = -1;
    opts->seed = 1;
    opts->json = 0;
}

int lcac_parse_string(const char* text, lcac_document** out, char** errmsg) {
    if (!text || !out) {
        set_msg(errmsg, "null argument");
        return LCAC_ERR_INVALID;
    }
    *out = nullptr;
    return guarded(errmsg, [&] {
        auto* doc = new lcac_document{parse_document(text)};
        *out = doc;
        return LCAC_OK;
    });
}

int lcac_parse_file(const char* path, lcac_document** out, char** errmsg) {
    if (!path || !out) {
        set_msg(errmsg, "null argument");
        return LCAC_ERR_INVALID;
    }
    *out = nullptr;
    std::ifstream in(path);
    if (!in) {
        set_msg(errmsg, std::string("cannot open '") + path + "'");
        return LCAC_ERR_IO;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return lcac_parse_string(buf.str().c_str(), out, errmsg);
}

void lcac_document_free(lcac_document* doc) { delete doc; }

char* lcac_document_serialize(const lcac_document* doc) {
    if (!doc) return nullptr;
    return dup_string(serialize_document(doc->doc));
}

int lcac_run_tasks(const lcac_document* doc, const lcac_options* opts, char** report) {
    if (!doc) return LCAC_ERR_INVALID;
    return guarded(report, [&] {
        Options o = to_options(opts);
        return emit(run_document(doc->doc, o), o, report);
    });
}

int lcac_classify(const lcac_document* doc, const char* algebra, const lcac_options* opts, char** report) {
    if (!doc || !algebra) return LCAC_ERR_INVALID;
    return guarded(report, [&] {
        if (!doc->doc.find_algebra(algebra))
            fail(errc::unresolved_reference, std::string("unknown algebra '") + algebra + "'");
        Options o = to_options(opts);
        return emit(run_classify(doc->doc, algebra, o), o, report);
    });
}

int lcac_reduce(const lcac_document* doc, const char* extension, const char* shift_gen, int direction,
                const lcac_options* opts, char** report) {
    if (!doc || !extension || !shift_gen) return LCAC_ERR_INVALID;
    return guarded(report, [&] {
        if (!doc->doc.find_algebra(extension) && !doc->doc.find_cocycle(extension))
            fail(errc::unresolved_reference, std::string("unknown extension '") + extension + "'");
        if (direction != 1 && direction != -1)
            fail(errc::invalid_argument, "direction must be +1 or -1");
        Options o = to_options(opts);
        return emit(run_reduce(doc->doc, extension, shift_gen, direction, o), o, report);
    });
}

int lcac_annihilation_table(const lcac_document* doc, const char* algebra, const lcac_options* opts,
                            char** report) {
    if (!doc || !algebra) return LCAC_ERR_INVALID;
    return guarded(report, [&] {
        if (!doc->doc.find_algebra(algebra))
            fail(errc::unresolved_reference, std::string("unknown algebra '") + algebra + "'");
        Options o = to_options(opts);
        return emit(run_annihilation_table(doc->doc, algebra, o), o, report);
    });
}

int lcac_paper_verify(const lcac_options* opts, char** report) {
    return guarded(report, [&] {
        Options o = to_options(opts);
        return emit(paper_verify(o), o, report);
    });
}

void lcac_string_free(char* s) { std::free(s); }

}  // extern "C"
