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

#pragma once

#include "dsl.hpp"
#include "report.hpp"

namespace lcac {

struct Options {
    unsigned degree_bound = 10;
    unsigned max_index = 10;
    uint64_t seed = 1;
    bool json = false;
};

/// Defaults, with LCAC_DEGREE_BOUND honored as a degree-bound override.
Options default_options();

/// Executes the document's tasks in declaration order.
Report run_document(const Document& doc, const Options& opts);

/// Targeted commands that bypass the document's own task list.
Report run_classify(const Document& doc, const std::string& algebra, const Options& opts);
Report run_reduce(const Document& doc, const std::string& extension, const std::string& shift_gen,
                  int direction, const Options& opts);
Report run_annihilation_table(const Document& doc, const std::string& algebra, const Options& opts);

std::string render_family(const ActionFamily& fam, const std::vector<std::string>& gens);

}  // namespace lcac
