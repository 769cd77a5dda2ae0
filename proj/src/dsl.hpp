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

#include <variant>

#include "extension.hpp"

namespace lcac {

enum class TaskKind {
    check_skew,
    check_jacobi,
    check_module,
    check_cocycle,
    classify,
    reduce,
    annihilation_table,
    center,
};

struct ParamDecl {
    std::vector<std::string> names;
};

struct AlgebraDecl {
    std::string name;
    AlgebraPresentation pres;
    // bracket statements as written, for faithful serialization
    std::vector<std::pair<std::pair<size_t, size_t>, std::vector<Polynomial>>> brackets;
};

struct ModuleDecl {
    std::string name;
    std::string algebra;
    bool torsion = false;
    Rational torsion_u;
    std::optional<FreeModulePresentation> free_mod;
    std::optional<TorsionModule> torsion_mod;
    std::vector<std::pair<std::pair<size_t, size_t>, std::vector<Polynomial>>> acts;
};

struct CocycleDecl {
    std::string name;
    std::string algebra;
    std::string module;
    CocycleData data;
};

struct TaskDecl {
    TaskKind kind;
    std::string target;
    std::string shift_gen;  // reduce only
    int direction = -1;     // reduce only; -1 matches B~ = B - g(d) v
};

using Decl = std::variant<ParamDecl, AlgebraDecl, ModuleDecl, CocycleDecl, TaskDecl>;

struct Document {
    RegistryPtr reg;
    std::vector<Decl> decls;

    const AlgebraDecl* find_algebra(const std::string& name) const;
    const ModuleDecl* find_module(const std::string& name) const;
    const CocycleDecl* find_cocycle(const std::string& name) const;
};

/// Recursive-descent parse of the .lca format. Throws parse_error with
/// "line:col: message" diagnostics.
Document parse_document(const std::string& text);

/// Canonical rendering; parses back to an equal document, and is a fixed
/// point of parse-then-serialize.
std::string serialize_document(const Document& doc);

std::string task_name(const TaskDecl& t);

}  // namespace lcac
