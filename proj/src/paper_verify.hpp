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

#include "tasks.hpp"

namespace lcac {

/// The built-in reproduction document: the full algebra/module corpus with
/// its axiom-check tasks, compiled into the binary so `paper-verify` needs
/// no external files.
const char* builtin_corpus();

/// Runs the whole verification suite: the corpus document's tasks plus the
/// annihilation, classification, morphism, extension and representation
/// checks. All checks are exact; the RNG seed only varies the sampled
/// instances of the extension sweeps.
Report paper_verify(const Options& opts);

}  // namespace lcac
