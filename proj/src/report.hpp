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

#include <cstdint>
#include <string>
#include <vector>

namespace lcac {

// Task outcome vocabulary. "fail" is the only incomplete status;
// "no-reduction" and "solution-space" are completed results.
inline constexpr const char* kStatusPass = "pass";
inline constexpr const char* kStatusFail = "fail";
inline constexpr const char* kStatusNoReduction = "no-reduction";
inline constexpr const char* kStatusSolutionSpace = "solution-space";

struct ReportEntry {
    std::string task;
    std::string status;
    std::vector<std::string> payload;
    int64_t millis = 0;
};

struct Report {
    std::vector<ReportEntry> entries;

    bool all_complete() const {
        for (const auto& e : entries)
            if (e.status == kStatusFail) return false;
        return true;
    }
};

std::string render_text(const Report& r);

/// One JSON array of {task, status, payload, millis}. Timings are emitted as
/// 0 so the bytes are reproducible run to run; the text rendering carries
/// the measured values.
std::string render_json(const Report& r);

}  // namespace lcac
