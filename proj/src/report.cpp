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

#include "report.hpp"

#include <sstream>

#include "json.hpp"

namespace lcac {

std::string render_text(const Report& r) {
    std::ostringstream os;
    size_t failed = 0;
    for (const auto& e : r.entries) {
        os << "[" << e.status << "] " << e.task << " (" << e.millis << " ms)\n";
        for (const auto& line : e.payload) os << "    " << line << "\n";
        if (e.status == kStatusFail) ++failed;
    }
    os << r.entries.size() << " task(s), " << failed << " failed\n";
    return os.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json obj;
        obj["task"] = e.task;
        obj["status"] = e.status;
        obj["payload"] = e.payload;
        obj["millis"] = 0;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace lcac
