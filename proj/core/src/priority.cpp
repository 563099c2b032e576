/*
 * Copyright 2026 The omegagames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "omegagames/priority.hpp"

#include <sstream>

namespace omega {

std::string
to_string(const Priority& p)
{
    if (p.limit == 0) return std::to_string(p.offset);
    std::string s = "w";
    if (p.limit > 1) s += "*" + std::to_string(p.limit);
    if (p.offset > 0) s += "+" + std::to_string(p.offset);
    return s;
}

std::string
to_string(const PrioritySet& s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& p : s) {
        if (!first) out << ',';
        out << to_string(p);
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace omega
