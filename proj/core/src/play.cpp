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

#include "omegagames/play.hpp"

namespace omega {

PrioritySet
Lasso::inf_set(const Arena& a) const
{
    PrioritySet s;
    for (auto v : loop) s.insert(a.priority(v));
    return s;
}

bool
is_valid_lasso(const Arena& a, const Lasso& l)
{
    if (l.loop.empty()) return false;
    std::vector<VertexIndex> seq = l.prefix;
    seq.insert(seq.end(), l.loop.begin(), l.loop.end());
    seq.push_back(l.loop.front());
    for (auto v : seq)
        if (v >= a.size()) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!a.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

bool
InfSetDescriptor::contains(const Priority& p) const
{
    if (finite.count(p)) return true;
    return cofinite && p.is_natural() && !excluded.count(p);
}

std::string
to_string(const InfSetDescriptor& d)
{
    if (!d.cofinite) return to_string(d.finite);
    std::string s = "(N \\ " + to_string(d.excluded) + ")";
    if (!d.finite.empty()) s = to_string(d.finite) + " u " + s;
    return s;
}

} // namespace omega
