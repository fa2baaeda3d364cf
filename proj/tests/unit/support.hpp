/*
   Copyright 2026 The Skyburst Authors

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

#include <string>
#include <vector>

#include "skyburst/skyburst.hpp"

namespace skyburst::test {

inline Rational q(const char* text) { return Rational::parse(text); }
inline Omega w(const char* text) { return Omega::parse(text); }

/// Coefficients, lowest degree first, as "p/q" strings.
inline std::vector<std::string> strs(const Polynomial<Rational>& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

}  // namespace skyburst::test
