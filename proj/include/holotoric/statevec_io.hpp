// Copyright 2026 The holotoric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include "holotoric/statevec.hpp"

namespace holotoric {

/// Writes `n=<int>` followed by one `<bitstring> <re> <im>` line per basis
/// index, floats with 17 significant digits.
void write_state(std::ostream& os, const StateVectord& state);
std::string format_state(const StateVectord& state);

/// Parses the format produced by write_state. Lines may come in any order but
/// every basis index must appear exactly once.
StateVectord read_state(std::istream& is);

/// printf("%.17g") rendering shared by every text output.
std::string format_real(double value);

}  // namespace holotoric
