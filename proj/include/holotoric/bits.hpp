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

#include <cstdint>
#include <string>
#include <string_view>

#include "holotoric/errors.hpp"

namespace holotoric {

/// Basis index of an n-qubit computational basis state. Qubit 1 is the most
/// significant bit, so index 0b011 with n = 3 is the ket |011>.
using BasisIndex = std::uint64_t;

/// Mask selecting qubit `qubit` (1-based) inside an n-bit index.
constexpr BasisIndex qubit_mask(int n, int qubit) {
  return BasisIndex{1} << (n - qubit);
}

constexpr int qubit_bit(BasisIndex index, int n, int qubit) {
  return static_cast<int>((index >> (n - qubit)) & 1U);
}

inline std::string to_bitstring(BasisIndex index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 1; q <= n; ++q) {
    if (qubit_bit(index, n, q)) s[static_cast<std::size_t>(q - 1)] = '1';
  }
  return s;
}

inline BasisIndex parse_bitstring(std::string_view text) {
  if (text.empty() || text.size() > 63) throw ParseError("bad bit string length");
  BasisIndex v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit string must contain only 0 and 1");
    v = (v << 1) | static_cast<BasisIndex>(c - '0');
  }
  return v;
}

}  // namespace holotoric
