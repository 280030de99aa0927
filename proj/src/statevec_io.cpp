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

#include "holotoric/statevec_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace holotoric {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_state(std::ostream& os, const StateVectord& state) {
  const int n = state.n_qubits();
  os << "n=" << n << '\n';
  for (Eigen::Index x = 0; x < state.dimension(); ++x) {
    const auto a = state.amplitudes()(x);
    os << to_bitstring(static_cast<BasisIndex>(x), n) << ' ' << format_real(a.real()) << ' '
       << format_real(a.imag()) << '\n';
  }
}

std::string format_state(const StateVectord& state) {
  std::ostringstream os;
  write_state(os, state);
  return os.str();
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

StateVectord read_state(std::istream& is) {
  std::string line;
  while (std::getline(is, line) && blank(line)) {
  }
  if (line.rfind("n=", 0) != 0) throw ParseError("state must start with n=<int>");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (!blank(line.substr(2 + used))) throw ParseError("trailing text after n=");
  } catch (const std::logic_error&) {
    throw ParseError("bad qubit count: " + line);
  }
  if (n < 1 || n > kMaxStateQubits) throw ParseError("qubit count out of range");

  const std::size_t dim = std::size_t{1} << n;
  StateVectord::Amplitudes amps(static_cast<Eigen::Index>(dim));
  std::vector<bool> seen(dim, false);
  std::size_t count = 0;
  while (std::getline(is, line)) {
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string bits;
    double re = 0;
    double im = 0;
    if (!(ls >> bits >> re >> im)) throw ParseError("bad amplitude line: " + line);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing text on amplitude line: " + line);
    if (bits.size() != static_cast<std::size_t>(n)) throw ParseError("bit string length != n");
    const BasisIndex x = parse_bitstring(bits);
    if (seen[x]) throw ParseError("duplicate basis state " + bits);
    seen[x] = true;
    amps(static_cast<Eigen::Index>(x)) = {re, im};
    ++count;
  }
  if (count != dim) throw ParseError("expected " + std::to_string(dim) + " amplitude lines");
  return StateVectord(n, std::move(amps));
}

}  // namespace holotoric
