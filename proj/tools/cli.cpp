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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "holotoric/phase_partition.hpp"
#include "holotoric/render.hpp"
#include "holotoric/spin_model.hpp"
#include "holotoric/statevec.hpp"
#include "holotoric/statevec_io.hpp"
#include "holotoric/toric.hpp"

namespace holotoric::cli {

namespace {

// Thrown for flag combinations CLI11 cannot express; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GateFlags {
  std::optional<double> omega_i, omega_j, j, omega, omega1;

  void attach(CLI::App& app, bool required) {
    auto* a = app.add_option("--omega-i", omega_i, "transition angular frequency of spin i");
    auto* b = app.add_option("--omega-j", omega_j, "transition angular frequency of spin j");
    auto* c = app.add_option("--j", j, "scalar coupling J");
    auto* d = app.add_option("--omega", omega, "angular frequency of the rotating field");
    auto* e = app.add_option("--omega1", omega1, "amplitude of the rotating field");
    for (auto* o : {a, b, c, d, e}) o->required(required);
  }

  bool any() const { return omega_i || omega_j || j || omega || omega1; }
  bool all() const { return omega_i && omega_j && j && omega && omega1; }

  BerryPhaseResultd phases() const {
    return berry_phases(PhysicalParamsd::strict(*omega_i, *omega_j, *j, *omega, *omega1));
  }
};

StateVectord load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_state(in);
}

void print_gate(std::ostream& out, const BerryPhaseResultd& r, bool json) {
  const std::pair<const char*, double> fields[] = {
      {"cos_theta_plus", r.cos_theta_plus}, {"cos_theta_minus", r.cos_theta_minus},
      {"gamma_plus", r.gamma_plus},         {"gamma_minus", r.gamma_minus},
      {"shift", r.shift},                   {"phi1", r.phi_1},
      {"phi2", r.phi_2}};
  if (json) {
    out << "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
      out << (first ? "" : ", ") << '"' << k << "\": " << format_real(v);
      first = false;
    }
    out << "}\n";
  } else {
    for (const auto& [k, v] : fields) out << k << '=' << format_real(v) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomic controlled-phase gate and (CP^1)^n toric structure", "holotoric"};
  app.require_subcommand(1);

  // gate
  auto* gate = app.add_subcommand("gate", "Berry phases and gate phases for a spin system");
  GateFlags gate_flags;
  gate_flags.attach(*gate, true);
  bool gate_json = false;
  gate->add_flag("--json", gate_json, "print a JSON object");

  // apply
  auto* apply = app.add_subcommand("apply", "apply the gate to a state and print it");
  std::optional<int> apply_n;
  int apply_control = 0;
  int apply_target = 0;
  std::optional<double> apply_phi1;
  std::string apply_input;
  apply->add_option("--n", apply_n, "qubit count of the uniform input state");
  apply->add_option("--control", apply_control, "control qubit (1-based)")->required();
  apply->add_option("--target", apply_target, "target qubit (1-based)")->required();
  auto* apply_phi1_opt = apply->add_option("--phi1", apply_phi1, "gate phase phi1 (phi2 = -phi1)");
  apply->add_option("--input", apply_input, "read the input state from a file");
  GateFlags apply_gate_flags;
  apply_gate_flags.attach(*apply, false);
  for (const char* name : {"--omega-i", "--omega-j", "--j", "--omega", "--omega1"}) {
    apply_phi1_opt->excludes(apply->get_option(name));
  }

  // concurrence
  auto* conc = app.add_subcommand("concurrence", "two-qubit concurrence");
  std::string conc_input;
  std::optional<double> conc_phi1;
  auto* conc_in = conc->add_option("--input", conc_input, "two-qubit state file");
  auto* conc_phi = conc->add_option("--phi1", conc_phi1, "gate phase on the uniform state");
  conc_in->excludes(conc_phi);
  conc->require_option(1);

  // partition
  auto* part = app.add_subcommand("partition", "phase classes of the n-cube");
  int part_n = 0;
  int part_control = 0;
  int part_target = 0;
  bool part_check = false;
  part->add_option("--n", part_n, "qubit count")->required();
  part->add_option("--control", part_control, "control qubit (1-based)")->required();
  part->add_option("--target", part_target, "target qubit (1-based)")->required();
  part->add_flag("--check-hypercube", part_check, "verify both classes are Q_{n-1}");

  // fan
  auto* fan = app.add_subcommand("fan", "charts, fan and moment polytope of (CP^1)^n");
  int fan_n = 0;
  fan->add_option("--n", fan_n, "number of CP^1 factors")->required();

  // render
  auto* render = app.add_subcommand("render", "draw the partition as SVG or DOT");
  int render_n = 0;
  int render_control = 0;
  int render_target = 0;
  std::string render_format;
  std::string render_out;
  render->add_option("--n", render_n, "qubit count")->required();
  render->add_option("--control", render_control, "control qubit (1-based)")->required();
  render->add_option("--target", render_target, "target qubit (1-based)")->required();
  render->add_option("--format", render_format, "svg or dot")
      ->required()
      ->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--out", render_out, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gate) {
      print_gate(out, gate_flags.phases(), gate_json);
    } else if (*apply) {
      DiagonalTwoQubitGated g = DiagonalTwoQubitGated::identity();
      if (apply_phi1) {
        g = DiagonalTwoQubitGated::from_phases(*apply_phi1, -*apply_phi1);
      } else if (apply_gate_flags.all()) {
        g = cphase_gate(apply_gate_flags.phases());
      } else {
        throw UsageError(apply_gate_flags.any()
                             ? "apply: all five gate flags are needed without --phi1"
                             : "apply: give --phi1 or the gate flags");
      }
      std::optional<StateVectord> state;
      if (!apply_input.empty()) {
        state = load_state(apply_input);
        if (apply_n && *apply_n != state->n_qubits()) {
          throw InvalidArgument("--n does not match the qubit count of --input");
        }
      } else if (apply_n) {
        state = uniform_superposition<double>(*apply_n);
      } else {
        throw UsageError("apply: give --n or --input");
      }
      write_state(out, apply_cphase(*state, g, GatePlacement(apply_control, apply_target)));
    } else if (*conc) {
      double c = 0;
      if (conc_phi1) {
        const auto g = DiagonalTwoQubitGated::from_phases(*conc_phi1, -*conc_phi1);
        c = concurrence(apply_cphase(uniform_superposition<double>(2), g, GatePlacement(1, 2)));
      } else {
        c = concurrence(load_state(conc_input));
      }
      out << format_real(c) << '\n';
    } else if (*part) {
      const auto p = partition_vertices(part_n, GatePlacement(part_control, part_target));
      write_partition(out, p);
      if (part_check) {
        for (auto [which, name] : {std::pair{PhaseClass::kPhi1, "phi1"},
                                   std::pair{PhaseClass::kPhi2, "phi2"}}) {
          const auto graph = class_graph(p, which);
          const auto check = is_hypercube_isomorphic(graph);
          out << "hypercube_" << name << '=' << (check.isomorphic ? "true" : "false")
              << " Q" << (part_n - 1) << " witness=drop-bit-" << p.placement.target();
          if (!check.isomorphic) out << " failure=\"" << check.failure << '"';
          out << '\n';
        }
        const auto s = intersection_summary(p);
        out << "shared_vertices=" << s.shared_vertices << '\n'
            << "ambient_edges=" << s.ambient_edges << '\n'
            << "crossing_edges=" << s.crossing_edges << '\n';
      }
    } else if (*fan) {
      write_toric_summary(out, fan_n);
    } else if (*render) {
      const GatePlacement placement(render_control, render_target);
      const auto p = partition_vertices(render_n, placement);
      const std::string text = render_format == "svg"
                                   ? render_partition_svg(p, RenderSpec::defaults(render_n, placement))
                                   : render_partition_dot(p);
      std::ofstream file(render_out, std::ios::binary);
      if (!file) throw Error("cannot write " + render_out);
      file << text;
      if (!file.flush()) throw Error("failed writing " + render_out);
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace holotoric::cli
