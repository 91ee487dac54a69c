// Copyright 2026 The Privsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "privsum/auditor.hpp"
#include "privsum/fixtures.hpp"
#include "privsum/protocol.hpp"
#include "privsum/sweep.hpp"

namespace py = pybind11;

namespace {

privsum::ProtocolInstance make_instance(int L, int n, int n1, int T,
                                        const std::string& custom_path) {
  privsum::ProtocolConfig config{L, n, n1, T};
  config.validate();
  if (custom_path.empty()) return privsum::build_achievability(config);
  return privsum::load_custom_file(custom_path, config);
}

std::string audit_json(int L, int n, int n1, int T,
                       const std::string& custom_path, int max_seed_bits,
                       int threads) {
  const privsum::AuditReport report = privsum::audit(
      make_instance(L, n, n1, T, custom_path), {max_seed_bits, threads});
  return report.to_json().dump();
}

std::string sweep_csv(const std::vector<int>& Ls, const std::vector<int>& ns,
                      const std::vector<int>& n1s, const std::vector<int>& Ts,
                      int max_seed_bits, int threads) {
  const auto grid = privsum::expand_sweep({Ls, ns, n1s, Ts});
  return privsum::run_sweep(grid, {max_seed_bits, threads}).csv;
}

py::dict run_protocol(int L, int n, int n1, const std::vector<std::string>& S,
                      const std::string& U) {
  const privsum::ProtocolInstance inst =
      privsum::build_achievability({L, n, n1, 0});
  std::vector<privsum::BitVec> seqs;
  for (const std::string& s : S) {
    seqs.push_back(privsum::BitVec::from_string(s));
  }
  const privsum::Transcript t =
      privsum::run(inst, seqs, privsum::BitVec::from_string(U));
  py::dict out;
  std::vector<std::string> keys, messages;
  for (const auto& k : t.K) keys.push_back(k.to_string());
  for (const auto& x : t.X) messages.push_back(x.to_string());
  out["K"] = keys;
  out["X"] = messages;
  out["sigma_hat"] = t.sigma_hat.to_string();
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : privsum::builtin_fixtures()) names.push_back(f.name);
  return names;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact information-leakage auditing for XOR-sum aggregation "
            "protocols";

  m.def("audit_json", &audit_json, py::arg("L"), py::arg("n"), py::arg("n1"),
        py::arg("T"), py::arg("custom_path") = std::string(),
        py::arg("max_seed_bits") = 24, py::arg("threads") = 0,
        "Audit one instance; returns the JSON report as a string.");

  m.def("sweep_csv", &sweep_csv, py::arg("L"), py::arg("n"),
        py::arg("n1") = std::vector<int>{}, py::arg("T") = std::vector<int>{},
        py::arg("max_seed_bits") = 24, py::arg("threads") = 0,
        "Audit a parameter grid; returns the CSV table as a string.");

  m.def("run_protocol", &run_protocol, py::arg("L"), py::arg("n"),
        py::arg("n1"), py::arg("S"), py::arg("U"),
        "Evaluate the built-in construction once. Sequences and the global "
        "randomness are position-0-first bit strings.");

  m.def("fixture_names", &fixture_names,
        "Names of the shipped deliberately broken protocols.");
}
