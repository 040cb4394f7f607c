/*
 * Copyright 2026 The pk Authors
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


#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "pk/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Partial Kummer theory on split algebras over cyclotomic fields"};
  app.require_subcommand(1);

  std::string file;
  std::string report_path;
  pk::report::Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the axioms, invariants, trace one and Galois coordinates"},
      {"cohomology", "torsion cocycle census and classes of the named cochains"},
      {"decompose", "eigenmodules Q_chi and their direct subsets"},
      {"classify", "decide whether the action is parametrized by a radical extension"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "instance file (pk-instance-v1)")->required();
    sub->add_option("--report", report_path, "write the JSON report here instead of stdout");
    sub->add_option("--max-enum", opt.max_enum, "bound on enumerated torsion cochains")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", opt.timing, "add wall time to the report");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pk::report::kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto out = pk::report::run(command, file, opt);
  const std::string text = out.report.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(report_path, std::ios::binary);
    if (!os) {
      std::cerr << "pk: cannot write " << report_path << "\n";
      return pk::report::kInputError;
    }
    os << text;
    std::cout << command << " " << file << ": " << out.report["status"].get<std::string>() << "\n";
  }
  if (out.report.contains("error")) std::cerr << "pk: " << out.report["error"].get<std::string>() << "\n";
  return out.exit_code;
}
