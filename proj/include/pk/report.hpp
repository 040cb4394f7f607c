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


#ifndef PK_REPORT_HPP
#define PK_REPORT_HPP

// Reports, schema "pk-report-v1". Keys keep insertion order and every list is produced in a
// canonical order, so identical input gives byte-identical output.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pk/io.hpp"

namespace pk::report {

inline constexpr std::string_view kReportSchema = "pk-report-v1";

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kResourceGuard = 3 };

struct Options {
  std::uint64_t max_enum = 1000000;
  bool timing = false;
};

struct Outcome {
  Json report;
  int exit_code = kPass;
};

Outcome validate(const io::Instance& inst, const Options& opt);
Outcome cohomology(const io::Instance& inst, const Options& opt);
Outcome decompose(const io::Instance& inst, const Options& opt);
Outcome classify(const io::Instance& inst, const Options& opt);

/// Loads the file and dispatches; input errors and resource guards become reports too.
Outcome run(std::string_view command, const std::string& path, const Options& opt);

}  // namespace pk::report

#endif  // PK_REPORT_HPP
