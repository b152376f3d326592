// Copyright 2026 The cbundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbundle/pipeline.hpp"

namespace cbundle::cli {

struct JobConfig {
  std::string command;
  std::string input;   // instance file, or a directory for batch
  std::uint64_t seed = 0;
  int samples = 25;
  int height_bound = 0;
  std::string out;     // report path (a directory for batch)
  bool json = false;   // print the report document on stdout
  bool real = true;
  bool svg = false;
  bool timings = false;
  int jobs = 0;        // batch workers, 0 = hardware concurrency
};

// Options for one command before instance-specific seeding.
AnalyzeOptions options_for(const JobConfig& cfg);

struct BatchRow {
  std::string name;
  int checks_passed = 0;
  int checks_total = 0;
  std::string status;
  std::string verdict;
  std::uint64_t seed = 0;
};

// Analyzes every *.json under dir in name order. Reports are written to
// out_dir when it is non-empty.
std::vector<BatchRow> run_batch(const std::filesystem::path& dir, const JobConfig& cfg, const std::string& out_dir);
std::string format_table(const std::vector<BatchRow>& rows);

// Serialized report, identical for identical input and seed.
std::string dump(const Json& doc);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cbundle::cli
