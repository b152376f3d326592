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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cbundle_cli/cli.hpp"

using namespace cbundle;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = CBUNDLE_CORPUS_DIR;
const fs::path invalid = corpus.parent_path() / "invalid";

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("cbundle_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate", "x.json"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"analyze", (corpus / "missing.json").string()}).code == 2);
  auto r = run({"check", (invalid / "identity.json").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("separability") != std::string::npos);
  r = run({"analyze", (invalid / "nonsquare_disc.json").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("dispatch") != std::string::npos);
  CHECK(run({"check", (corpus / "rank3_1.json").string()}).code == 0);
  CHECK(run({"verify-z", (corpus / "rank2_1.json").string()}).code == 0);
}

TEST_CASE("malformed documents are rejected") {
  fs::path dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "a.json") << "{\"q1\": {\"m11\": \"1\"}}";
  std::ofstream(dir / "b.json") << "not json";
  std::ofstream(dir / "c.json") << "{\"q1\": {\"m11\": \"1/0\", \"m12\": 0, \"m13\": 0, \"m22\": 1, \"m23\": 0, \"m33\": 1}}";
  for (const char* f : {"a.json", "b.json", "c.json"}) {
    CAPTURE(f);
    auto r = run({"check", (dir / f).string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("analyze report document") {
  fs::path dir = scratch("analyze");
  fs::path out = dir / "r.json";
  auto r = run({"--seed", "11", "--samples", "30", "analyze", (corpus / "rank3_1.json").string(), "--json", "--out",
                out.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(out) == r.out);
  Json doc = Json::parse(r.out);
  CHECK(doc["schema"] == "1");
  CHECK(doc["command"] == "analyze");
  CHECK(doc["seed"] == 11);
  CHECK(doc["samples"] == 30);
  CHECK(doc["status"] == "ok");
  REQUIRE(doc.contains("constant_difference"));
  CHECK(doc["constant_difference"]["constant"] == true);
  CHECK(doc["constant_difference"]["difference"] == doc["constant_difference"]["expected"]);
  CHECK(doc["constant_difference"]["witnesses"].size() == 30);
  CHECK(doc["summary"]["checks_passed"] == doc["summary"]["checks_total"]);
}

TEST_CASE("subcommands run only their stages") {
  fs::path f = corpus / "rank2_1.json";
  Json build = Json::parse(run({"build-z", f.string(), "--json"}).out);
  CHECK(build.contains("pencil"));
  CHECK_FALSE(build["pencil"].contains("checks"));
  Json brauer = Json::parse(run({"brauer-diff", f.string(), "--samples", "12", "--json"}).out);
  CHECK(brauer["constant_difference"]["witnesses"].size() == 12);
  CHECK_FALSE(brauer.contains("real"));
  Json real = Json::parse(run({"real", f.string(), "--json"}).out);
  CHECK(real.contains("real"));
  CHECK_FALSE(real.contains("pencil"));
}

TEST_CASE("real with svg") {
  fs::path dir = scratch("svg");
  auto r = run({"real", (corpus / "negdef_2.json").string(), "--svg", "--out", (dir / "n.json").string()});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "n.svg").starts_with("<svg"));
  CHECK(r.out.find("irrational") != std::string::npos);
}

TEST_CASE("batch is deterministic") {
  fs::path a = scratch("batch_a"), b = scratch("batch_b");
  auto r1 = run({"--seed", "5", "batch", corpus.string(), "--out", a.string(), "--jobs", "1"});
  auto r2 = run({"--seed", "5", "batch", corpus.string(), "--out", b.string(), "--jobs", "3"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  size_t n = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    CAPTURE(e.path().filename().string());
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    ++n;
  }
  CHECK(n >= 13);
  Json summary = Json::parse(slurp(a / "summary.json"));
  CHECK(summary["instances"].size() + 1 == n);
  // Rows appear in name order.
  std::vector<std::string> names;
  for (const auto& row : summary["instances"]) names.push_back(row["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
}
