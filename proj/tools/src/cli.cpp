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

#include "cbundle_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cbundle/errors.hpp"
#include "cbundle/random.hpp"

namespace cbundle::cli {

namespace fs = std::filesystem;

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InstanceInput load_instance(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadInput(path.string() + ": " + e.what());
  }
  try {
    InstanceInput inst = instance_from_json(j);
    if (inst.name.empty()) inst.name = path.stem().string();
    return inst;
  } catch (const InputError& e) {
    throw BadInput(path.string() + ": " + e.what());
  } catch (const Json::exception& e) {
    throw BadInput(path.string() + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream o(path, std::ios::binary);
  if (!o) throw BadInput("cannot write " + path.string());
  o << text;
}

std::string verdict_of(const AnalysisReport& rep) {
  return rep.verdict ? to_string(rep.verdict->verdict) : "-";
}

void print_human(const JobConfig& cfg, const InstanceInput& in, const AnalysisReport& rep, std::ostream& out) {
  out << cfg.command << " " << in.name << ": " << to_string(rep.status);
  if (rep.status != Status::ok) out << " at " << rep.stage;
  out << " (" << rep.checks_passed << "/" << rep.checks_total << " checks)\n";
  if (rep.constant_difference) out << "  constant difference: " << rep.constant_difference->to_string() << "\n";
  if (rep.verdict) {
    out << "  configuration: " << to_string(rep.verdict->configuration) << "\n";
    out << "  section over R: " << (rep.verdict->section_exists ? "yes" : "no") << "\n";
    out << "  verdict: " << to_string(rep.verdict->verdict) << "\n";
  }
}

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

AnalyzeOptions options_for(const JobConfig& cfg) {
  AnalyzeOptions o;
  o.seed = cfg.seed;
  o.samples = cfg.samples;
  o.height_bound = cfg.height_bound;
  o.timings = cfg.timings;
  o.svg = cfg.svg;
  const std::string& c = cfg.command;
  if (c == "check") {
    o.pencil = o.verify = o.brauer = o.real = false;
  } else if (c == "build-z") {
    o.verify = o.brauer = o.real = false;
  } else if (c == "verify-z") {
    o.brauer = o.real = false;
  } else if (c == "brauer-diff") {
    o.verify = o.real = false;
  } else if (c == "real") {
    o.pencil = o.verify = o.brauer = false;
  } else {
    o.real = cfg.real;
  }
  return o;
}

std::vector<BatchRow> run_batch(const fs::path& dir, const JobConfig& cfg, const std::string& out_dir) {
  if (!fs::is_directory(dir)) throw BadInput(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<BatchRow> rows(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < files.size();) {
      BatchRow& row = rows[i];
      row.name = files[i].stem().string();
      row.seed = cfg.seed + fnv1a(row.name);
      try {
        InstanceInput in = load_instance(files[i]);
        JobConfig c = cfg;
        c.command = "analyze";
        c.seed = row.seed;
        AnalyzeOptions opt = options_for(c);
        AnalysisReport rep = analyze(in, opt);
        rep.doc["command"] = "analyze";
        row.checks_passed = rep.checks_passed;
        row.checks_total = rep.checks_total;
        row.status = to_string(rep.status);
        row.verdict = verdict_of(rep);
        if (!out_dir.empty()) {
          write_file(fs::path(out_dir) / (row.name + ".report.json"), dump(rep.doc));
          if (!rep.svg.empty()) write_file(fs::path(out_dir) / (row.name + ".svg"), rep.svg);
        }
      } catch (const std::exception& e) {
        row.status = "rejected";
        row.verdict = "-";
        errors[i] = e.what();
      }
    }
  };
  unsigned n = cfg.jobs > 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, std::max<size_t>(files.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < files.size(); ++i)
    if (!errors[i].empty()) std::cerr << rows[i].name << ": " << errors[i] << "\n";
  return rows;
}

std::string format_table(const std::vector<BatchRow>& rows) {
  size_t w = 8;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  std::ostringstream o;
  auto pad = [](std::string s, size_t n) {
    s.resize(std::max(n, s.size()), ' ');
    return s;
  };
  o << pad("instance", w) << "  " << pad("checks", 9) << "  " << pad("status", 20) << "  verdict\n";
  for (const auto& r : rows) {
    o << pad(r.name, w) << "  " << pad(std::to_string(r.checks_passed) + "/" + std::to_string(r.checks_total), 9)
      << "  " << pad(r.status, 20) << "  " << r.verdict << "\n";
  }
  return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"conic bundle verification tool"};
  app.require_subcommand(1);
  JobConfig cfg;
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--out", cfg.out, "report path (directory for batch)");
  app.add_flag("--json", cfg.json, "print the report document");
  app.add_option("--samples", cfg.samples, "specialization points")->check(CLI::PositiveNumber);
  app.add_option("--height", cfg.height_bound, "height bound for the PGL2 search (0 = off)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timings", cfg.timings, "record stage timings (breaks byte-identical reports)");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"check", "certify smoothness and separability"},
      {"build-z", "build the pencil of quadrics"},
      {"verify-z", "build and verify the pencil"},
      {"brauer-diff", "compare the generic-fiber symbols"},
      {"real", "real topology and verdict"},
      {"analyze", "full analysis"},
      {"batch", "analyze every instance in a directory"},
  };
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("input", cfg.input, s.name == std::string("batch") ? "corpus directory" : "instance file")
        ->required();
    sc->fallthrough();
    if (s.name == std::string("real") || s.name == std::string("analyze") || s.name == std::string("batch"))
      sc->add_flag("--svg", cfg.svg, "emit an SVG rendering next to the report");
    if (s.name == std::string("analyze") || s.name == std::string("batch")) {
      sc->add_flag("!--no-real", cfg.real, "skip the real analysis");
    }
    if (s.name == std::string("batch")) sc->add_option("--jobs", cfg.jobs, "worker threads");
    sc->final_callback([&cfg, sc] { cfg.command = sc->get_name(); });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty()) {
      const std::vector<std::string> valued = {"--seed", "--out", "--samples", "--height"};
      for (size_t i = 0; i < args.size(); ++i) {
        if (args[i].starts_with("-")) {
          if (std::find(valued.begin(), valued.end(), args[i]) != valued.end()) ++i;
          continue;
        }
        if (!app.get_subcommand_no_throw(args[i])) {
          err << "error: unknown command '" << args[i] << "'\n";
          return 2;
        }
        break;
      }
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.command == "batch") {
      auto rows = run_batch(cfg.input, cfg, cfg.out);
      out << format_table(rows);
      if (!cfg.out.empty()) {
        Json s;
        s["schema"] = "1";
        s["seed"] = cfg.seed;
        s["samples"] = cfg.samples;
        for (const auto& r : rows)
          s["instances"].push_back({{"name", r.name},
                                    {"seed", r.seed},
                                    {"checks_passed", r.checks_passed},
                                    {"checks_total", r.checks_total},
                                    {"status", r.status},
                                    {"verdict", r.verdict}});
        write_file(fs::path(cfg.out) / "summary.json", dump(s));
      }
      int code = 0;
      for (const auto& r : rows) code = std::max(code, r.status == "ok" ? 0 : r.status == "rejected" ? 2 : 1);
      return code;
    }

    InstanceInput in = load_instance(cfg.input);
    AnalysisReport rep = analyze(in, options_for(cfg));
    rep.doc["command"] = cfg.command;
    std::string text = dump(rep.doc);
    if (!cfg.out.empty()) write_file(cfg.out, text);
    if (cfg.json)
      out << text;
    else
      print_human(cfg, in, rep, out);
    if (!rep.svg.empty()) {
      fs::path p = cfg.out.empty() ? fs::path(in.name + ".svg") : fs::path(cfg.out).replace_extension(".svg");
      write_file(p, rep.svg);
    }
    if (rep.status != Status::ok) err << in.name << ": " << rep.stage << ": " << rep.message << "\n";
    return exit_code(rep.status);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cbundle::cli
