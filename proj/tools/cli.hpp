#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process; homloc_cli.cpp only forwards argv.

#include <charconv>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homloc/homloc.hpp"
#include "homloc/io.hpp"

namespace homloc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2, kNoClass = 3, kCapacity = 4 };

struct RunConfig {
  std::string command;
  std::string input_path;
  int dim = 1;
  std::string engine = "fast";
  std::uint64_t seed = 0;
  std::string output = "json";
  int wiedemann_trials = 4;
  std::size_t dense_threshold = LinalgConfig{}.dense_threshold;
  std::string cycle;  // localize: "a b;b c;..." in input labels
};

inline EngineConfig engine_config(const RunConfig& cfg) {
  EngineConfig e;
  e.engine = cfg.engine == "naive" ? Engine::naive : Engine::fast;
  e.linalg.seed = cfg.seed;
  e.linalg.wiedemann_trials = cfg.wiedemann_trials;
  e.linalg.dense_threshold = cfg.dense_threshold;
  return e;
}

// Simplices of a chain as ascending label lists, in simplex index order.
inline Json cycle_json(const SimplicialComplex& k, const Chain& z) {
  Json out = Json::array();
  for (std::size_t i : z.support.support) {
    std::vector<std::uint64_t> labels;
    for (VertexId v : k.simplex(z.dim, i)) labels.push_back(k.label(v));
    std::sort(labels.begin(), labels.end());
    out.push_back(labels);
  }
  return out;
}

inline std::string cycle_tsv(const Json& cycle) {
  std::string s;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += ',';
    for (std::size_t j = 0; j < cycle[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(cycle[i][j].get<std::uint64_t>());
    }
  }
  return s;
}

// "0 1;1 2;0 2" -> chain over the simplices with those vertex labels. A
// group holding a single number is a d-simplex index instead (d >= 1, so
// it cannot be a vertex list).
inline Chain parse_cycle(const SimplicialComplex& k, int d, const std::string& text) {
  std::vector<std::size_t> indices;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream ids(group);
    std::vector<std::uint64_t> nums;
    std::string tok;
    while (ids >> tok) {
      std::uint64_t x = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw MalformedInput("--cycle: bad number '" + tok + "'");
      nums.push_back(x);
    }
    if (nums.empty()) continue;
    if (nums.size() == 1) {
      if (nums[0] >= k.count(d)) throw MalformedInput("--cycle: simplex index " + group + " out of range");
      indices.push_back(nums[0]);
      continue;
    }
    Simplex s;
    for (std::uint64_t label : nums) {
      const auto v = k.vertex_of(label);
      if (!v) throw MalformedInput("--cycle: unknown vertex " + std::to_string(label));
      s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    if (dimension_of(s) != d) throw MalformedInput("--cycle: simplex '" + group + "' is not of dimension --dim");
    const auto idx = k.index_of(s);
    if (!idx) throw MalformedInput("--cycle: '" + group + "' is not a simplex of the input");
    indices.push_back(*idx);
  }
  if (indices.empty()) throw MalformedInput("--cycle: empty cycle");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw MalformedInput("--cycle: repeated simplex");
  return k.make_chain(d, std::move(indices));
}

// Flat TSV: a header row of keys, then one row of values. Arrays of
// entries become one row each.
inline void write_tsv(std::ostream& out, const Json& report) {
  if (report.contains("entries")) {
    out << "size\tcycle\n";
    for (const auto& e : report["entries"]) out << e["size"].get<Radius>() << '\t' << cycle_tsv(e["cycle"]) << '\n';
    out << "total\t" << report["total"].get<Radius>() << '\n';
    return;
  }
  bool first = true;
  for (const auto& [key, value] : report.items()) {
    out << (first ? "" : "\t") << key;
    first = false;
  }
  out << '\n';
  first = true;
  for (const auto& [key, value] : report.items()) {
    out << (first ? "" : "\t");
    first = false;
    if (key == "cycle")
      out << cycle_tsv(value);
    else if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
  }
  out << '\n';
}

inline Json run_command(const RunConfig& cfg) {
  const SimplicialComplex k = io::load(cfg.input_path).build();
  const int d = cfg.dim;
  const EngineConfig ecfg = engine_config(cfg);
  Json report;

  if (cfg.command == "betti") {
    report["dim"] = d;
    report["betti"] = betti(k, d);
  } else if (cfg.command == "measure") {
    const auto res = measure_smallest(k, d, ecfg);
    report["size"] = res.size;
    report["center"] = k.label(res.center);
    report["cycle"] = cycle_json(k, res.cycle);
  } else if (cfg.command == "basis") {
    const auto res = measure_all(k, d, ecfg);
    report["betti"] = res.entries.size();
    report["entries"] = Json::array();
    for (const auto& e : res.entries) {
      Json entry;
      entry["size"] = e.size;
      entry["cycle"] = cycle_json(k, e.cycle);
      report["entries"].push_back(entry);
    }
    report["total"] = total_size(res);
  } else if (cfg.command == "localize") {
    if (cfg.cycle.empty()) throw MalformedInput("localize needs --cycle");
    const Chain z = parse_cycle(k, d, cfg.cycle);
    if (!k.is_cycle(z)) throw MalformedInput("--cycle: chain has nonzero boundary");
    const auto loc = localize_class(k, z);
    report["radius"] = cycle_radius(k, z);
    report["diameter"] = cycle_diameter(k, z);
    report["size"] = loc.size;
    report["center"] = k.label(loc.center);
    report["cycle"] = cycle_json(k, loc.cycle);
  } else if (cfg.command == "bench") {
    using Clock = std::chrono::steady_clock;
    EngineConfig naive = ecfg, fast = ecfg;
    naive.engine = Engine::naive;
    fast.engine = Engine::fast;
    const auto t0 = Clock::now();
    const auto rn = bmin(k, d, naive);
    const auto t1 = Clock::now();
    const auto rf = bmin(k, d, fast);
    const auto t2 = Clock::now();
    report["simplices"] = k.size();
    report["size_naive"] = rn.radius;
    report["size_fast"] = rf.radius;
    report["naive_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    report["fast_seconds"] = std::chrono::duration<double>(t2 - t1).count();
  }
  return report;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure and localize Z2 homology classes by geodesic balls"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "SC1 or OFF file")->required();
    sub->add_option("--dim", cfg.dim, "homology dimension")->check(CLI::NonNegativeNumber);
    sub->add_option("--engine", cfg.engine, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized rank");
    sub->add_option("--output", cfg.output, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--wiedemann-trials", cfg.wiedemann_trials, "randomized rank trials")->check(CLI::PositiveNumber);
    sub->add_option("--dense-threshold", cfg.dense_threshold, "rows + cols at or below which rank is exact");
  };
  for (const char* name : {"betti", "measure", "basis", "localize", "bench"}) {
    static const std::map<std::string, std::string> help{
        {"betti", "print the Betti number"},
        {"measure", "smallest class: size, center, localized cycle"},
        {"basis", "optimal homology basis"},
        {"localize", "radius, diameter and minimal-radius representative of a given cycle's class"},
        {"bench", "wall time of both engines"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    sub->callback([&cfg, name] { cfg.command = name; });
    if (std::string(name) == "localize")
      sub->add_option("--cycle", cfg.cycle, "simplices as label lists or indices, e.g. \"0 1;1 2;0 2\" or \"0;1;2\"")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    const Json report = run_command(cfg);
    if (cfg.output == "tsv")
      write_tsv(out, report);
    else
      out << report.dump() << '\n';
    return kOk;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NoClassError& e) {
    err << "error: " << e.what() << '\n';
    return kNoClass;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace homloc::cli
