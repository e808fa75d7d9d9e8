#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpda/analysis.hpp"
#include "cpda/constructions.hpp"
#include "cpda/json_io.hpp"
#include "cpda/simulator.hpp"
#include "cpda/transform.hpp"

namespace {

using cpda::CpdaError;
using cpda::ErrorCode;
using Json = nlohmann::json;

std::string error_json(const std::string& code, const std::string& message,
                       const std::string& context) {
  Json j;
  j["code"] = code;
  j["context"] = context;
  j["message"] = message;
  return j.dump() + "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  cpda::require(in.good(), ErrorCode::IoError, "cannot open input file",
                path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  cpda::require(out.good(), ErrorCode::IoError, "cannot open output file",
                path);
  out << text;
  cpda::require(out.good(), ErrorCode::IoError, "write failed", path);
}

cpda::ParallelClassPartition load_partition(const std::string& classes_file,
                                            int h, int r) {
  if (classes_file.empty()) return cpda::parallel_classes(h, r);
  auto partition = cpda::parse_partition_json(read_input(classes_file));
  cpda::require(partition.h() == h && partition.r() == r,
                ErrorCode::ShapeMismatch,
                "partition file does not match --h/--r", classes_file);
  return partition;
}

cpda::DemandPolicy parse_demands(const std::string& text,
                                 std::uint64_t seed) {
  cpda::DemandPolicy policy;
  if (text == "exhaustive") {
    policy.kind = cpda::DemandPolicy::Kind::kExhaustive;
    return policy;
  }
  if (text.rfind("random:", 0) == 0) {
    policy.kind = cpda::DemandPolicy::Kind::kRandom;
    try {
      policy.count = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      cpda::fail(ErrorCode::UsageError, "bad random demand count", text);
    }
    policy.seed = seed + 1;  // decouple from the library stream
    return policy;
  }
  cpda::fail(ErrorCode::UsageError,
             "demands must be 'exhaustive' or 'random:COUNT'", text);
}

std::string format_params(int k, int f, int z, int s) {
  std::ostringstream out;
  out << '(' << k << ',' << f << ',' << z << ',' << s << ')';
  return out.str();
}

// Shared by `cpda check` paths; returns the process exit code.
int run_check(const std::string& text) {
  cpda::LoadedArray loaded = cpda::parse_pda_json(text);
  bool as_cpda = loaded.labels.has_value();

  if (!as_cpda) {
    cpda::PdaReport report = cpda::check_pda(loaded.array);
    std::ostringstream out;
    out << (report.is_valid ? "valid " : "invalid ")
        << format_params(loaded.array.num_cols(), loaded.array.num_rows(),
                         report.z, report.s);
    if (report.g_regular.has_value()) out << ", g=" << *report.g_regular;
    out << "\n";
    for (const auto& v : report.violations)
      out << "- " << cpda::to_string(v.kind) << ": " << v.detail << "\n";
    std::cout << out.str();
    if (!report.is_valid) {
      std::cerr << error_json("MalformedArray",
                              "array violates the PDA conditions",
                              std::to_string(report.violations.size()) +
                                  " violations");
      return 1;
    }
    return 0;
  }

  cpda::CpdaScheme scheme = cpda::parse_cpda_json(text);
  cpda::CpdaReport report = cpda::check_cpda(scheme, scheme.h, scheme.r);
  std::ostringstream out;
  out << (report.is_valid ? "valid " : "invalid ")
      << format_params(scheme.array.num_cols(), scheme.array.num_rows(),
                       report.pda.z, report.pda.s);
  if (report.pda.g_regular.has_value()) out << ", g=" << *report.pda.g_regular;
  out << "\n";
  out << "relay loads:";
  for (auto load : report.per_relay_loads) out << ' ' << load;
  out << (report.loads_equal ? " (equal)" : " (unequal)") << "\n";
  for (const auto& v : report.pda.violations)
    out << "- " << cpda::to_string(v.kind) << ": " << v.detail << "\n";
  for (const auto& v : report.violations)
    out << "- " << cpda::to_string(v.kind) << ": " << v.detail << "\n";
  std::cout << out.str();
  if (!report.is_valid) {
    std::cerr << error_json(
        "MalformedArray", "array violates the C-PDA conditions",
        std::to_string(report.pda.violations.size() +
                       report.violations.size()) +
            " violations");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"placement delivery arrays for combination networks"};
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", "cpda 0.1.0");
  app.require_subcommand(1);
  int exit_code = 0;

  // frees -h so subcommands can take --h as an option
  auto add_sub = [](CLI::App* parent, const std::string& name,
                    const std::string& desc) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  // build
  auto* build = add_sub(&app, "build", "construct arrays and schemes");
  build->require_subcommand(1);

  struct {
    int k = 0, t = 0, q = 0, m = 0, h = 0, r = 0;
    std::string out = "-";
    std::string classes;
  } b;

  auto* man = add_sub(build, "man", "Maddah-Ali/Niesen PDA");
  man->add_option("--k", b.k, "number of users")->required();
  man->add_option("--t", b.t, "cache parameter")->required();
  man->add_option("--out", b.out, "output path or -");
  man->callback([&] {
    write_output(b.out, cpda::pda_to_json(cpda::man_pda({b.k, b.t})));
  });

  for (auto [name, variant] :
       {std::pair<const char*, int>{"lemma1", 1}, {"lemma2", 2}}) {
    auto* sub = add_sub(build, name, "low-subpacketization grid PDA");
    sub->add_option("--q", b.q, "alphabet size")->required();
    sub->add_option("--m", b.m, "vector length")->required();
    sub->add_option("--out", b.out, "output path or -");
    int v = variant;
    sub->callback([&, v] {
      cpda::GridParams params{b.q, b.m};
      write_output(b.out, cpda::pda_to_json(v == 1 ? cpda::lemma1_pda(params)
                                                   : cpda::lemma2_pda(params)));
    });
  }

  auto* cutset = add_sub(build, "cutset-b", "cut-set achieving C-PDA");
  cutset->add_option("--h", b.h, "relay count")->required();
  cutset->add_option("--r", b.r, "relays per user")->required();
  cutset->add_option("--out", b.out, "output path or -");
  cutset->callback([&] {
    write_output(b.out, cpda::cpda_to_json(cpda::cutset_array_b(b.h, b.r)));
  });

  for (auto [name, variant] :
       {std::pair<const char*, int>{"lsub1", 1}, {"lsub2", 2}}) {
    auto* sub =
        add_sub(build, name, "low-subpacketization C-PDA pipeline");
    sub->add_option("--h", b.h, "relay count")->required();
    sub->add_option("--r", b.r, "relays per user")->required();
    sub->add_option("--q", b.q, "memory grid parameter")->required();
    sub->add_option("--classes", b.classes, "partition file");
    sub->add_option("--out", b.out, "output path or -");
    int v = variant;
    sub->callback([&, v] {
      auto partition = load_partition(b.classes, b.h, b.r);
      auto result = v == 1 ? cpda::build_lsub1(b.h, b.r, b.q, partition)
                           : cpda::build_lsub2(b.h, b.r, b.q, partition);
      write_output(b.out, cpda::cpda_to_json(result.scheme));
    });
  }

  // check
  auto* check = add_sub(&app, "check", "validate an array file");
  struct {
    std::string file = "-";
  } c;
  check->add_option("file", c.file, "input path or -");
  check->callback([&] { exit_code = run_check(read_input(c.file)); });

  // classes
  auto* classes = add_sub(&app, "classes", "parallel class partitions");
  struct {
    int h = 0, r = 0;
    std::string out = "-";
    std::string file;
  } p;
  classes->add_option("--h", p.h, "relay count");
  classes->add_option("--r", p.r, "relays per user");
  classes->add_option("--out", p.out, "output path or -");
  auto* classes_check =
      add_sub(classes, "check", "validate a partition file");
  classes_check->add_option("file", p.file, "partition path or -")->required();
  classes_check->callback([&] {
    auto partition = cpda::parse_partition_json(read_input(p.file));
    std::cout << "valid partition: h=" << partition.h()
              << " r=" << partition.r()
              << " classes=" << partition.num_classes() << "\n";
  });
  classes->callback([&] {
    if (classes_check->parsed()) return;
    cpda::require(p.h >= 1 && p.r >= 1, ErrorCode::UsageError,
                  "--h and --r are required");
    write_output(p.out,
                 cpda::partition_to_json(cpda::parallel_classes(p.h, p.r)));
  });

  // transform
  auto* transform =
      add_sub(&app, "transform", "apply Transformation 1 to a base PDA");
  struct {
    std::string pda;
    int h = 0, r = 0;
    std::string classes;
    std::string out = "-";
  } t;
  transform->add_option("--pda", t.pda, "base PDA path or -")->required();
  transform->add_option("--h", t.h, "relay count")->required();
  transform->add_option("--r", t.r, "relays per user")->required();
  transform->add_option("--classes", t.classes, "partition file");
  transform->add_option("--out", t.out, "output path or -");
  transform->callback([&] {
    auto loaded = cpda::parse_pda_json(read_input(t.pda));
    auto partition = load_partition(t.classes, t.h, t.r);
    auto scheme = cpda::transform_to_cpda(
        {std::move(loaded.array), t.h, t.r, std::move(partition)});
    write_output(t.out, cpda::cpda_to_json(scheme));
  });

  // balance
  auto* balance =
      add_sub(&app, "balance", "equalize per-relay loads by replication");
  struct {
    std::string cpda;
    std::string out = "-";
  } bal;
  balance->add_option("--cpda", bal.cpda, "C-PDA path or -")->required();
  balance->add_option("--out", bal.out, "output path or -");
  balance->callback([&] {
    auto scheme = cpda::parse_cpda_json(read_input(bal.cpda));
    auto balanced = cpda::balance_by_replication(scheme, scheme.h);
    write_output(bal.out, cpda::balanced_to_json(balanced));
  });

  // sim
  auto* sim = add_sub(&app, "sim", "simulate the two-phase protocol");
  struct {
    std::string positional;
    std::string cpda;
    int n_files = 0;
    std::int64_t file_bytes = 0;
    std::string demands = "exhaustive";
    std::uint64_t seed = 0;
    std::string report;
  } s;
  sim->add_option("file", s.positional, "C-PDA path or -");
  sim->add_option("--cpda", s.cpda, "C-PDA path or -");
  sim->add_option("--n-files", s.n_files, "library size N")->required();
  sim->add_option("--file-bytes", s.file_bytes, "bytes per file")->required();
  sim->add_option("--demands", s.demands, "exhaustive or random:COUNT");
  sim->add_option("--seed", s.seed, "library and demand seed");
  sim->add_option("--report", s.report, "also write the report here");
  sim->callback([&] {
    cpda::require(s.positional.empty() != s.cpda.empty(),
                  ErrorCode::UsageError,
                  "give the scheme either positionally or via --cpda");
    std::string text =
        read_input(s.positional.empty() ? s.cpda : s.positional);
    auto net =
        cpda::make_library(s.n_files, s.file_bytes * 8, s.seed);
    auto policy = parse_demands(s.demands, s.seed);

    cpda::RoundReport report;
    if (Json::parse(text).contains("replicas")) {
      auto scheme = cpda::parse_balanced_json(text);
      net.h = scheme.replicas.front().h;
      net.r = scheme.replicas.front().r;
      report = cpda::run_round(scheme, net, policy);
    } else {
      auto scheme = cpda::parse_cpda_json(text);
      net.h = scheme.h;
      net.r = scheme.r;
      report = cpda::run_round(scheme, net, policy);
    }

    std::string json = cpda::report_to_json(report);
    std::cout << json;
    if (!s.report.empty()) write_output(s.report, json);
    if (!report.all_decoded) {
      std::cerr << error_json("CacheMiss", "simulation failed to decode",
                              report.failures.empty() ? ""
                                                      : report.failures[0]);
      exit_code = 1;
    }
  });

  // analyze
  auto* analyze = add_sub(&app, "analyze", "closed forms and bounds");
  analyze->require_subcommand(1);
  struct {
    int h = 0, r = 0, n = 0;
    std::string m;
    std::string grid = "q:2..6";
    std::string out = "-";
  } a;
  auto* cutset_cmd = add_sub(analyze, "cutset", "cut-set lower bound");
  cutset_cmd->add_option("--h", a.h, "relay count")->required();
  cutset_cmd->add_option("--r", a.r, "relays per user")->required();
  cutset_cmd->add_option("--n", a.n, "library size N")->required();
  cutset_cmd->add_option("--m", a.m, "memory M, integer or num/den")
      ->required();
  cutset_cmd->callback([&] {
    auto bound =
        cpda::cutset_bound(a.h, a.r, a.n, cpda::rat_from_string(a.m));
    Json j;
    j["h"] = bound.h;
    j["l"] = bound.l;
    j["lower_bound"] = {
        {"num", cpda::int_to_i64(cpda::rat_num(bound.lower_bound))},
        {"den", cpda::int_to_i64(cpda::rat_den(bound.lower_bound))}};
    j["m_over_n"] = {
        {"num", cpda::int_to_i64(cpda::rat_num(bound.memory_ratio))},
        {"den", cpda::int_to_i64(cpda::rat_den(bound.memory_ratio))}};
    j["n"] = bound.n_files;
    j["r"] = bound.r;
    j["t"] = bound.t;
    std::cout << j.dump() << "\n";
  });

  auto* table_cmd = add_sub(analyze, "table", "scheme comparison CSV");
  table_cmd->add_option("--h", a.h, "relay count")->required();
  table_cmd->add_option("--r", a.r, "relays per user")->required();
  table_cmd->add_option("--n", a.n, "library size N")->required();
  table_cmd->add_option("--grid", a.grid, "memory grid, e.g. q:2..6");
  table_cmd->add_option("--out", a.out, "output path or -");
  table_cmd->callback([&] {
    int lo = 0, hi = 0;
    if (std::sscanf(a.grid.c_str(), "q:%d..%d", &lo, &hi) != 2)
      cpda::fail(ErrorCode::UsageError, "grid must look like q:2..6", a.grid);
    write_output(a.out, cpda::compare_table(a.h, a.r, a.n, lo, hi));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("UsageError", e.what(), e.get_name());
    return 2;
  } catch (const CpdaError& e) {
    if (e.code() == ErrorCode::UsageError) {
      std::cerr << error_json(std::string(cpda::to_string(e.code())),
                              e.message(), e.context());
      return 2;
    }
    std::cerr << error_json(std::string(cpda::to_string(e.code())),
                            e.message(), e.context());
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << error_json("ParseError", "invalid JSON", e.what());
    return 1;
  }
  return exit_code;
}
