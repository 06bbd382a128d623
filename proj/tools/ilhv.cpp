#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "commands.hpp"
#include "ilhv/graph.hpp"
#include "ilhv/inflate.hpp"
#include "ilhv/lhv.hpp"
#include "ilhv/paradox.hpp"

namespace ilhv::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

Json run_report(Json report, double seconds) {
  Json out;
  const std::string digest = sha256_hex(report.dump());
  out["report"] = std::move(report);
  out["report_sha256"] = digest;
  out["timing"] = {{"seconds", seconds}};
  return out;
}

void emit(const std::string& text, const std::optional<std::filesystem::path>& out) {
  if (out) {
    io::write_text(*out, text);
  } else {
    std::cout << text;
  }
}

namespace {

Json input_entry(const std::filesystem::path& path) {
  return {{"path", path.string()}, {"sha256", file_digest(path)}};
}

void report_failures(const MeasurementSet& s, const ParadoxCertificate& c) {
  for (std::size_t v = 0; v < c.parity_ok.size(); ++v) {
    if (!c.parity_ok[v]) std::cerr << "parity fails at vertex " << s.graph.label(v) << "\n";
  }
  for (std::size_t k = 0; k < c.signs.size(); ++k) {
    if (!c.signs[k]) std::cerr << "pair " << k << " is not proportional to a stabilizer element\n";
  }
  if (!c.product_is_minus_one) std::cerr << "product of the submeasurements is not -1\n";
}

}  // namespace

int cmd_inflate(const std::filesystem::path& graph_file, const Options& opt) {
  Stopwatch clock;
  const Graph g = io::graph_from_json(io::read_json(graph_file));
  const InflatedGraph ig = inflate(g, opt.d);
  const std::string json = io::to_json(ig).dump(2) + "\n";
  const std::string dot = to_dot(ig);
  if (!opt.out) {
    std::cout << (opt.format == "dot" ? dot : json);
    return kOk;
  }
  const std::string stem = graph_file.stem().string() + "_d" + std::to_string(opt.d);
  const auto json_path = *opt.out / (stem + ".json");
  const auto dot_path = *opt.out / (stem + ".dot");
  io::write_text(json_path, json);
  io::write_text(dot_path, dot);

  Json report;
  report["command"] = "inflate";
  report["inputs"] = Json::array({input_entry(graph_file)});
  report["parameters"] = {{"d", opt.d}};
  report["vertices"] = ig.graph().size();
  report["edges"] = ig.graph().edge_count();
  report["files"] = {json_path.string(), dot_path.string()};
  std::cout << run_report(std::move(report), clock.seconds()).dump(2) << "\n";
  return kOk;
}

int cmd_build(const std::filesystem::path& set_file, const Options& opt) {
  Stopwatch clock;
  const MeasurementSet base = io::set_from_json(io::read_json(set_file));
  const InflatedSet built = build_inflated_set(base, opt.d);
  const BellReport base_bell = bell_report(base, opt.cap);
  const BellReport bell = bell_report(built.set, opt.cap, built.report.decoy_pairs);

  Json report;
  report["command"] = "build";
  report["inputs"] = Json::array({input_entry(set_file)});
  report["parameters"] = {{"d", opt.d}, {"cap", opt.cap}};
  report["build"] = io::to_json(base.graph, built.report);
  report["certificate"] = io::to_json(built.set.graph, built.report.certificate);
  report["base_bell_report"] = io::to_json(base_bell);
  report["bell_report"] = io::to_json(bell);
  if (opt.out) {
    io::write_text(*opt.out, io::to_json(built.set).dump(2) + "\n");
    report["output"] = opt.out->string();
  } else {
    report["set"] = io::to_json(built.set);
  }
  std::cout << run_report(std::move(report), clock.seconds()).dump(2) << "\n";
  return built.report.certificate.overall ? kOk : kFalse;
}

int cmd_verify(const std::filesystem::path& set_file, const Options& opt) {
  Stopwatch clock;
  const MeasurementSet s = io::set_from_json(io::read_json(set_file));
  const ParadoxCertificate c = verify_paradox(s);
  Json report;
  report["command"] = "verify";
  report["inputs"] = Json::array({input_entry(set_file)});
  report["parameters"] = {{"d", s.d}};
  report["certificate"] = io::to_json(s.graph, c);
  if (c.signs_defined()) report["feasible"] = feasible(build_system(s));
  emit(run_report(std::move(report), clock.seconds()).dump(2) + "\n", opt.out);
  if (!c.overall) report_failures(s, c);
  return c.overall ? kOk : kFalse;
}

int cmd_bound(const std::filesystem::path& set_file, const Options& opt) {
  Stopwatch clock;
  const MeasurementSet s = io::set_from_json(io::read_json(set_file));
  const ParadoxCertificate c = verify_paradox(s);
  const BellReport bell = bell_report(s, opt.cap);
  Json report;
  report["command"] = "bound";
  report["inputs"] = Json::array({input_entry(set_file)});
  report["parameters"] = {{"d", s.d}, {"cap", opt.cap}};
  report["certificate"] = io::to_json(s.graph, c);
  report["bell_report"] = io::to_json(bell);
  emit(run_report(std::move(report), clock.seconds()).dump(2) + "\n", opt.out);
  return kOk;
}

}  // namespace ilhv::cli

int main(int argc, char** argv) {
  using namespace ilhv::cli;
  CLI::App app{"Inflated graph-state paradoxes: construction and verification"};
  app.require_subcommand(1);
  Options opt;
#ifdef ILHV_DATA_DIR
  opt.data_dir = ILHV_DATA_DIR;
#endif
  std::string input;
  std::string out;

  auto add_out = [&](CLI::App* sub, const char* what) { sub->add_option("--out", out, what); };

  auto* inflate_cmd = app.add_subcommand("inflate", "Inflate a graph: chain of 2d vertices per edge");
  inflate_cmd->add_option("graph", input, "Graph JSON file")->required();
  inflate_cmd->add_option("--d", opt.d, "Communication distance (>= 1)")->capture_default_str();
  inflate_cmd->add_option("--format", opt.format, "Stdout format without --out")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  add_out(inflate_cmd, "Directory for <stem>_d<d>.json and .dot");

  auto* build_cmd = app.add_subcommand("build", "Build a certified inflated set from a base set");
  build_cmd->add_option("set", input, "Base measurement set JSON")->required();
  build_cmd->add_option("--d", opt.d, "Communication distance (>= 1)")->capture_default_str();
  build_cmd->add_option("--cap", opt.cap, "Min-violation enumeration cap (log2 steps)")->capture_default_str();
  add_out(build_cmd, "Output file for the inflated set");

  auto* verify_cmd = app.add_subcommand("verify", "Check the paradox conditions of a set");
  verify_cmd->add_option("set", input, "Measurement set JSON")->required();
  add_out(verify_cmd, "Report file");

  auto* bound_cmd = app.add_subcommand("bound", "Quantum value and classical bound of a set");
  bound_cmd->add_option("set", input, "Measurement set JSON")->required();
  bound_cmd->add_option("--cap", opt.cap, "Min-violation enumeration cap (log2 steps)")->capture_default_str();
  add_out(bound_cmd, "Report file");

  auto* repro_cmd = app.add_subcommand("reproduce", "Run a bundled end-to-end check");
  repro_cmd->add_option("name", input, "table1, chain7, cycle5, chsh4, small-graphs or random-inflation")
      ->required()
      ->check(CLI::IsMember({"table1", "chain7", "cycle5", "chsh4", "small-graphs", "random-inflation"}));
  repro_cmd->add_option("--cap", opt.cap, "Min-violation enumeration cap (log2 steps)")->capture_default_str();
  repro_cmd->add_option("--seed", opt.seed, "Seed for random-inflation")->capture_default_str();
  repro_cmd->add_option("--count", opt.count, "Graphs for random-inflation")->capture_default_str();
  repro_cmd->add_flag("--search", opt.search, "small-graphs: rediscover the missing flip rules");
  repro_cmd->add_option("--data", opt.data_dir, "Bundled data directory")->capture_default_str();
  add_out(repro_cmd, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (!out.empty()) opt.out = out;

  try {
    if (inflate_cmd->parsed()) return cmd_inflate(input, opt);
    if (build_cmd->parsed()) return cmd_build(input, opt);
    if (verify_cmd->parsed()) return cmd_verify(input, opt);
    if (bound_cmd->parsed()) return cmd_bound(input, opt);
    return cmd_reproduce(input, opt);
  } catch (const ilhv::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ilhv::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ilhv::InstanceTooLarge& e) {
    std::cerr << "instance too large: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ilhv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
