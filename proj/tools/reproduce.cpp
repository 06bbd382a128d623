#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "ilhv/barrett.hpp"
#include "ilhv/game.hpp"
#include "ilhv/inflate.hpp"
#include "ilhv/lhv.hpp"
#include "ilhv/paradox.hpp"
#include "ilhv/statevector.hpp"

namespace ilhv::cli {

namespace {

struct Check {
  std::string claim;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

class Checklist {
 public:
  void add(std::string claim, bool pass, std::string detail, const Stopwatch& clock) {
    checks_.push_back({std::move(claim), pass, std::move(detail), clock.seconds()});
    const Check& c = checks_.back();
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.claim << ": " << c.detail << "\n";
  }
  bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }
  Json json() const {
    Json out = Json::array();
    for (const Check& c : checks_) out.push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
    return out;
  }
  Json timing() const {
    Json out = Json::object();
    for (const Check& c : checks_) out[c.claim] = c.seconds;
    return out;
  }

 private:
  std::vector<Check> checks_;
};

MeasurementSet load_set(const Options& opt, const std::string& name) {
  return io::set_from_json(io::read_json(opt.data_dir / "fixtures" / (name + ".json")));
}

std::vector<std::string> row_keys(const MeasurementSet& s) {
  std::vector<std::string> keys;
  for (const MeasurementPair& p : s.pairs) keys.push_back(io::pair_string(p));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool same_rows(const MeasurementSet& a, const MeasurementSet& b) {
  return a.graph == b.graph && a.d == b.d && row_keys(a) == row_keys(b);
}

std::string bell_text(const BellReport& r) {
  std::ostringstream s;
  s << "qm=" << r.qm_value << " bound=" << r.classical_bound << " ratio=" << (r.ratio ? ratio_string(*r.ratio) : "none");
  return s.str();
}

bool bell_is(const BellReport& r, std::size_t qm, long long bound, Rational ratio) {
  return r.qm_value == qm && r.classical_bound == bound && r.ratio && *r.ratio == ratio;
}

void certificate_checks(Checklist& list, const std::string& prefix, const MeasurementSet& s) {
  Stopwatch clock;
  const ParadoxCertificate c = verify_paradox(s);
  const bool parity = std::all_of(c.parity_ok.begin(), c.parity_ok.end(), [](bool b) { return b; });
  list.add(prefix + " parity", parity,
           std::to_string(std::count(c.parity_ok.begin(), c.parity_ok.end(), true)) + "/" +
               std::to_string(c.parity_ok.size()) + " vertices even at d=" + std::to_string(s.d),
           clock);
  list.add(prefix + " stabilizer signs", c.signs_defined(),
           c.signs_defined() ? "all pairs stabilizer-proportional, product " + std::to_string(c.sign_product())
                             : "some pair is not stabilizer-proportional",
           clock);
  list.add(prefix + " product", c.product_is_minus_one && c.sign_product() == -1,
           c.product_is_minus_one ? "submeasurements multiply to -1" : "submeasurements do not multiply to -1", clock);
  list.add(prefix + " certificate", c.overall, c.overall ? "overall true" : "overall false", clock);
  if (c.signs_defined()) {
    const bool f = feasible(build_system(s));
    list.add(prefix + " infeasible", !f, f ? "a deterministic strategy exists" : "no deterministic strategy", clock);
  }
}

void reproduce_table1(Checklist& list, const Options& opt) {
  const MeasurementSet fixture = load_set(opt, "table1_9cycle");
  certificate_checks(list, "table1 fixture", fixture);

  Stopwatch clock;
  const MeasurementSet base = load_set(opt, "triangle_ghsz");
  const InflatedSet built = build_inflated_set(base, 1);
  list.add("table1 size", built.set.pairs.size() == 10 && built.report.decoy_pairs == 3,
           std::to_string(built.set.pairs.size()) + " pairs, " + std::to_string(built.report.decoy_pairs) + " decoy pairs",
           clock);
  list.add("table1 rows", same_rows(built.set, fixture), "built set equals the fixture up to row order", clock);
}

void reproduce_chain7(Checklist& list, const Options& opt) {
  Stopwatch clock;
  const MeasurementSet base = load_set(opt, "ghz_path3");
  const BellReport base_bell = bell_report(base, opt.cap);
  list.add("ghz base bound", bell_is(base_bell, 4, 2, Rational(2)), bell_text(base_bell), clock);

  const MeasurementSet fixture = load_set(opt, "chain7");
  certificate_checks(list, "chain7 fixture", fixture);
  const InflatedSet built = build_inflated_set(base, 1);
  list.add("chain7 rows", same_rows(built.set, fixture),
           std::to_string(built.set.pairs.size()) + " pairs, equal to the fixture up to row order", clock);
  const BellReport bell = bell_report(built.set, opt.cap, built.report.decoy_pairs);
  list.add("chain7 bound", bell_is(bell, 6, 4, Rational(3, 2)), bell_text(bell), clock);
}

void reproduce_cycle5(Checklist& list, const Options& opt) {
  const MeasurementSet fixture = load_set(opt, "cycle5");
  certificate_checks(list, "cycle5 fixture", fixture);
  Stopwatch clock;
  const BellReport bell = bell_report(fixture, opt.cap);
  list.add("cycle5 bound", bell_is(bell, 16, 14, Rational(8, 7)), bell_text(bell), clock);
}

void reproduce_chsh4(Checklist& list, const Options& opt) {
  Stopwatch clock;
  const Graph path = build_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}});
  const StateVector psi = graph_state(path);
  // R(-pi/2) = -R(3pi/2): the second setting of vertex 1 with its output relabelled.
  const double qm = psi.expect(chsh_operator(std::numbers::pi / 2, -std::numbers::pi / 2));
  const double stated = psi.expect(chsh_operator(std::numbers::pi / 2, 3 * std::numbers::pi / 2));
  std::ostringstream q;
  q.precision(15);
  q << "<B> = " << qm << " at (pi/2, -pi/2); " << stated << " at (pi/2, 3pi/2)";
  list.add("chsh4 quantum", std::abs(qm - 2 * std::numbers::sqrt2) < 1e-9, q.str(), clock);

  const Rational bound = binary_game_bound(chsh4_game(1), opt.cap);
  list.add("chsh4 classical", bound == Rational(2), "d=1 bound " + ratio_string(bound), clock);
  const double ratio = qm / boost::rational_cast<double>(bound);
  std::ostringstream r;
  r.precision(15);
  r << "ratio " << ratio;
  list.add("chsh4 ratio", std::abs(ratio - std::numbers::sqrt2) < 1e-9, r.str(), clock);

  const Rational full = binary_game_bound(chsh4_game(3), opt.cap);
  list.add("chsh4 full communication", full == Rational(4), "d=3 bound " + ratio_string(full), clock);
  const Rational plain = binary_game_bound(chsh_game(), opt.cap);
  list.add("chsh plain", plain == Rational(2), "two-party bound " + ratio_string(plain), clock);
}

std::string rule_text(const Graph& g, const FlipRule& r) {
  std::string s = "vertex " + g.label(r.vertex) + ":";
  for (const auto& [v, l] : r.pattern) s += std::string(" ") + letter_char(l) + g.label(v);
  return s;
}

void reproduce_small_graphs(Checklist& list, const Options& opt) {
  const auto records = io::rules_from_json(io::read_json(opt.data_dir / "flip_rules.json"));
  {
    Stopwatch clock;
    const SmallGraphReport report = verify_small_graphs(records);
    for (const SmallGraphResult& r : report.graphs) {
      list.add("small-graphs " + r.graph_id, r.mismatch_count == 0,
               std::to_string(r.mismatch_count) + " mismatches in " + std::to_string(r.checked) + " pairs, " +
                   std::to_string(r.rules.size()) + " rules after symmetry",
               clock);
    }
    list.add("small-graphs total", report.total_mismatches == 0,
             std::to_string(report.total_mismatches) + " mismatches over " + std::to_string(report.graphs.size()) + " graphs",
             clock);
  }
  if (!opt.search) return;

  for (const auto& [id, g] : small_graphs()) {
    Stopwatch clock;
    std::vector<FlipRule> seed;
    for (const RuleRecord& rec : records) {
      if (rec.graph_id == id && rec.source == "figure") seed.push_back(to_rule(g, rec));
    }
    const std::vector<FlipRule> added = search_flip_rules(g, seed);
    std::vector<FlipRule> all = seed;
    all.insert(all.end(), added.begin(), added.end());
    const SmallGraphResult r = compare_with_quantum(id, {g, expand_by_symmetry(g, all)});
    std::string detail = std::to_string(added.size()) + " orbit(s) added";
    for (const FlipRule& f : added) detail += "; " + rule_text(g, f);
    list.add("search " + id, r.mismatch_count == 0, detail, clock);
  }
}

void reproduce_random(Checklist& list, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::size_t built_count = 0;
  std::size_t failures = 0;
  std::size_t zero_decoys = 0;
  std::size_t max_decoys = 0;
  Stopwatch clock;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
    const Graph g = random_connected_graph(n, 0.3, rng);
    const auto base = discover_base_set(g);
    if (!base) {
      ++failures;
      std::cout << "  graph " << i << ": no base set found\n";
      continue;
    }
    const BellReport base_bell = bell_report(*base, opt.cap);
    for (std::size_t d = 1; d <= 2; ++d) {
      const InflatedSet built = build_inflated_set(*base, d);
      const std::size_t s = built.report.decoy_pairs;
      const BellReport bell = bell_report(built.set, opt.cap, s);
      const bool ok = built.report.certificate.overall && !feasible(build_system(built.set)) &&
                      bell.qm_value == base_bell.qm_value + 2 * s &&
                      bell.classical_bound == base_bell.classical_bound + 2 * static_cast<long long>(s) &&
                      bell.min_violations % 2 == 1 && base_bell.ratio && bell.ratio && *base_bell.ratio >= *bell.ratio;
      ++built_count;
      zero_decoys += s == 0;
      max_decoys = std::max(max_decoys, s);
      if (!ok) {
        ++failures;
        std::cout << "  graph " << i << " d=" << d << ": base " << bell_text(base_bell) << ", inflated " << bell_text(bell)
                  << ", s=" << s << ", certified=" << built.report.certificate.overall << "\n";
      }
    }
  }
  list.add("random-inflation", failures == 0,
           std::to_string(built_count) + " inflated sets from seed " + std::to_string(opt.seed) + ", " +
               std::to_string(failures) + " failures, " + std::to_string(zero_decoys) + " without decoys, at most " +
               std::to_string(max_decoys) + " decoy pairs",
           clock);
}

}  // namespace

int cmd_reproduce(const std::string& name, const Options& opt) {
  Stopwatch clock;
  Checklist list;
  if (name == "table1") {
    reproduce_table1(list, opt);
  } else if (name == "chain7") {
    reproduce_chain7(list, opt);
  } else if (name == "cycle5") {
    reproduce_cycle5(list, opt);
  } else if (name == "chsh4") {
    reproduce_chsh4(list, opt);
  } else if (name == "small-graphs") {
    reproduce_small_graphs(list, opt);
  } else if (name == "random-inflation") {
    reproduce_random(list, opt);
  } else {
    throw InputError("unknown reproduction '" + name + "'");
  }
  if (opt.out) {
    Json report;
    report["command"] = "reproduce";
    report["name"] = name;
    report["parameters"] = {{"cap", opt.cap}, {"seed", opt.seed}, {"count", opt.count}, {"search", opt.search}};
    report["checks"] = list.json();
    report["all_pass"] = list.all_pass();
    Json run = run_report(std::move(report), clock.seconds());
    run["timing"]["checks"] = list.timing();
    io::write_text(*opt.out, run.dump(2) + "\n");
  }
  return list.all_pass() ? kOk : kFalse;
}

}  // namespace ilhv::cli
