#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "esf/combinatorics.hpp"
#include "esf/jordancalc.hpp"
#include "esf/oracle.hpp"
#include "esf/rs.hpp"
#include "esf/serialize.hpp"

using namespace esf;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xE307C;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  bool n_given = false;
  std::string bp;
  std::string seed = "0xE307C";
  int samples = 0;
  std::string format = "tsv";
  std::string out;
  bool all = false;
  bool allow_slow = false;

  std::uint64_t seed_value() const {
    try {
      std::size_t used = 0;
      auto v = std::stoull(seed, &used, 0);
      if (used != seed.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad --seed '" + seed + "'");
    }
  }

  Bipartition bipartition() const {
    try {
      return Bipartition::parse(bp);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --bp: ") + e.what());
    }
  }

  bool json() const { return format == "json"; }
};

int cmd_syb(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.bp.empty()) {
    const Bipartition bp = cfg.bipartition();
    auto syb = enumerate_syb(bp);
    if (cfg.json()) {
      Json j;
      j["bipartition"] = bp.to_string();
      j["count"] = syb.size();
      j["b_dim"] = b_dim(bp);
      Json ts = Json::array();
      for (const auto& t : syb) ts.push_back(to_json(t));
      j["tableaux"] = ts;
      out << j.dump() << "\n";
    } else {
      out << "bipartition " << bp.to_string() << "\n";
      out << "count = " << syb.size() << "\n";
      out << "b_dim = " << b_dim(bp) << "\n";
      for (const auto& t : syb) out << t.display() << "\n";
    }
    return 0;
  }
  if (!cfg.all || !cfg.n_given) throw UsageError("syb needs --bp, or --all with --n");
  if (cfg.n < 0) throw UsageError("--n must be nonnegative");
  long long sum = 0;
  if (!cfg.json()) out << "mu\tnu\tcount\tb_dim\n";
  for (const auto& bp : enumerate_bipartitions(cfg.n)) {
    const auto count = static_cast<long long>(enumerate_syb(bp).size());
    sum += count * count;
    if (cfg.json()) {
      Json j;
      j["mu"] = bp.mu.to_string();
      j["nu"] = bp.nu.to_string();
      j["count"] = count;
      j["b_dim"] = b_dim(bp);
      out << j.dump() << "\n";
    } else {
      out << bp.mu.to_string() << "\t" << bp.nu.to_string() << "\t" << count << "\t" << b_dim(bp) << "\n";
    }
  }
  if (cfg.json()) {
    Json j;
    j["sum_of_squares"] = sum;
    out << j.dump() << "\n";
  } else {
    out << "sum of squares = " << sum << "\n";
  }
  return 0;
}

struct CrosscheckResult {
  int lines = 0;
  int mismatches = 0;
  int closures_checked = 0;
  int closure_failures = 0;
  std::map<Bipartition, int> outcomes;
  std::vector<std::string> details;
};

CrosscheckResult crosscheck_one(const Bipartition& bp, int samples, std::uint64_t seed) {
  CrosscheckResult r;
  auto p = build_normal_form(bp);
  auto loci = line_loci(p);
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    auto c = random_admissible_coeffs(bp, rng);
    auto m = measure_line(p, loci, Subspace::span({line_vector(bp, c)}, p.space.dim()));
    ++r.lines;
    std::string err;
    try {
      auto ql = predict_quotient_lambda(bp, c);
      auto k = predict_k(bp, c);
      int l = predict_l(bp, c);
      auto e = predict_etype_after_line(bp, c);
      if (ql != m.quotient_lambda) err += " quotient " + ql.to_string() + " vs " + m.quotient_lambda.to_string();
      if (k.in_cxv != m.in_cxv || k.k != m.k)
        err += " k " + (k.k ? std::to_string(*k.k) : "-") + " vs " + (m.k ? std::to_string(*m.k) : "-");
      if (l != m.l) err += " l " + std::to_string(l) + " vs " + std::to_string(m.l);
      if (e != m.etype_after) err += " etype " + e.to_string() + " vs " + m.etype_after.to_string();
    } catch (const std::exception& ex) {
      err += std::string(" exception: ") + ex.what();
    }
    ++r.outcomes[m.etype_after];
    if (!err.empty()) {
      ++r.mismatches;
      r.details.push_back(c.to_string() + ":" + err);
    }
  }
  for (const auto& box : removable_boxes(bp)) {
    ++r.closures_checked;
    try {
      auto cc = bvariety_coefficient_closure(bp, box.smaller);
      std::vector<RatVector> vs;
      for (const auto& row : cc.vectors()) vs.push_back(line_vector(bp, unflatten(row)));
      auto ambient = Subspace::span(vs, p.space.dim());
      if (!(ambient == bvariety_closure_intrinsic(p, box.smaller)) ||
          ambient.dim() - 1 != predict_bvariety_dim(bp, box.smaller)) {
        ++r.closure_failures;
        r.details.push_back("closure -> " + box.smaller.to_string());
      }
    } catch (const std::exception& ex) {
      ++r.closure_failures;
      r.details.push_back("closure -> " + box.smaller.to_string() + ": " + ex.what());
    }
  }
  return r;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  std::vector<Bipartition> bps;
  if (!cfg.bp.empty()) {
    bps.push_back(cfg.bipartition());
  } else {
    if (!cfg.n_given) throw UsageError("crosscheck needs --n or --bp");
    if (cfg.n < 0) throw UsageError("--n must be nonnegative");
    bps = enumerate_bipartitions(cfg.n);
  }
  const int samples = cfg.samples > 0 ? cfg.samples : 100;
  const std::uint64_t seed = cfg.seed_value();
  int lines = 0, mismatches = 0, checked_bps = 0;
  if (!cfg.json()) out << "bipartition\tlines\tmismatches\tclosures\toutcomes\n";
  for (std::size_t b = 0; b < bps.size(); ++b) {
    const auto& bp = bps[b];
    if (bp.size() == 0) continue;
    ++checked_bps;
    auto r = crosscheck_one(bp, samples, derive_seed(seed, {b}));
    lines += r.lines;
    mismatches += r.mismatches + r.closure_failures;
    if (cfg.json()) {
      Json j;
      j["bipartition"] = bp.to_string();
      j["lines"] = r.lines;
      j["mismatches"] = r.mismatches;
      j["closures"] = r.closures_checked;
      j["closure_failures"] = r.closure_failures;
      Json o = Json::object();
      for (const auto& [e, count] : r.outcomes) o[e.to_string()] = count;
      j["outcomes"] = o;
      j["details"] = r.details;
      out << j.dump() << "\n";
    } else {
      std::string outcomes;
      for (const auto& [e, count] : r.outcomes) outcomes += (outcomes.empty() ? "" : " ") + e.to_string() + ":" + std::to_string(count);
      out << bp.to_string() << "\t" << r.lines << "\t" << r.mismatches << "\t"
          << (r.closures_checked - r.closure_failures) << "/" << r.closures_checked << "\t" << outcomes << "\n";
      for (const auto& d : r.details) out << "  " << d << "\n";
    }
  }
  const bool pass = mismatches == 0;
  if (cfg.json()) {
    Json j;
    j["bipartitions"] = checked_bps;
    j["lines"] = lines;
    j["pass"] = pass;
    out << j.dump() << "\n";
  } else {
    out << (pass ? "PASS" : "FAIL") << ": " << checked_bps << " bipartitions, " << lines << " lines, " << mismatches
        << " mismatches\n";
  }
  return pass ? 0 : kExitCheck;
}

void check_size(const RunConfig& cfg) {
  if (!cfg.n_given) throw UsageError("--n is required");
  if (cfg.n < 1) throw UsageError("--n must be positive");
  if (cfg.n > 3 && !cfg.allow_slow) throw UsageError("n > 3 takes minutes to hours; pass --allow-slow");
}

RSOptions rs_options(const RunConfig& cfg) {
  RSOptions opts;
  if (cfg.samples > 0) opts.samples = cfg.samples;
  if (opts.samples < 3) throw UsageError("--samples must be at least 3");
  return opts;
}

void write_rows(const RunConfig& cfg, const std::vector<RSRow>& rows, std::ostream& out) {
  if (!cfg.json()) out << tsv_header() << "\n";
  for (const auto& r : rows) out << (cfg.json() ? to_json(r).dump() : to_tsv(r)) << "\n";
}

int cmd_rs_table(const RunConfig& cfg, std::ostream& out) {
  check_size(cfg);
  const auto opts = rs_options(cfg);
  try {
    auto rows = full_table(cfg.n, cfg.seed_value(), opts);
    write_rows(cfg, rows, out);
    std::cerr << "bijection onto W(C_" << cfg.n << "): " << rows.size() << " elements\n";
    return 0;
  } catch (const BijectionError& e) {
    write_rows(cfg, e.rows(), out);
    std::cerr << e.what() << "\n";
    return kExitCheck;
  }
}

int cmd_naive_compare(const RunConfig& cfg, std::ostream& out) {
  check_size(cfg);
  const auto opts = rs_options(cfg);
  auto diffs = compare_naive_geometric(cfg.n, cfg.seed_value(), opts);
  if (!cfg.json()) out << "w\tT\tTprime\tP\tQ\n";
  for (const auto& d : diffs) {
    if (cfg.json())
      out << to_json(d).dump() << "\n";
    else
      out << d.w.to_string() << "\t" << d.T.display() << "\t" << d.Tprime.display() << "\t" << d.P.display() << "\t"
          << d.Q.display() << "\n";
  }
  std::cerr << diffs.size() << " of " << enumerate_weyl(cfg.n).size() << " elements differ\n";
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_bp, bool with_samples) {
  sub->add_option_function<int>(
      "--n", [&cfg](const int& n) { cfg.n = n, cfg.n_given = true; }, "rank n");
  if (with_bp) sub->add_option("--bp", cfg.bp, "bipartition as mu|nu, e.g. 3,1|2,2,1");
  sub->add_option("--seed", cfg.seed, "random seed (default 0xE307C)");
  if (with_samples) sub->add_option("--samples", cfg.samples, "samples per bipartition or per pair");
  sub->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--out", cfg.out, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bitableaux, line-calculus cross-checks and the exotic RS table"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* syb = app.add_subcommand("syb", "list standard bitableaux of a bipartition");
  add_common(syb, cfg, true, false);
  syb->add_flag("--all", cfg.all, "summarise every bipartition of n");

  auto* cross = app.add_subcommand("crosscheck", "check the closed-form line calculus against linear algebra");
  add_common(cross, cfg, true, true);

  auto* table = app.add_subcommand("rs-table", "geometric exotic RS correspondence");
  add_common(table, cfg, false, true);
  table->add_flag("--allow-slow", cfg.allow_slow, "permit n > 3");

  auto* naive = app.add_subcommand("naive-compare", "where naive row bumping differs from the geometric table");
  add_common(naive, cfg, false, true);
  naive->add_flag("--allow-slow", cfg.allow_slow, "permit n > 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "cannot open " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = cfg.out.empty() ? std::cout : file;

  try {
    if (*syb) return cmd_syb(cfg, out);
    if (*cross) return cmd_crosscheck(cfg, out);
    if (*table) return cmd_rs_table(cfg, out);
    if (*naive) return cmd_naive_compare(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  return kExitUsage;
}
