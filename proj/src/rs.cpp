#include "esf/rs.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

namespace esf {

RSRow geometric_rs(const Bipartition& bp, const StandardBitableau& t, const StandardBitableau& tprime,
                   std::uint64_t seed, const RSOptions& opts) {
  if (t.shape() != bp || tprime.shape() != bp) throw std::invalid_argument("geometric_rs: shapes differ from bp");
  if (opts.samples < 3) throw std::invalid_argument("geometric_rs: need at least 3 samples");
  const ExoticPoint p = build_normal_form(bp);
  std::map<SignedPerm, int> tally;
  for (int s = 0; s < opts.samples; ++s) {
    Rng rf(derive_seed(seed, {static_cast<std::uint64_t>(s), 0}));
    Rng rg(derive_seed(seed, {static_cast<std::uint64_t>(s), 1}));
    Flag f = sample_flag_for_point(p, t, rf, opts.sampler);
    Flag g = sample_flag_for_point(p, tprime, rg, opts.sampler);
    ++tally[relative_position(f, g)];
  }
  const SignedPerm* best = nullptr;
  for (const auto& [w, count] : tally) {
    if (!best) {
      best = &w;
      continue;
    }
    int lw = length(w), lb = length(*best);
    if (lw > lb || (lw == lb && count > tally.at(*best))) best = &w;
  }
  RSRow row{bp, t, tprime, *best, opts.samples, static_cast<double>(tally.at(*best)) / opts.samples};
  if (row.consensus + 1e-12 < opts.threshold) {
    std::ostringstream os;
    os << "geometric_rs: no consensus for " << bp.to_string() << " T=" << t.display() << " T'=" << tprime.display()
       << ":";
    for (const auto& [w, count] : tally) os << " " << w.display() << "(len " << length(w) << ")x" << count;
    throw ConsensusError(os.str(), tally);
  }
  return row;
}

std::string bijection_report(int n, const std::vector<RSRow>& rows) {
  std::map<SignedPerm, std::vector<std::size_t>> hits;
  for (std::size_t i = 0; i < rows.size(); ++i) hits[rows[i].w].push_back(i);
  std::ostringstream os;
  for (const auto& w : enumerate_weyl(n)) {
    auto it = hits.find(w);
    if (it == hits.end()) {
      os << "missing " << w.display() << "\n";
    } else if (it->second.size() > 1) {
      os << "duplicate " << w.display() << " from";
      for (auto i : it->second)
        os << " [" << rows[i].bp.to_string() << " " << rows[i].T.display() << " " << rows[i].Tprime.display() << "]";
      os << "\n";
    }
  }
  for (const auto& [w, idx] : hits)
    if (w.n() != n) os << "wrong rank " << w.display() << "\n";
  return os.str();
}

std::vector<RSRow> full_table(int n, std::uint64_t seed, const RSOptions& opts) {
  struct Job {
    std::size_t b, i, j;
    Bipartition bp;
    StandardBitableau t, tp;
  };
  std::vector<Job> jobs;
  auto bps = enumerate_bipartitions(n);
  for (std::size_t b = 0; b < bps.size(); ++b) {
    auto sybs = enumerate_syb(bps[b]);
    for (std::size_t i = 0; i < sybs.size(); ++i)
      for (std::size_t j = 0; j < sybs.size(); ++j) jobs.push_back({b, i, j, bps[b], sybs[i], sybs[j]});
  }
  std::vector<RSRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      const auto& job = jobs[k];
      try {
        rows[k] = geometric_rs(job.bp, job.t, job.tp, derive_seed(seed, {job.b, job.i, job.j}), opts);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::string report = bijection_report(n, rows);
  if (!report.empty()) throw BijectionError("full_table: not a bijection onto W(C_" + std::to_string(n) + ")\n" + report, rows);
  return rows;
}

namespace {

/// Row insertion; returns the row index (0-based) where the tableau grew.
int row_insert(std::vector<std::vector<int>>& rows, int value) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({value});
      return static_cast<int>(r);
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return static_cast<int>(r);
    }
    std::swap(*it, value);
  }
}

}  // namespace

std::pair<StandardBitableau, StandardBitableau> naive_rs(const SignedPerm& w) {
  StandardBitableau p, q;
  for (int i = 1; i <= w.n(); ++i) {
    int a = w(i);
    auto& prows = a > 0 ? p.left : p.right;
    auto& qrows = a > 0 ? q.left : q.right;
    auto r = static_cast<std::size_t>(row_insert(prows, std::abs(a)));
    if (r == qrows.size()) qrows.emplace_back();
    qrows[r].push_back(i);
  }
  return {p, q};
}

std::vector<NaiveDisagreement> compare_naive_geometric(const std::vector<RSRow>& table) {
  std::vector<NaiveDisagreement> out;
  for (const auto& row : table) {
    auto [p, q] = naive_rs(row.w);
    if (p != row.T || q != row.Tprime) out.push_back({row.w, row.T, row.Tprime, p, q});
  }
  return out;
}

std::vector<NaiveDisagreement> compare_naive_geometric(int n, std::uint64_t seed, const RSOptions& opts) {
  if (n < 1) throw std::invalid_argument("compare_naive_geometric: n must be positive");
  return compare_naive_geometric(full_table(n, seed, opts));
}

}  // namespace esf
