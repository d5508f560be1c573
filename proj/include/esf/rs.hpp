#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "esf/combinatorics.hpp"
#include "esf/jordancalc.hpp"
#include "esf/weyl.hpp"

namespace esf {

struct RSRow {
  Bipartition bp;
  StandardBitableau T;
  StandardBitableau Tprime;
  SignedPerm w;
  int samples_used = 0;
  double consensus = 0.0;  // fraction of samples that produced w
};

inline SamplerOptions rs_sampler_defaults() {
  SamplerOptions o;
  o.height = 1000000;
  return o;
}

struct RSOptions {
  int samples = 8;
  double threshold = 0.9;
  SamplerOptions sampler = rs_sampler_defaults();
  unsigned threads = 0;  // 0: hardware concurrency
};

class ConsensusError : public std::runtime_error {
 public:
  ConsensusError(const std::string& what, std::map<SignedPerm, int> tally)
      : std::runtime_error(what), tally_(std::move(tally)) {}
  const std::map<SignedPerm, int>& tally() const { return tally_; }

 private:
  std::map<SignedPerm, int> tally_;
};

class BijectionError : public std::runtime_error {
 public:
  BijectionError(const std::string& what, std::vector<RSRow> rows)
      : std::runtime_error(what), rows_(std::move(rows)) {}
  const std::vector<RSRow>& rows() const { return rows_; }

 private:
  std::vector<RSRow> rows_;
};

/// Generic relative position of flags F in Phi^-1(T) and F' in Phi^-1(T')
/// over the normal form of bp: the longest sampled w, accepted when it
/// shows up in at least the threshold fraction of samples.
RSRow geometric_rs(const Bipartition& bp, const StandardBitableau& t, const StandardBitableau& tprime,
                   std::uint64_t seed, const RSOptions& opts = {});

/// One row per same-shape pair over all bipartitions of n, in the order of
/// enumerate_bipartitions and enumerate_syb. Pair (b, i, j) uses the seed
/// derive_seed(seed, {b, i, j}). Throws BijectionError when the w column is
/// not exactly W(C_n).
std::vector<RSRow> full_table(int n, std::uint64_t seed, const RSOptions& opts = {});

/// Empty string when the rows biject onto W(C_n), else a diagnostic listing.
std::string bijection_report(int n, const std::vector<RSRow>& rows);

/// Row bumping with barred letters inserted into the right tableau. Returns
/// (P, Q) where Q records step i where P grew.
std::pair<StandardBitableau, StandardBitableau> naive_rs(const SignedPerm& w);

struct NaiveDisagreement {
  SignedPerm w;
  StandardBitableau T, Tprime;  // geometric
  StandardBitableau P, Q;       // naive
};

std::vector<NaiveDisagreement> compare_naive_geometric(const std::vector<RSRow>& table);
std::vector<NaiveDisagreement> compare_naive_geometric(int n, std::uint64_t seed, const RSOptions& opts = {});

}  // namespace esf
