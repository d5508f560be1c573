#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "esf/combinatorics.hpp"
#include "esf/exactla.hpp"
#include "esf/exotic.hpp"
#include "esf/rng.hpp"

namespace esf {

/// v_1 = sum alpha_i v_{i,1} + sum beta_i v*_{i,lambda_i}, i = 1..l(lambda).
struct LineCoeffs {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  bool is_zero() const;
  /// 1-based access, zero past the end.
  Rational a(int i) const;
  Rational b(int i) const;
  std::string to_string() const;
};

LineCoeffs zero_coeffs(const Bipartition& bp);
RatVector line_vector(const Bipartition& bp, const LineCoeffs& c);
/// Inverse of line_vector on ker x. Throws if vec is not in ker x.
LineCoeffs coeffs_of_vector(const Bipartition& bp, const RatVector& vec);
/// Coordinates (alpha_1..alpha_l, beta_1..beta_l).
RatVector flatten(const LineCoeffs& c);
LineCoeffs unflatten(const RatVector& flat);

/// Indices i with nu_i = 0 < mu_i; v_1 is perpendicular to C[x]v iff the
/// betas over these rows sum to zero.
std::vector<int> perp_rows(const Bipartition& bp);
bool satisfies_perp(const Bipartition& bp, const LineCoeffs& c);

struct IndexData {
  int m = 0;
  int m_bar = 0;
  std::vector<int> Lambda_m;
  std::vector<int> Gamma_m;  // empty when m > l(mu)
  std::vector<int> Delta_m;  // nu padded with zeros up to l(lambda)
  std::vector<int> Gamma_alpha;
  std::vector<int> Gamma_beta;
  std::optional<int> m_alpha;
  std::optional<int> m_beta;
  std::optional<int> m_prime;
  std::optional<int> m_dprime;
};

IndexData index_data(const Bipartition& bp, const LineCoeffs& c);

Partition predict_quotient_lambda(const Bipartition& bp, const LineCoeffs& c);
/// (mu_1+nu_1, mu_2+nu_1, mu_2+nu_2, mu_3+nu_2, ...)
Partition rho_of(const Bipartition& bp);

struct KPrediction {
  bool in_cxv = false;
  std::optional<int> k;
};

/// True iff the line of c lies inside C[x]v for the normal form of bp.
bool line_in_cxv(const Bipartition& bp, const LineCoeffs& c);
KPrediction predict_k(const Bipartition& bp, const LineCoeffs& c);
int predict_l(const Bipartition& bp, const LineCoeffs& c);

/// Removes the bottom box of column col; throws std::logic_error when that
/// box is not a corner.
Partition remove_column_corner(const Partition& rho, int col);

/// eType after the line, from the three column indices: lambda loses its
/// last row of length j, rho loses the column-k box (skipped when k is
/// unset) and then the column-l box.
Bipartition etype_from_columns(const Partition& lambda, const Partition& rho, int j, std::optional<int> k, int l);

Bipartition predict_etype_after_line(const Bipartition& bp, const LineCoeffs& c);

/// Closure of the B-variety in coefficient coordinates (alpha, beta) for the
/// removal of one box from bp. A linear subspace of Q^(2 l(lambda)).
Subspace bvariety_coefficient_closure(const Bipartition& bp, const Bipartition& removed);

/// The same closure computed from (v, x) alone, as a subspace of the ambient
/// space. Works for points without a normal basis.
Subspace bvariety_closure_intrinsic(const ExoticPoint& p, const Bipartition& removed);

struct SamplerOptions {
  int height = 20;
  int max_tries = 200;
  bool double_height_on_exhaustion = true;
};

class SamplerError : public std::runtime_error {
 public:
  SamplerError(const std::string& what, int level, int tries, std::string last)
      : std::runtime_error(what), level_(level), tries_(tries), last_(std::move(last)) {}
  int level() const { return level_; }
  int tries() const { return tries_; }
  const std::string& last_attempt() const { return last_; }

 private:
  int level_;
  int tries_;
  std::string last_;
};

/// Random nonzero coefficients satisfying the perp condition, biased towards
/// the special configurations the calculus distinguishes: repeated alphas,
/// vanishing betas, beta sums that cancel, and short supports.
LineCoeffs random_admissible_coeffs(const Bipartition& bp, Rng& rng);

/// Samples a line F1 with eType(reduce_by_line(p, F1)) = target, using
/// coefficient coordinates. p must come from build_normal_form.
Subspace sample_line_for_shape(const ExoticPoint& p, const Bipartition& target, Rng& rng,
                               const SamplerOptions& opts = {});

/// As sample_line_for_shape, for an arbitrary point.
Subspace sample_line_intrinsic(const ExoticPoint& p, const Bipartition& target, Rng& rng,
                               const SamplerOptions& opts = {}, int level = 0);

/// Flag in the fibre of p with Phi = T, built by recursion on the reduced
/// points. The result is checked with phi before it is returned.
Flag sample_flag_for_point(const ExoticPoint& p, const StandardBitableau& t, Rng& rng,
                           const SamplerOptions& opts = {});

Flag sample_generic_flag(const Bipartition& bp, const StandardBitableau& t, Rng& rng,
                         const SamplerOptions& opts = {});

}  // namespace esf
