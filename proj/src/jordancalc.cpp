#include "esf/jordancalc.hpp"

#include <algorithm>
#include <sstream>

#include "esf/oracle.hpp"

namespace esf {

namespace {

int lambda_length(const Bipartition& bp) { return bp.lambda().length(); }

bool all_equal_on(const LineCoeffs& c, int from, int to, const Rational& value, bool use_alpha) {
  for (int j = from; j <= to; ++j)
    if ((use_alpha ? c.a(j) : c.b(j)) != value) return false;
  return true;
}

RatVector random_point(const Subspace& s, Rng& rng, int height) {
  RatVector out(static_cast<std::size_t>(s.ambient_dim()), Rational(0));
  for (int r = 0; r < s.dim(); ++r) {
    Rational coeff(static_cast<long>(rng.uniform(-height, height)));
    if (sgn(coeff) == 0) continue;
    for (int c = 0; c < s.ambient_dim(); ++c) out[static_cast<std::size_t>(c)] += coeff * s.basis()(r, c);
  }
  return out;
}

std::string vector_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

bool LineCoeffs::is_zero() const { return esf::is_zero(alpha) && esf::is_zero(beta); }

Rational LineCoeffs::a(int i) const {
  if (i < 1 || i > static_cast<int>(alpha.size())) return 0;
  return alpha[static_cast<std::size_t>(i - 1)];
}

Rational LineCoeffs::b(int i) const {
  if (i < 1 || i > static_cast<int>(beta.size())) return 0;
  return beta[static_cast<std::size_t>(i - 1)];
}

std::string LineCoeffs::to_string() const {
  std::ostringstream os;
  os << "alpha=" << vector_string(alpha) << " beta=" << vector_string(beta);
  return os.str();
}

LineCoeffs zero_coeffs(const Bipartition& bp) {
  auto l = static_cast<std::size_t>(lambda_length(bp));
  return {std::vector<Rational>(l, Rational(0)), std::vector<Rational>(l, Rational(0))};
}

RatVector line_vector(const Bipartition& bp, const LineCoeffs& c) {
  const Partition lambda = bp.lambda();
  if (static_cast<int>(c.alpha.size()) > lambda.length() || static_cast<int>(c.beta.size()) > lambda.length())
    throw std::invalid_argument("line_vector: more coefficients than rows");
  RatVector v(static_cast<std::size_t>(2 * bp.size()), Rational(0));
  for (int i = 1; i <= lambda.length(); ++i) {
    v[static_cast<std::size_t>(normal_index(bp, i, 1, false))] += c.a(i);
    v[static_cast<std::size_t>(normal_index(bp, i, lambda.part(i), true))] += c.b(i);
  }
  return v;
}

LineCoeffs coeffs_of_vector(const Bipartition& bp, const RatVector& vec) {
  LineCoeffs c = zero_coeffs(bp);
  const Partition lambda = bp.lambda();
  for (int i = 1; i <= lambda.length(); ++i) {
    c.alpha[static_cast<std::size_t>(i - 1)] = vec.at(static_cast<std::size_t>(normal_index(bp, i, 1, false)));
    c.beta[static_cast<std::size_t>(i - 1)] =
        vec.at(static_cast<std::size_t>(normal_index(bp, i, lambda.part(i), true)));
  }
  if (line_vector(bp, c) != vec) throw std::invalid_argument("coeffs_of_vector: vector is not in ker x");
  return c;
}

RatVector flatten(const LineCoeffs& c) {
  RatVector out = c.alpha;
  out.insert(out.end(), c.beta.begin(), c.beta.end());
  return out;
}

LineCoeffs unflatten(const RatVector& flat) {
  if (flat.size() % 2 != 0) throw std::invalid_argument("unflatten: odd length");
  auto half = static_cast<std::ptrdiff_t>(flat.size() / 2);
  return {RatVector(flat.begin(), flat.begin() + half), RatVector(flat.begin() + half, flat.end())};
}

std::vector<int> perp_rows(const Bipartition& bp) {
  std::vector<int> rows;
  for (int i = 1; i <= bp.mu.length(); ++i)
    if (bp.nu.part(i) == 0) rows.push_back(i);
  return rows;
}

bool satisfies_perp(const Bipartition& bp, const LineCoeffs& c) {
  Rational s = 0;
  for (int i : perp_rows(bp)) s += c.b(i);
  return sgn(s) == 0;
}

IndexData index_data(const Bipartition& bp, const LineCoeffs& c) {
  const Partition lambda = bp.lambda();
  const int len = lambda.length();
  IndexData d;
  for (int i = 1; i <= len; ++i)
    if (sgn(c.a(i)) != 0 || sgn(c.b(i)) != 0) d.m = i;
  if (d.m == 0) throw std::invalid_argument("index_data: all coefficients are zero");
  const int m = d.m;
  for (int i = 1; i <= len; ++i) {
    if (lambda.part(i) == lambda.part(m)) d.Lambda_m.push_back(i);
    if (m <= bp.mu.length() && bp.mu.part(i) == bp.mu.part(m)) d.Gamma_m.push_back(i);
    if (bp.nu.part(i) == bp.nu.part(m)) d.Delta_m.push_back(i);
  }
  d.m_bar = d.Lambda_m.back();
  if (!d.Gamma_m.empty()) {
    const int gmax = d.Gamma_m.back();
    const Rational am = c.a(m);
    for (int i : d.Gamma_m) {
      if (sgn(am) != 0 && all_equal_on(c, i, gmax, am, true)) d.Gamma_alpha.push_back(i);
      if (all_equal_on(c, i, gmax, Rational(0), false)) d.Gamma_beta.push_back(i);
    }
  }
  if (!d.Gamma_alpha.empty()) d.m_alpha = d.Gamma_alpha.front();
  if (!d.Gamma_beta.empty()) d.m_beta = d.Gamma_beta.front();
  if (d.m_alpha && d.m_beta) d.m_prime = std::max(*d.m_alpha, *d.m_beta);
  d.m_dprime = d.Delta_m.back() + 1;
  return d;
}

Partition predict_quotient_lambda(const Bipartition& bp, const LineCoeffs& c) {
  auto d = index_data(bp, c);
  auto parts = bp.lambda().parts();
  --parts[static_cast<std::size_t>(d.m_bar - 1)];
  return Partition(parts);
}

Partition rho_of(const Bipartition& bp) {
  std::vector<int> parts;
  for (int i = 1; i <= bp.lambda().length(); ++i) {
    parts.push_back(bp.mu.part(i) + bp.nu.part(i));
    parts.push_back(bp.mu.part(i + 1) + bp.nu.part(i));
  }
  return Partition(parts);
}

bool line_in_cxv(const Bipartition& bp, const LineCoeffs& c) {
  if (bp.mu.empty() || c.is_zero()) return false;
  const int top = bp.mu.part(1);
  const Rational lead = c.a(1);
  if (sgn(lead) == 0) return false;
  for (int i = 1; i <= lambda_length(bp); ++i) {
    if (sgn(c.b(i)) != 0) return false;
    if (c.a(i) != (bp.mu.part(i) == top ? lead : Rational(0))) return false;
  }
  return true;
}

KPrediction predict_k(const Bipartition& bp, const LineCoeffs& c) {
  if (c.is_zero()) throw std::invalid_argument("predict_k: all coefficients are zero");
  if (line_in_cxv(bp, c)) return {true, std::nullopt};
  auto d = index_data(bp, c);
  const Partition lambda = bp.lambda();
  if (!d.m_prime) return {false, lambda.part(d.m)};
  if (*d.m_prime <= 1)
    throw std::logic_error("predict_k: m' = 1 for " + bp.to_string() + " with " + c.to_string() +
                           "; the second case needs m' > 1");
  return {false, bp.mu.part(d.m) + bp.nu.part(*d.m_prime - 1)};
}

int predict_l(const Bipartition& bp, const LineCoeffs& c) {
  if (c.is_zero()) throw std::invalid_argument("predict_l: all coefficients are zero");
  auto d = index_data(bp, c);
  const int gmax = d.Gamma_m.empty() ? 0 : d.Gamma_m.back();
  Rational s = 0;
  for (int i : d.Delta_m)
    if (i <= d.m) s += c.b(i);
  if (gmax <= d.Delta_m.back() && sgn(s) != 0) return bp.mu.part(*d.m_dprime) + bp.nu.part(d.m);
  return bp.lambda().part(d.m);
}

Partition remove_column_corner(const Partition& rho, int col) {
  if (col < 1) throw std::logic_error("remove_column_corner: column must be positive");
  int height = 0;
  for (int p : rho.parts())
    if (p >= col) ++height;
  if (height == 0 || rho.part(height) != col)
    throw std::logic_error("remove_column_corner: column " + std::to_string(col) + " of " + rho.to_string() +
                           " has no removable corner");
  auto parts = rho.parts();
  --parts[static_cast<std::size_t>(height - 1)];
  return Partition(parts);
}

Bipartition etype_from_columns(const Partition& lambda, const Partition& rho, int j, std::optional<int> k, int l) {
  int row = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) == j) row = i;
  if (row == 0) throw std::logic_error("etype_from_columns: no row of length " + std::to_string(j));
  auto parts = lambda.parts();
  --parts[static_cast<std::size_t>(row - 1)];
  Partition sigma = rho;
  if (k) sigma = remove_column_corner(sigma, *k);
  sigma = remove_column_corner(sigma, l);
  return bipartition_from_types(Partition(parts), sigma);
}

Bipartition predict_etype_after_line(const Bipartition& bp, const LineCoeffs& c) {
  if (c.is_zero()) throw std::invalid_argument("predict_etype_after_line: all coefficients are zero");
  if (!satisfies_perp(bp, c))
    throw std::invalid_argument("predict_etype_after_line: line is not perpendicular to C[x]v");
  auto d = index_data(bp, c);
  auto k = predict_k(bp, c);
  return etype_from_columns(bp.lambda(), rho_of(bp), bp.lambda().part(d.m_bar), k.k, predict_l(bp, c));
}

Subspace bvariety_coefficient_closure(const Bipartition& bp, const Bipartition& removed) {
  auto box = find_removal(bp, removed);
  if (!box)
    throw std::invalid_argument("bvariety_coefficient_closure: " + removed.to_string() +
                                " is not one box smaller than " + bp.to_string());
  const int len = lambda_length(bp);
  const int mb = box->row;
  auto alpha_e = [len](int i) { return unit_vector(2 * len, i - 1); };
  auto beta_e = [len](int i) { return unit_vector(2 * len, len + i - 1); };
  auto beta_sum = [&](const std::vector<int>& rows) {
    RatVector r(static_cast<std::size_t>(2 * len), Rational(0));
    for (int i : rows) r[static_cast<std::size_t>(len + i - 1)] = 1;
    return r;
  };
  std::vector<RatVector> constraints;
  for (int i = mb + 1; i <= len; ++i) {
    constraints.push_back(alpha_e(i));
    constraints.push_back(beta_e(i));
  }
  if (box->side == Side::Left) {
    if (mb == 1) {
      constraints.push_back(beta_e(1));
    } else if (bp.nu.part(mb - 1) > bp.nu.part(mb)) {
      constraints.push_back(beta_e(mb));
    } else {
      std::vector<int> rows;
      if (bp.nu.part(mb) > 0) {
        for (int i = 1; i <= mb; ++i)
          if (bp.nu.part(i) == bp.nu.part(mb)) rows.push_back(i);
      } else {
        rows = perp_rows(bp);
      }
      constraints.push_back(beta_sum(rows));
    }
  }
  constraints.push_back(beta_sum(perp_rows(bp)));
  return Subspace::from_matrix_rows(nullspace(RatMatrix::from_rows(constraints, 2 * len)));
}

Subspace bvariety_closure_intrinsic(const ExoticPoint& p, const Bipartition& removed) {
  const Bipartition source = etype(p);
  if (!find_removal(source, removed))
    throw std::invalid_argument("bvariety_closure_intrinsic: " + removed.to_string() +
                                " is not one box smaller than " + source.to_string());
  const LineLoci loci = line_loci(p);
  const Partition lambda = source.lambda();
  const Partition rho = rho_of(source);
  const Subspace ker_cxv = intersect(loci.ker_x, loci.cxv);

  std::vector<int> js = lambda.parts();
  js.erase(std::unique(js.begin(), js.end()), js.end());
  std::vector<Subspace> k_options = loci.k_loci;
  k_options.push_back(ker_cxv);

  std::vector<Subspace> seen, matches;
  for (int j : js) {
    Subspace a = intersect(loci.admissible, loci.kernel_images[static_cast<std::size_t>(j - 1)]);
    for (const auto& kl : k_options) {
      Subspace b = intersect(a, kl);
      if (b.dim() == 0) continue;
      for (int l = 1; l <= loci.lambda1; ++l) {
        Subspace cand = intersect(b, loci.l_loci[static_cast<std::size_t>(l - 1)]);
        if (cand.dim() == 0) continue;
        if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
        seen.push_back(cand);
        int jg = 0, lg = 0;
        std::optional<int> kg;
        for (int t = 1; t <= loci.lambda1; ++t) {
          if (loci.kernel_images[static_cast<std::size_t>(t - 1)].contains(cand)) jg = t;
          if (loci.k_loci[static_cast<std::size_t>(t - 1)].contains(cand)) kg = t;
          if (loci.l_loci[static_cast<std::size_t>(t - 1)].contains(cand)) lg = t;
        }
        if (loci.cxv.contains(cand)) kg.reset();
        if (etype_from_columns(lambda, rho, jg, kg, lg) == removed) matches.push_back(cand);
      }
    }
  }
  if (matches.empty())
    throw std::logic_error("bvariety_closure_intrinsic: no locus reaches " + removed.to_string() + " from " +
                           source.to_string());
  auto best = std::max_element(matches.begin(), matches.end(),
                               [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  for (const auto& cand : matches)
    if (cand.dim() == best->dim() && !(cand == *best))
      throw std::logic_error("bvariety_closure_intrinsic: two maximal closures for " + source.to_string() + " -> " +
                             removed.to_string());
  return *best;
}

LineCoeffs random_admissible_coeffs(const Bipartition& bp, Rng& rng) {
  const int len = lambda_length(bp);
  if (len == 0) throw std::invalid_argument("random_admissible_coeffs: empty bipartition");
  const auto perp = perp_rows(bp);
  for (;;) {
    LineCoeffs c = zero_coeffs(bp);
    const int support = static_cast<int>(rng.uniform(1, len));
    const auto mode = rng.uniform(0, 3);
    const Rational run_value(static_cast<long>(rng.uniform(1, 2)));
    const int run_start = static_cast<int>(rng.uniform(1, support));
    for (int i = 1; i <= support; ++i) {
      auto& a = c.alpha[static_cast<std::size_t>(i - 1)];
      auto& b = c.beta[static_cast<std::size_t>(i - 1)];
      a = static_cast<long>(rng.uniform(-1, 2));
      b = static_cast<long>(rng.uniform(-1, 2));
      if ((mode == 1 || mode == 3) && i >= run_start) a = run_value;
      if ((mode == 2 || mode == 3) && i >= run_start) b = 0;
    }
    if (mode == 0)
      for (auto& a : c.alpha) a = static_cast<long>(rng.uniform(-3, 3));
    if (!perp.empty()) {
      Rational s = 0;
      for (std::size_t t = 0; t + 1 < perp.size(); ++t) s += c.b(perp[t]);
      c.beta[static_cast<std::size_t>(perp.back() - 1)] = -s;
    }
    if (!c.is_zero()) return c;
  }
}

namespace {

template <typename Draw>
Subspace rejection_loop(const std::string& what, int level, const SamplerOptions& opts, Draw draw) {
  int height = opts.height;
  int total = 0;
  std::string last = "none";
  for (int round = 0; round < (opts.double_height_on_exhaustion ? 2 : 1); ++round) {
    for (int t = 0; t < opts.max_tries; ++t) {
      ++total;
      if (auto line = draw(height, last)) return *line;
    }
    height *= 2;
  }
  throw SamplerError(what + ": no acceptable line after " + std::to_string(total) + " tries (last " + last + ")",
                     level, total, last);
}

}  // namespace

Subspace sample_line_for_shape(const ExoticPoint& p, const Bipartition& target, Rng& rng,
                               const SamplerOptions& opts) {
  if (!p.space.shape) throw std::invalid_argument("sample_line_for_shape: point has no normal basis");
  const Bipartition bp = *p.space.shape;
  if (!find_removal(bp, target))
    throw std::invalid_argument("sample_line_for_shape: " + target.to_string() + " is not one box smaller than " +
                                bp.to_string());
  const Subspace closure = bvariety_coefficient_closure(bp, target);
  if (closure.dim() - 1 != predict_bvariety_dim(bp, target))
    throw std::logic_error("sample_line_for_shape: closure dimension " + std::to_string(closure.dim() - 1) +
                           " differs from the predicted " + std::to_string(predict_bvariety_dim(bp, target)));
  const std::string what = "sample_line_for_shape " + bp.to_string() + " -> " + target.to_string();
  return rejection_loop(what, 0, opts, [&](int height, std::string& last) -> std::optional<Subspace> {
    LineCoeffs c = unflatten(random_point(closure, rng, height));
    if (c.is_zero()) return std::nullopt;
    last = c.to_string();
    Subspace line = Subspace::span({line_vector(bp, c)}, p.space.dim());
    Bipartition predicted = predict_etype_after_line(bp, c);
    Bipartition actual = etype(reduce_by_line(p, line).point);
    if (predicted != actual)
      throw std::logic_error(what + ": prediction " + predicted.to_string() + " disagrees with oracle " +
                             actual.to_string() + " at " + last);
    if (actual != target) return std::nullopt;
    return line;
  });
}

Subspace sample_line_intrinsic(const ExoticPoint& p, const Bipartition& target, Rng& rng,
                               const SamplerOptions& opts, int level) {
  const Bipartition source = etype(p);
  const Subspace closure = bvariety_closure_intrinsic(p, target);
  if (closure.dim() - 1 != predict_bvariety_dim(source, target))
    throw std::logic_error("sample_line_intrinsic: closure dimension " + std::to_string(closure.dim() - 1) +
                           " differs from the predicted " + std::to_string(predict_bvariety_dim(source, target)));
  const std::string what = "sample_line_intrinsic " + source.to_string() + " -> " + target.to_string();
  return rejection_loop(what, level, opts, [&](int height, std::string& last) -> std::optional<Subspace> {
    RatVector vec = random_point(closure, rng, height);
    if (is_zero(vec)) return std::nullopt;
    last = vector_string(vec);
    Subspace line = Subspace::span({vec}, p.space.dim());
    if (etype(reduce_by_line(p, line).point) != target) return std::nullopt;
    return line;
  });
}

namespace {

Flag sample_flag_rec(const ExoticPoint& p, const StandardBitableau& t, Rng& rng, const SamplerOptions& opts,
                     int level) {
  if (t.size() == 0) return Flag({}, p.space.form);
  const StandardBitableau smaller = remove_largest(t);
  const Bipartition target = smaller.shape();
  Subspace f1 = p.space.shape ? sample_line_for_shape(p, target, rng, opts)
                              : sample_line_intrinsic(p, target, rng, opts, level);
  Reduction red = reduce_by_line(p, f1);
  Flag sub = sample_flag_rec(red.point, smaller, rng, opts, level + 1);
  std::vector<Subspace> halves{f1};
  for (const auto& s : sub.halves()) halves.push_back(red.structure.lift_subspace(s));
  return Flag(std::move(halves), p.space.form);
}

}  // namespace

Flag sample_flag_for_point(const ExoticPoint& p, const StandardBitableau& t, Rng& rng, const SamplerOptions& opts) {
  t.validate();
  if (etype(p) != t.shape())
    throw std::invalid_argument("sample_flag_for_point: bitableau shape " + t.shape().to_string() +
                                " differs from eType " + etype(p).to_string());
  Flag flag = sample_flag_rec(p, t, rng, opts, 0);
  auto result = phi(p, flag);
  if (!result.tableau || *result.tableau != t)
    throw std::logic_error("sample_flag_for_point: sampled flag does not map to " + t.display());
  return flag;
}

Flag sample_generic_flag(const Bipartition& bp, const StandardBitableau& t, Rng& rng, const SamplerOptions& opts) {
  if (t.shape() != bp) throw std::invalid_argument("sample_generic_flag: bitableau shape differs from bp");
  return sample_flag_for_point(build_normal_form(bp), t, rng, opts);
}

}  // namespace esf
