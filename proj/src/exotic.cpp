#include "esf/exotic.hpp"

#include <algorithm>

namespace esf {

std::string BasisLabel::to_string() const {
  return std::string(starred ? "v*" : "v") + "_" + std::to_string(row) + "," + std::to_string(col);
}

void ExoticPoint::validate() const {
  const int d = space.dim();
  if (space.form.dim() != d || x.rows() != d || x.cols() != d || static_cast<int>(v.size()) != d)
    throw std::invalid_argument("ExoticPoint: dimension mismatch");
  if (!space.form.is_skew() || !space.form.is_nondegenerate())
    throw std::invalid_argument("ExoticPoint: form is not symplectic");
  // <xw, u> = <w, xu>  <=>  x^T G = G x
  const auto& g = space.form.gram();
  if (!(x.transpose() * g == g * x)) throw std::invalid_argument("ExoticPoint: x is not self-adjoint for the form");
  if (!x.pow(d).is_zero()) throw std::invalid_argument("ExoticPoint: x is not nilpotent");
}

BilinearForm standard_form(int n) {
  RatMatrix g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = -1;
  }
  return BilinearForm(g);
}

int normal_index(const Bipartition& bp, int i, int j, bool starred) {
  const Partition lambda = bp.lambda();
  if (i < 1 || i > lambda.length() || j < 1 || j > lambda.part(i))
    throw std::out_of_range("normal_index: no such basis vector");
  int offset = 0;
  for (int k = 1; k < i; ++k) offset += lambda.part(k);
  return (starred ? bp.size() : 0) + offset + j - 1;
}

ExoticPoint build_normal_form(const Bipartition& bp) {
  const int n = bp.size();
  const Partition lambda = bp.lambda();
  ExoticPoint p;
  p.space.n = n;
  p.space.form = standard_form(n);
  p.space.shape = bp;
  p.space.labels.resize(static_cast<std::size_t>(2 * n));
  p.x = RatMatrix(2 * n, 2 * n);
  p.v.assign(static_cast<std::size_t>(2 * n), Rational(0));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      int a = normal_index(bp, i, j, false);
      int b = normal_index(bp, i, j, true);
      p.space.labels[static_cast<std::size_t>(a)] = {i, j, false};
      p.space.labels[static_cast<std::size_t>(b)] = {i, j, true};
      if (j >= 2) p.x(normal_index(bp, i, j - 1, false), a) = 1;
      if (j < lambda.part(i)) p.x(normal_index(bp, i, j + 1, true), b) = 1;
    }
    if (bp.mu.part(i) > 0) p.v[static_cast<std::size_t>(normal_index(bp, i, bp.mu.part(i), false))] += 1;
  }
  return p;
}

std::optional<Partition> halve_duplicated(const Partition& doubled) {
  const auto& parts = doubled.parts();
  if (parts.size() % 2 != 0) return std::nullopt;
  std::vector<int> half;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    if (parts[i] != parts[i + 1]) return std::nullopt;
    half.push_back(parts[i]);
  }
  return Partition(half);
}

Bipartition bipartition_from_types(const Partition& lambda, const Partition& rho) {
  const int l = lambda.length();
  if (rho.length() > 2 * l)
    throw std::invalid_argument("eType inversion: rho " + rho.to_string() + " too long for lambda " + lambda.to_string());
  std::vector<int> mu(static_cast<std::size_t>(l) + 1, 0), nu(static_cast<std::size_t>(l) + 1, 0);
  auto at = [](std::vector<int>& vec, int i) -> int& { return vec[static_cast<std::size_t>(i)]; };
  if (l > 0) {
    at(nu, l) = rho.part(2 * l);
    at(mu, l) = lambda.part(l) - at(nu, l);
    for (int i = l; i >= 2; --i) {
      at(nu, i - 1) = rho.part(2 * i - 2) - at(mu, i);
      at(mu, i - 1) = lambda.part(i - 1) - at(nu, i - 1);
    }
  }
  std::vector<int> mu_parts(mu.begin() + 1, mu.end()), nu_parts(nu.begin() + 1, nu.end());
  for (int i = 1; i <= l; ++i) {
    if (at(mu, i) < 0 || at(nu, i) < 0 || rho.part(2 * i - 1) != lambda.part(i))
      throw std::invalid_argument("eType inversion: inconsistent rho " + rho.to_string() + " for lambda " +
                                  lambda.to_string());
  }
  try {
    return {Partition(mu_parts), Partition(nu_parts)};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("eType inversion: rho " + rho.to_string() + " for lambda " + lambda.to_string() +
                                " does not give partitions");
  }
}

Bipartition etype(const ExoticPoint& p) {
  const int d = p.space.dim();
  if (d == 0) return {};
  auto half = halve_duplicated(jordan_type(p.x));
  if (!half) throw std::invalid_argument("etype: Jordan type of x is not of the form lambda u lambda");
  Subspace cyc = cyclic_span(p.x, p.v);
  auto q = quotient(Subspace::whole(d), cyc, p.x, std::nullopt);
  Partition rho = q.x.rows() == 0 ? Partition{} : jordan_type(q.x);
  return bipartition_from_types(*half, rho);
}

Reduction reduce(const ExoticPoint& p, const Subspace& f) {
  if (f.ambient_dim() != p.space.dim()) throw std::invalid_argument("reduce: ambient mismatch");
  if (!is_isotropic(f, p.space.form)) throw std::invalid_argument("reduce: subspace is not isotropic");
  Subspace fp = perp(f, p.space.form);
  if (!fp.contains(p.v)) throw std::invalid_argument("reduce: v is not in the perp of the subspace");
  auto q = quotient(fp, f, p.x, p.space.form);
  Reduction out;
  out.point.space.n = p.space.n - f.dim();
  out.point.space.form = *q.form;
  out.point.v = q.structure.project_vector(p.v);
  out.point.x = q.x;
  out.structure = std::move(q.structure);
  return out;
}

Reduction reduce_by_line(const ExoticPoint& p, const Subspace& f1) {
  if (f1.dim() != 1) throw std::invalid_argument("reduce_by_line: subspace is not a line");
  if (!kernel(p.x).contains(f1)) throw std::invalid_argument("reduce_by_line: line is not in ker x");
  return reduce(p, f1);
}

Flag::Flag(std::vector<Subspace> halves, BilinearForm form) : halves_(std::move(halves)), form_(std::move(form)) {
  const int amb = form_.dim();
  if (amb != 2 * n()) throw std::invalid_argument("Flag: need n subspaces for a 2n-dimensional space");
  for (int i = 1; i <= n(); ++i) {
    const auto& fi = halves_[static_cast<std::size_t>(i - 1)];
    if (fi.ambient_dim() != amb || fi.dim() != i) throw std::invalid_argument("Flag: F_i must have dimension i");
    if (i > 1 && !fi.contains(halves_[static_cast<std::size_t>(i - 2)]))
      throw std::invalid_argument("Flag: subspaces are not nested");
  }
  if (n() > 0 && !is_isotropic(halves_.back(), form_)) throw std::invalid_argument("Flag: F_n is not isotropic");
}

Subspace Flag::at(int i) const {
  const int amb = form_.dim();
  if (i < 0 || i > amb) throw std::out_of_range("Flag::at: index out of range");
  if (i == 0) return Subspace::zero(amb);
  if (i <= n()) return halves_[static_cast<std::size_t>(i - 1)];
  return perp(at(amb - i), form_);
}

std::vector<Subspace> Flag::full() const {
  std::vector<Subspace> out;
  for (int i = 0; i <= form_.dim(); ++i) out.push_back(at(i));
  return out;
}

bool is_in_fibre(const ExoticPoint& p, const Flag& flag) {
  if (flag.form().dim() != p.space.dim() || !(flag.form().gram() == p.space.form.gram())) return false;
  auto full = flag.full();
  if (!full[static_cast<std::size_t>(flag.n())].contains(p.v)) return false;
  for (std::size_t i = 1; i < full.size(); ++i)
    if (!full[i - 1].contains(image(p.x, full[i]))) return false;
  return true;
}

PhiResult phi(const ExoticPoint& p, const Flag& flag) {
  if (!is_in_fibre(p, flag)) throw std::invalid_argument("phi: flag is not in the fibre");
  const int n = flag.n();
  PhiResult out;
  out.by_size.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    auto red = reduce(p, flag.at(i));
    out.by_size[static_cast<std::size_t>(n - i)] = etype(red.point);
  }
  std::vector<BoxStep> steps;
  for (int k = 1; k <= n; ++k) {
    const auto& big = out.by_size[static_cast<std::size_t>(k)];
    const auto& small = out.by_size[static_cast<std::size_t>(k - 1)];
    auto box = find_removal(big, small);
    if (!box) {
      out.bad_step = k;
      return out;
    }
    steps.push_back({box->side, box->row});
  }
  out.nested = true;
  out.tableau = bitableau_from_steps(steps);
  return out;
}

}  // namespace esf
