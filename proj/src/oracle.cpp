#include "esf/oracle.hpp"

namespace esf {

LineLoci line_loci(const ExoticPoint& p) {
  const int d = p.space.dim();
  LineLoci loci;
  loci.ker_x = kernel(p.x);
  loci.cxv = cyclic_span(p.x, p.v);
  loci.admissible = intersect(loci.ker_x, perp(loci.cxv, p.space.form));
  loci.lambda1 = d == 0 ? 0 : jordan_type(p.x).part(1);
  const Subspace whole = Subspace::whole(d);
  RatMatrix power = RatMatrix::identity(d);  // x^(j-1)
  for (int j = 1; j <= loci.lambda1 + 1; ++j) {
    Subspace im = image(power, whole);
    if (j <= loci.lambda1) {
      loci.kernel_images.push_back(intersect(loci.ker_x, im));
      loci.k_loci.push_back(intersect(loci.ker_x, sum(im, loci.cxv)));
    }
    loci.l_loci.push_back(perp(preimage(power, loci.cxv), p.space.form));
    power = power * p.x;
  }
  return loci;
}

LineMeasurement measure_line(const ExoticPoint& p, const LineLoci& loci, const Subspace& f1) {
  if (f1.dim() != 1) throw std::invalid_argument("measure_line: not a line");
  if (!loci.admissible.contains(f1))
    throw std::invalid_argument("measure_line: line is not in ker x and perp(C[x]v)");
  LineMeasurement m;
  auto red = reduce_by_line(p, f1);
  if (red.point.space.dim() > 0) {
    auto half = halve_duplicated(jordan_type(red.point.x));
    if (!half) throw std::logic_error("measure_line: reduced Jordan type is not duplicated");
    m.quotient_lambda = *half;
  }
  for (int j = 1; j <= loci.lambda1; ++j)
    if (loci.kernel_images[static_cast<std::size_t>(j - 1)].contains(f1)) m.j = j;
  m.in_cxv = loci.cxv.contains(f1);
  if (!m.in_cxv) {
    for (int k = 1; k <= loci.lambda1; ++k)
      if (loci.k_loci[static_cast<std::size_t>(k - 1)].contains(f1)) m.k = k;
  }
  for (int l = 1; l <= loci.lambda1 + 1; ++l)
    if (loci.l_loci[static_cast<std::size_t>(l - 1)].contains(f1)) m.l = l;
  auto q = quotient(perp(f1, p.space.form), sum(loci.cxv, f1), p.x, std::nullopt);
  if (q.x.rows() > 0) m.sigma = jordan_type(q.x);
  m.etype_after = etype(red.point);
  return m;
}

LineMeasurement measure_line(const ExoticPoint& p, const Subspace& f1) { return measure_line(p, line_loci(p), f1); }

}  // namespace esf
