#pragma once

#include <optional>
#include <vector>

#include "esf/exotic.hpp"

namespace esf {

/// Brute-force linear-algebra measurements for a line F1 in ker x that is
/// perpendicular to C[x]v. Nothing here uses the closed-form calculus.
struct LineMeasurement {
  Partition quotient_lambda;  // half of Type(x, F1^perp / F1)
  int j = 0;                  // max j with F1 in ker x and im x^(j-1)
  bool in_cxv = false;        // F1 inside C[x]v
  std::optional<int> k;       // max k with F1 in ker x and (im x^(k-1) + C[x]v); unset when in_cxv
  int l = 0;                  // max l with F1^perp containing (x^(l-1))^-1 (C[x]v)
  Partition sigma;            // Type(x, F1^perp / (C[x]v + F1))
  Bipartition etype_after;    // eType of the reduced point
};

/// The linear loci the measurements are read from.
struct LineLoci {
  int lambda1 = 0;  // largest Jordan block of x
  Subspace ker_x;
  Subspace cxv;
  Subspace admissible;                  // ker x and perp(C[x]v)
  std::vector<Subspace> kernel_images;  // [j-1]: ker x and im x^(j-1), j = 1..lambda1
  std::vector<Subspace> k_loci;         // [k-1]: ker x and (im x^(k-1) + C[x]v), k = 1..lambda1
  std::vector<Subspace> l_loci;         // [l-1]: perp((x^(l-1))^-1 C[x]v), l = 1..lambda1+1
};

LineLoci line_loci(const ExoticPoint& p);

LineMeasurement measure_line(const ExoticPoint& p, const LineLoci& loci, const Subspace& f1);
LineMeasurement measure_line(const ExoticPoint& p, const Subspace& f1);

}  // namespace esf
