#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esf/combinatorics.hpp"
#include "esf/exactla.hpp"

namespace esf {

struct BasisLabel {
  int row;  // i, 1-based
  int col;  // j, 1-based
  bool starred;
  std::string to_string() const;
  bool operator==(const BasisLabel&) const = default;
};

struct ExoticSpace {
  int n = 0;
  BilinearForm form;
  std::vector<BasisLabel> labels;    // empty unless built from a normal basis
  std::optional<Bipartition> shape;  // the orbit label of the normal basis, if any

  int dim() const { return 2 * n; }
  bool has_normal_basis() const { return shape.has_value(); }
};

struct ExoticPoint {
  ExoticSpace space;
  RatVector v;
  RatMatrix x;

  /// Throws std::invalid_argument when x is not nilpotent, not self-adjoint
  /// for the form, or the form is not symplectic.
  void validate() const;
};

/// Standard symplectic form on U + U*: gram [[0, I], [-I, 0]].
BilinearForm standard_form(int n);

/// Basis index of v_{ij} (or v*_{ij}) in the normal basis of bp, 0-based.
int normal_index(const Bipartition& bp, int i, int j, bool starred);

ExoticPoint build_normal_form(const Bipartition& bp);

/// eType from the Jordan types of x on V and on V/C[x]v.
Bipartition etype(const ExoticPoint& p);

/// Inverts Type(x,V) = lambda u lambda and Type(x, V/C[x]v) = rho to (mu, nu).
/// Throws std::invalid_argument if no bipartition fits.
Bipartition bipartition_from_types(const Partition& lambda, const Partition& rho);

/// Halves a duplicated partition lambda u lambda; nullopt if not duplicated.
std::optional<Partition> halve_duplicated(const Partition& doubled);

struct Reduction {
  ExoticPoint point;
  QuotientStructure structure;
};

/// (v + F, x on F^perp / F) for an x-stable isotropic F with v in F^perp.
Reduction reduce(const ExoticPoint& p, const Subspace& f);
/// reduce() for a line inside ker x.
Reduction reduce_by_line(const ExoticPoint& p, const Subspace& f1);

class Flag {
 public:
  Flag() = default;
  /// halves[i-1] = F_i for i = 1..n. Throws unless nested, isotropic and of
  /// dimensions 1..n.
  Flag(std::vector<Subspace> halves, BilinearForm form);

  int n() const { return static_cast<int>(halves_.size()); }
  const BilinearForm& form() const { return form_; }
  /// F_i for 0 <= i <= 2n; the upper half comes from perp.
  Subspace at(int i) const;
  std::vector<Subspace> full() const;
  const std::vector<Subspace>& halves() const { return halves_; }

 private:
  std::vector<Subspace> halves_;
  BilinearForm form_;
};

bool is_in_fibre(const ExoticPoint& p, const Flag& flag);

struct PhiResult {
  /// by_size[k] is the eType after reducing by F_{n-k}, so by_size[0] is
  /// (0,0) and by_size[n] is eType(p).
  std::vector<Bipartition> by_size;
  bool nested = false;
  /// When not nested: the smallest k with by_size[k] not one box larger
  /// than by_size[k-1].
  std::optional<int> bad_step;
  std::optional<StandardBitableau> tableau;
};

/// Throws std::invalid_argument when the flag is not in the fibre of p.
PhiResult phi(const ExoticPoint& p, const Flag& flag);

}  // namespace esf
