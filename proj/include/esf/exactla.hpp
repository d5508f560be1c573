#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "esf/combinatorics.hpp"

namespace esf {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  RatVector row(int r) const;
  RatVector col(int c) const;
  std::vector<RatVector> row_list() const;

  RatMatrix transpose() const;
  RatMatrix pow(int k) const;
  bool is_zero() const;
  /// Rows with the given indices, in the given order.
  RatMatrix select_rows(const std::vector<int>& idx) const;

  RatMatrix operator*(const RatMatrix& other) const;
  RatVector operator*(const RatVector& vec) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator-() const;
  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix reduced;        // zero rows removed
  std::vector<int> pivots;  // pivot column of each row
};

RrefResult rref(const RatMatrix& m);
int rank(const RatMatrix& m);
/// Rows form a basis of {y : m y = 0}, one row per free column.
RatMatrix nullspace(const RatMatrix& m);

RatVector unit_vector(int dim, int i);
bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

/// Subspace of Q^ambient held as a canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<RatVector>& vectors, int ambient_dim);
  static Subspace from_matrix_rows(const RatMatrix& rows);
  static Subspace zero(int ambient_dim);
  static Subspace whole(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<RatVector> vectors() const { return basis_.row_list(); }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;
  /// Orthogonal complement for the standard dot product.
  Subspace annihilator() const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  int ambient_ = 0;
  RatMatrix basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(RatMatrix gram);

  const RatMatrix& gram() const { return gram_; }
  int dim() const { return gram_.rows(); }
  Rational operator()(const RatVector& u, const RatVector& w) const;
  bool is_skew() const;
  bool is_nondegenerate() const;

 private:
  RatMatrix gram_;
};

Subspace perp(const Subspace& w, const BilinearForm& form);
bool is_isotropic(const Subspace& w, const BilinearForm& form);

Subspace image(const RatMatrix& x, const Subspace& w);
Subspace preimage(const RatMatrix& x, const Subspace& w);
Subspace kernel(const RatMatrix& x);
/// C[x]v = span(v, xv, x^2 v, ...)
Subspace cyclic_span(const RatMatrix& x, const RatVector& v);

/// Jordan type of a nilpotent matrix. Throws if x is not nilpotent.
Partition jordan_type(const RatMatrix& x);

/// W_num / W_den presented in coordinates of a complement basis.
struct QuotientStructure {
  int ambient_dim = 0;
  Subspace num;
  Subspace den;
  RatMatrix lift;     // ambient x q, columns are complement representatives
  RatMatrix project;  // q x ambient, valid on vectors of num

  int dim() const { return lift.cols(); }
  RatVector project_vector(const RatVector& v) const;
  RatVector lift_vector(const RatVector& coords) const;
  /// Preimage in the ambient space of a subspace of the quotient.
  Subspace lift_subspace(const Subspace& s) const;
};

struct QuotientResult {
  QuotientStructure structure;
  RatMatrix x;
  std::optional<BilinearForm> form;
};

/// Induced operator (and form, when given) on W_num / W_den. With a form,
/// W_num must equal perp(W_den).
QuotientResult quotient(const Subspace& num, const Subspace& den, const RatMatrix& x,
                        const std::optional<BilinearForm>& form);

std::string to_string(const Rational& q);
std::vector<std::vector<std::string>> to_strings(const RatMatrix& m);
std::vector<std::string> to_strings(const RatVector& v);

}  // namespace esf
