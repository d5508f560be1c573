#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "esf/exotic.hpp"

namespace esf {

/// Element of W(C_n) in signed one-line notation w(1) ... w(n); a negative
/// entry is a barred letter. Composition is (uv)(a) = u(v(a)).
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);
  /// s_0 = 1bar 2 ... n, and s_i swaps i and i+1 for 1 <= i < n.
  static SignedPerm generator(int n, int i);
  /// Reads "-2 1" (space separated) or the barred form "2̄1" for n < 10.
  static SignedPerm parse(std::string_view text);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// w(a) for a in {+-1, ..., +-n}, with w(-a) = -w(a).
  int operator()(int a) const;

  SignedPerm operator*(const SignedPerm& other) const;
  SignedPerm inverse() const;

  /// "-2 1"
  std::string to_string() const;
  /// "2̄1" using a combining macron; letters are dot-separated when n >= 10.
  std::string display() const;

  auto operator<=>(const SignedPerm&) const = default;
  bool operator==(const SignedPerm&) const = default;

 private:
  std::vector<int> images_;
};

/// Every element of W(C_n): permutations of 1..n in lexicographic order,
/// and for each the 2^n sign patterns with bit i-1 of the mask negating
/// position i, mask ascending.
std::vector<SignedPerm> enumerate_weyl(int n);

/// Matrix position (1..2n) of a signed label under the order
/// n, n-1, ..., 1, 1bar, ..., nbar.
int label_position(int n, int label);
int position_label(int n, int position);

/// Image in S_{2n} as one-line notation on positions 1..2n (entry p-1 is the
/// image of p). iota(s_0) = (n, n+1), iota(s_i) = (n-i, n-i+1)(n+i, n+i+1).
std::vector<int> embed_iota(const SignedPerm& w);
/// Inverse of embed_iota; throws unless perm is centrosymmetric.
SignedPerm from_centrosymmetric(const std::vector<int>& perm);

/// Coxeter length for s_0, ..., s_{n-1}, by breadth-first search of the
/// Cayley graph (cached per n).
int length(const SignedPerm& w);

struct IntersectionTable {
  int n = 0;
  /// a[i][j] = dim(G_i and F_j) for 0 <= i, j <= 2n, zero border included.
  std::vector<std::vector<int>> a;
  /// b[i][j] for 1 <= i, j <= 2n, stored at [i-1][j-1].
  std::vector<std::vector<int>> mixed_difference() const;
  bool is_permutation() const;
};

/// Rows index the second flag G, columns index the first flag F.
IntersectionTable intersection_table(const Flag& f, const Flag& g);

enum class ReadOrder {
  /// w(j) is the row label of the 1 in the column labelled j.
  ColumnToRow,
  /// w(j) is the column label of the 1 in the row labelled j.
  RowToColumn,
};

/// The reading that reproduces the n = 2 exotic RS table.
inline constexpr ReadOrder kRelativePositionOrder = ReadOrder::RowToColumn;

SignedPerm read_permutation(const IntersectionTable& table, ReadOrder order = kRelativePositionOrder);

/// w(F, G). Throws if the flags live on different spaces or the mixed
/// difference is not a permutation matrix.
SignedPerm relative_position(const Flag& f, const Flag& g, ReadOrder order = kRelativePositionOrder);

}  // namespace esf
