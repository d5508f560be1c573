#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esf {

/// Weakly decreasing list of positive parts. Zero parts are trimmed on
/// construction, so two partitions compare equal iff their parts agree.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based part access with zero padding past the length.
  int part(int i) const;

  /// "5,3,1"; the empty partition prints as "0".
  std::string to_string() const;
  /// Accepts "5,3,1", "" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition mu;
  Partition nu;

  int size() const { return mu.size() + nu.size(); }
  /// lambda = mu + nu
  Partition lambda() const;

  /// "mu|nu", e.g. "3,1|2,2,1" or "0|2".
  std::string to_string() const;
  static Bipartition parse(std::string_view text);

  auto operator<=>(const Bipartition&) const = default;
  bool operator==(const Bipartition&) const = default;
};

enum class Side { Left, Right };

const char* to_string(Side side);

/// Standard bitableau stored with increasing rows in both tableaux. The
/// mirrored display of the left tableau only happens in the printers below.
struct StandardBitableau {
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;

  Bipartition shape() const;
  int size() const { return shape().size(); }

  /// Throws std::invalid_argument unless the filling is standard.
  void validate() const;

  /// Compact display: left rows mirrored, rows joined by '/', sides split
  /// by ';' and an empty side shown as '-'. E.g. "21;-" or "1;2".
  std::string display() const;

  auto operator<=>(const StandardBitableau&) const = default;
  bool operator==(const StandardBitableau&) const = default;
};

struct BoxStep {
  Side side;
  int row;  // 1-based
  auto operator<=>(const BoxStep&) const = default;
  bool operator==(const BoxStep&) const = default;
};

/// The nested-sequence view: element i-1 is where entry i sits.
std::vector<BoxStep> box_steps(const StandardBitableau& t);
/// Inverse of box_steps. Throws if some step does not add a valid box.
StandardBitableau bitableau_from_steps(const std::vector<BoxStep>& steps);

struct RemovableBox {
  Bipartition smaller;
  Side side;
  int row;  // m-bar, 1-based
};

Partition partition_add(const Partition& mu, const Partition& nu);
Partition partition_union(const Partition& mu, const Partition& nu);
Partition transpose(const Partition& lambda);
/// N(lambda) = sum (i-1) lambda_i
long long n_stat(const Partition& lambda);
/// b(mu,nu) = 2 N(mu+nu) + |nu|
long long b_dim(const Bipartition& bp);

/// All partitions of k, in ascending lexicographic order of the part lists
/// (so (1,1) comes before (2)).
std::vector<Partition> enumerate_partitions(int k);

/// All bipartitions of n ordered by (|mu|, mu, nu), each component in the
/// order of enumerate_partitions.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// All standard bitableaux of the given shape, in lexicographic order of
/// their box-step sequences (Left before Right, lower row index first).
std::vector<StandardBitableau> enumerate_syb(const Bipartition& bp);

/// Shape of t after deleting every entry larger than i. Requires 0 <= i <= n.
Bipartition shape_after_step(const StandardBitableau& t, int i);

/// t with its largest entry removed.
StandardBitableau remove_largest(const StandardBitableau& t);

/// Every one-box-smaller bipartition: left-tableau removals first, each side
/// in increasing row order. Throws on the empty bipartition.
std::vector<RemovableBox> removable_boxes(const Bipartition& bp);

/// Locates which box separates bp from smaller; nullopt if smaller is not
/// bp with one corner removed.
std::optional<RemovableBox> find_removal(const Bipartition& bp, const Bipartition& smaller);

/// 2*row-2 for a box taken from mu, 2*row-1 for a box taken from nu.
int predict_bvariety_dim(const Bipartition& bp, const Bipartition& removed);

/// The two shapes with b = 2: ((n-1,1),0) and ((n-2),(2)). Requires n >= 2.
std::vector<Bipartition> dim2_shapes(int n);

}  // namespace esf
