#include "esf/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace esf {

namespace {

std::string join_row(const std::vector<int>& row, bool wide) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(row[i]);
  }
  return out;
}

std::string display_side(const std::vector<std::vector<int>>& rows, bool mirror, bool wide) {
  if (rows.empty()) return "-";
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += '/';
    auto row = rows[r];
    if (mirror) std::reverse(row.begin(), row.end());
    out += join_row(row, wide);
  }
  return out;
}

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-") return {};
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(parts);
}

Partition Bipartition::lambda() const { return partition_add(mu, nu); }

std::string Bipartition::to_string() const { return mu.to_string() + "|" + nu.to_string(); }

Bipartition Bipartition::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("malformed bipartition (expected 'mu|nu'): '" + std::string(text) + "'");
  return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Bipartition StandardBitableau::shape() const { return {shape_of(left), shape_of(right)}; }

void StandardBitableau::validate() const {
  auto check_rows = [](const std::vector<std::vector<int>>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) throw std::invalid_argument("bitableau has an empty row");
      if (r > 0 && rows[r].size() > rows[r - 1].size())
        throw std::invalid_argument("bitableau rows are not a partition shape");
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0 && rows[r][c] <= rows[r][c - 1])
          throw std::invalid_argument("bitableau row not strictly increasing");
        if (r > 0 && rows[r][c] <= rows[r - 1][c])
          throw std::invalid_argument("bitableau column not strictly increasing");
      }
    }
  };
  check_rows(left);
  check_rows(right);
  std::vector<int> all;
  for (const auto* side : {&left, &right})
    for (const auto& row : *side) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("bitableau entries must be exactly 1..n");
}

std::string StandardBitableau::display() const {
  bool wide = size() >= 10;
  return display_side(left, true, wide) + ";" + display_side(right, false, wide);
}

std::vector<BoxStep> box_steps(const StandardBitableau& t) {
  t.validate();
  std::vector<BoxStep> steps(static_cast<std::size_t>(t.size()));
  for (std::size_t r = 0; r < t.left.size(); ++r)
    for (int e : t.left[r]) steps[static_cast<std::size_t>(e - 1)] = {Side::Left, static_cast<int>(r) + 1};
  for (std::size_t r = 0; r < t.right.size(); ++r)
    for (int e : t.right[r]) steps[static_cast<std::size_t>(e - 1)] = {Side::Right, static_cast<int>(r) + 1};
  return steps;
}

StandardBitableau bitableau_from_steps(const std::vector<BoxStep>& steps) {
  StandardBitableau t;
  int entry = 0;
  for (const auto& s : steps) {
    ++entry;
    auto& rows = s.side == Side::Left ? t.left : t.right;
    auto r = static_cast<std::size_t>(s.row - 1);
    if (s.row < 1 || r > rows.size())
      throw std::invalid_argument("box step adds to a non-existent row");
    if (r == rows.size()) rows.emplace_back();
    if (r > 0 && rows[r].size() + 1 > rows[r - 1].size())
      throw std::invalid_argument("box step breaks the partition shape");
    rows[r].push_back(entry);
  }
  return t;
}

Partition partition_add(const Partition& mu, const Partition& nu) {
  int len = std::max(mu.length(), nu.length());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) parts.push_back(mu.part(i) + nu.part(i));
  return Partition(parts);
}

Partition partition_union(const Partition& mu, const Partition& nu) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

Partition transpose(const Partition& lambda) {
  std::vector<int> parts;
  for (int i = 1; i <= lambda.part(1); ++i) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= i) ++count;
    parts.push_back(count);
  }
  return Partition(parts);
}

long long n_stat(const Partition& lambda) {
  long long total = 0;
  for (int i = 1; i <= lambda.length(); ++i) total += static_cast<long long>(i - 1) * lambda.part(i);
  return total;
}

long long b_dim(const Bipartition& bp) { return 2 * n_stat(bp.lambda()) + bp.nu.size(); }

std::vector<Partition> enumerate_partitions(int k) {
  if (k < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_bipartitions: negative size");
  std::vector<Bipartition> out;
  for (int a = 0; a <= n; ++a)
    for (const auto& mu : enumerate_partitions(a))
      for (const auto& nu : enumerate_partitions(n - a)) out.push_back({mu, nu});
  return out;
}

std::vector<StandardBitableau> enumerate_syb(const Bipartition& bp) {
  const int n = bp.size();
  std::vector<StandardBitableau> out;
  std::vector<int> cur_mu(static_cast<std::size_t>(bp.mu.length()), 0);
  std::vector<int> cur_nu(static_cast<std::size_t>(bp.nu.length()), 0);
  std::vector<BoxStep> steps;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(steps.size()) == n) {
      out.push_back(bitableau_from_steps(steps));
      return;
    }
    for (Side side : {Side::Left, Side::Right}) {
      auto& cur = side == Side::Left ? cur_mu : cur_nu;
      const auto& target = side == Side::Left ? bp.mu : bp.nu;
      for (std::size_t r = 0; r < cur.size(); ++r) {
        if (cur[r] >= target.part(static_cast<int>(r) + 1)) continue;
        if (r > 0 && cur[r - 1] < cur[r] + 1) continue;
        ++cur[r];
        steps.push_back({side, static_cast<int>(r) + 1});
        rec();
        steps.pop_back();
        --cur[r];
      }
    }
  };
  rec();
  return out;
}

Bipartition shape_after_step(const StandardBitableau& t, int i) {
  int n = t.size();
  if (i < 0 || i > n) throw std::out_of_range("shape_after_step: step out of range");
  auto count = [i](const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& row : rows)
      parts.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [i](int e) { return e <= i; })));
    return Partition(parts);
  };
  return {count(t.left), count(t.right)};
}

StandardBitableau remove_largest(const StandardBitableau& t) {
  auto steps = box_steps(t);
  if (steps.empty()) throw std::invalid_argument("remove_largest: empty bitableau");
  steps.pop_back();
  return bitableau_from_steps(steps);
}

std::vector<RemovableBox> removable_boxes(const Bipartition& bp) {
  if (bp.size() == 0) throw std::invalid_argument("removable_boxes: empty bipartition");
  std::vector<RemovableBox> out;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& p = side == Side::Left ? bp.mu : bp.nu;
    for (int r = 1; r <= p.length(); ++r) {
      if (p.part(r) <= p.part(r + 1)) continue;
      auto parts = p.parts();
      --parts[static_cast<std::size_t>(r - 1)];
      Bipartition smaller = side == Side::Left ? Bipartition{Partition(parts), bp.nu}
                                               : Bipartition{bp.mu, Partition(parts)};
      out.push_back({smaller, side, r});
    }
  }
  return out;
}

std::optional<RemovableBox> find_removal(const Bipartition& bp, const Bipartition& smaller) {
  if (bp.size() == 0) return std::nullopt;
  for (auto& box : removable_boxes(bp))
    if (box.smaller == smaller) return box;
  return std::nullopt;
}

int predict_bvariety_dim(const Bipartition& bp, const Bipartition& removed) {
  auto box = find_removal(bp, removed);
  if (!box)
    throw std::invalid_argument("predict_bvariety_dim: " + removed.to_string() +
                                " is not one box smaller than " + bp.to_string());
  return box->side == Side::Left ? 2 * box->row - 2 : 2 * box->row - 1;
}

std::vector<Bipartition> dim2_shapes(int n) {
  if (n < 2) throw std::invalid_argument("dim2_shapes: requires n >= 2");
  return {Bipartition{Partition{n - 1, 1}, Partition{}}, Bipartition{Partition{n - 2}, Partition{2}}};
}

}  // namespace esf
