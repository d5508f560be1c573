#include "esf/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace esf {

namespace {

const char* const kMacron = "̄";

}  // namespace

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
  const int n = this->n();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int a : images_) {
    int v = std::abs(a);
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("SignedPerm: absolute values must be a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return SignedPerm(img);
}

SignedPerm SignedPerm::generator(int n, int i) {
  if (i < 0 || i >= std::max(n, 1) || n < 1) throw std::out_of_range("SignedPerm::generator: index out of range");
  std::vector<int> img = identity(n).images_;
  if (i == 0)
    img[0] = -1;
  else
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return SignedPerm(img);
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::vector<int> img;
  if (text.find(' ') != std::string_view::npos || text.find('-') != std::string_view::npos) {
    std::istringstream is{std::string(text)};
    int a;
    while (is >> a) img.push_back(a);
    if (!is.eof()) throw std::invalid_argument("SignedPerm::parse: malformed '" + std::string(text) + "'");
    return SignedPerm(img);
  }
  const std::string macron(kMacron);
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("SignedPerm::parse: malformed '" + std::string(text) + "'");
    int a = text[i] - '0';
    ++i;
    if (text.substr(i, macron.size()) == macron) {
      a = -a;
      i += macron.size();
    }
    img.push_back(a);
  }
  return SignedPerm(img);
}

int SignedPerm::operator()(int a) const {
  int v = std::abs(a);
  if (v < 1 || v > n()) throw std::out_of_range("SignedPerm: letter out of range");
  int img = images_[static_cast<std::size_t>(v - 1)];
  return a > 0 ? img : -img;
}

SignedPerm SignedPerm::operator*(const SignedPerm& other) const {
  if (other.n() != n()) throw std::invalid_argument("SignedPerm: rank mismatch");
  std::vector<int> img;
  for (int a = 1; a <= n(); ++a) img.push_back((*this)(other(a)));
  return SignedPerm(img);
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> img(static_cast<std::size_t>(n()));
  for (int a = 1; a <= n(); ++a) {
    int b = (*this)(a);
    img[static_cast<std::size_t>(std::abs(b) - 1)] = b > 0 ? a : -a;
  }
  return SignedPerm(img);
}

std::string SignedPerm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string SignedPerm::display() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0 && n() >= 10) out += '.';
    out += std::to_string(std::abs(images_[i]));
    if (images_[i] < 0) out += kMacron;
  }
  return out;
}

std::vector<SignedPerm> enumerate_weyl(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_weyl: negative rank");
  std::vector<SignedPerm> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) img[static_cast<std::size_t>(i)] = -img[static_cast<std::size_t>(i)];
      out.emplace_back(img);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int label_position(int n, int label) {
  if (label == 0 || std::abs(label) > n) throw std::out_of_range("label_position: label out of range");
  return label > 0 ? n + 1 - label : n - label;
}

int position_label(int n, int position) {
  if (position < 1 || position > 2 * n) throw std::out_of_range("position_label: position out of range");
  return position <= n ? n + 1 - position : -(position - n);
}

std::vector<int> embed_iota(const SignedPerm& w) {
  const int n = w.n();
  std::vector<int> perm(static_cast<std::size_t>(2 * n));
  for (int p = 1; p <= 2 * n; ++p)
    perm[static_cast<std::size_t>(p - 1)] = label_position(n, w(position_label(n, p)));
  return perm;
}

SignedPerm from_centrosymmetric(const std::vector<int>& perm) {
  if (perm.size() % 2 != 0) throw std::invalid_argument("from_centrosymmetric: odd length");
  const int n = static_cast<int>(perm.size() / 2);
  for (int p = 1; p <= 2 * n; ++p)
    if (perm[static_cast<std::size_t>(2 * n - p)] != 2 * n + 1 - perm[static_cast<std::size_t>(p - 1)])
      throw std::invalid_argument("from_centrosymmetric: permutation is not centrosymmetric");
  std::vector<int> img;
  for (int a = 1; a <= n; ++a)
    img.push_back(position_label(n, perm[static_cast<std::size_t>(label_position(n, a) - 1)]));
  SignedPerm w(img);
  if (embed_iota(w) != perm) throw std::invalid_argument("from_centrosymmetric: not a permutation");
  return w;
}

int length(const SignedPerm& w) {
  static std::mutex mutex;
  static std::map<int, std::map<std::vector<int>, int>> cache;
  const int n = w.n();
  std::lock_guard<std::mutex> lock(mutex);
  auto& table = cache[n];
  if (table.empty()) {
    std::deque<SignedPerm> queue{SignedPerm::identity(n)};
    table[queue.front().images()] = 0;
    while (!queue.empty()) {
      SignedPerm u = queue.front();
      queue.pop_front();
      int d = table[u.images()];
      for (int i = 0; i < n; ++i) {
        SignedPerm next = u * SignedPerm::generator(n, i);
        if (table.emplace(next.images(), d + 1).second) queue.push_back(next);
      }
    }
  }
  return table.at(w.images());
}

std::vector<std::vector<int>> IntersectionTable::mixed_difference() const {
  const int m = 2 * n;
  std::vector<std::vector<int>> b(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      auto A = [this](int r, int c) { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
      b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          A(i - 1, j - 1) + A(i, j) - A(i - 1, j) - A(i, j - 1);
    }
  return b;
}

bool IntersectionTable::is_permutation() const {
  auto b = mixed_difference();
  const auto m = static_cast<std::size_t>(2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[i][j] != 0 && b[i][j] != 1) return false;
      row += b[i][j];
      col += b[j][i];
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

IntersectionTable intersection_table(const Flag& f, const Flag& g) {
  if (f.n() != g.n() || !(f.form().gram() == g.form().gram()))
    throw std::invalid_argument("intersection_table: flags live on different spaces");
  IntersectionTable t;
  t.n = f.n();
  const auto m = static_cast<std::size_t>(2 * t.n);
  auto ff = f.full();
  auto gg = g.full();
  t.a.assign(m + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) t.a[i][j] = intersect(gg[i], ff[j]).dim();
  return t;
}

SignedPerm read_permutation(const IntersectionTable& table, ReadOrder order) {
  if (!table.is_permutation()) throw std::invalid_argument("read_permutation: mixed difference is not a permutation matrix");
  const int n = table.n;
  auto b = table.mixed_difference();
  std::vector<int> img;
  for (int j = 1; j <= n; ++j) {
    const auto p = static_cast<std::size_t>(label_position(n, j) - 1);
    for (std::size_t q = 0; q < static_cast<std::size_t>(2 * n); ++q) {
      int hit = order == ReadOrder::ColumnToRow ? b[q][p] : b[p][q];
      if (hit == 1) img.push_back(position_label(n, static_cast<int>(q) + 1));
    }
  }
  return SignedPerm(img);
}

SignedPerm relative_position(const Flag& f, const Flag& g, ReadOrder order) {
  return read_permutation(intersection_table(f, g), order);
}

}  // namespace esf
