#include "esf/exactla.hpp"

#include <algorithm>

namespace esf {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, int cols) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("RatMatrix::from_rows: ragged input");
    for (int c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

RatVector RatMatrix::row(int r) const {
  RatVector out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = (*this)(r, c);
  return out;
}

RatVector RatMatrix::col(int c) const {
  RatVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::pow(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("RatMatrix::pow: not square");
  if (k < 0) throw std::invalid_argument("RatMatrix::pow: negative exponent");
  RatMatrix out = identity(rows_);
  for (int i = 0; i < k; ++i) out = out * (*this);
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix RatMatrix::select_rows(const std::vector<int>& idx) const {
  RatMatrix out(static_cast<int>(idx.size()), cols_);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(idx[static_cast<std::size_t>(r)], c);
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("RatMatrix: product size mismatch");
  RatMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (int c = 0; c < other.cols_; ++c)
        if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
    }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& vec) const {
  if (static_cast<int>(vec.size()) != cols_) throw std::invalid_argument("RatMatrix: vector size mismatch");
  RatVector out(static_cast<std::size_t>(rows_), Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(vec[static_cast<std::size_t>(c)]) != 0)
        out[static_cast<std::size_t>(r)] += (*this)(r, c) * vec[static_cast<std::size_t>(c)];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RatMatrix: sum size mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const { return *this + (-other); }

RatMatrix RatMatrix::operator-() const {
  RatMatrix out = *this;
  for (auto& q : out.data_) q = -q;
  return out;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots;
  int lead_row = 0;
  for (int c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    int p = -1;
    for (int r = lead_row; r < a.rows(); ++r)
      if (sgn(a(r, c)) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != lead_row)
      for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead_row, k));
    Rational inv = 1 / a(lead_row, c);
    for (int k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (int k = c; k < a.cols(); ++k)
        if (sgn(a(lead_row, k)) != 0) a(r, k) -= f * a(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  std::vector<int> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  return {a.select_rows(keep), pivots};
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

RatMatrix nullspace(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector y(static_cast<std::size_t>(m.cols()), Rational(0));
    y[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) y[static_cast<std::size_t>(pivots[i])] = -r(static_cast<int>(i), f);
    basis.push_back(std::move(y));
  }
  return RatMatrix::from_rows(basis, m.cols());
}

RatVector unit_vector(int dim, int i) {
  RatVector v(static_cast<std::size_t>(dim), Rational(0));
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Subspace Subspace::span(const std::vector<RatVector>& vectors, int ambient_dim) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
  return from_matrix_rows(RatMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::from_matrix_rows(const RatMatrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  auto r = rref(rows);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::zero(int ambient_dim) { return from_matrix_rows(RatMatrix(0, ambient_dim)); }

Subspace Subspace::whole(int ambient_dim) { return from_matrix_rows(RatMatrix::identity(ambient_dim)); }

bool Subspace::contains(const RatVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RatVector w = v;
  for (int r = 0; r < dim(); ++r) {
    const auto p = static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)]);
    if (sgn(w[p]) == 0) continue;
    Rational f = w[p];
    for (int c = 0; c < ambient_; ++c) w[static_cast<std::size_t>(c)] -= f * basis_(r, c);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::annihilator() const { return from_matrix_rows(nullspace(basis_)); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  auto rows = a.vectors();
  auto more = b.vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

BilinearForm::BilinearForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("BilinearForm: gram matrix not square");
}

Rational BilinearForm::operator()(const RatVector& u, const RatVector& w) const { return dot(u, gram_ * w); }

bool BilinearForm::is_skew() const { return gram_.transpose() == -gram_; }

bool BilinearForm::is_nondegenerate() const { return rank(gram_) == gram_.rows(); }

Subspace perp(const Subspace& w, const BilinearForm& form) {
  if (w.ambient_dim() != form.dim()) throw std::invalid_argument("perp: ambient mismatch");
  if (!form.is_nondegenerate()) throw std::invalid_argument("perp: degenerate form");
  // <v, w> = v^T G w = (w^T G^T) v
  return Subspace::from_matrix_rows(nullspace(w.basis() * form.gram().transpose()));
}

bool is_isotropic(const Subspace& w, const BilinearForm& form) {
  const auto& b = w.basis();
  return (b * form.gram() * b.transpose()).is_zero();
}

Subspace image(const RatMatrix& x, const Subspace& w) {
  if (x.rows() != x.cols() || x.cols() != w.ambient_dim()) throw std::invalid_argument("image: size mismatch");
  return Subspace::from_matrix_rows(w.basis() * x.transpose());
}

Subspace preimage(const RatMatrix& x, const Subspace& w) {
  if (x.rows() != x.cols() || x.cols() != w.ambient_dim()) throw std::invalid_argument("preimage: size mismatch");
  RatMatrix ann = nullspace(w.basis());
  return Subspace::from_matrix_rows(nullspace(ann * x));
}

Subspace kernel(const RatMatrix& x) { return Subspace::from_matrix_rows(nullspace(x)); }

Subspace cyclic_span(const RatMatrix& x, const RatVector& v) {
  std::vector<RatVector> gens;
  RatVector cur = v;
  for (int i = 0; i <= x.rows() && !is_zero(cur); ++i) {
    gens.push_back(cur);
    cur = x * cur;
  }
  return Subspace::span(gens, x.cols());
}

Partition jordan_type(const RatMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("jordan_type: not square");
  const int d = x.rows();
  std::vector<int> kernel_dims{0};
  RatMatrix power = RatMatrix::identity(d);
  for (int j = 1; j <= d; ++j) {
    power = power * x;
    kernel_dims.push_back(d - rank(power));
    if (kernel_dims.back() == d) break;
  }
  if (!power.is_zero()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  std::vector<int> tr;
  for (std::size_t j = 1; j < kernel_dims.size(); ++j) tr.push_back(kernel_dims[j] - kernel_dims[j - 1]);
  return transpose(Partition(tr));
}

RatVector QuotientStructure::project_vector(const RatVector& v) const {
  if (!num.contains(v)) throw std::invalid_argument("project_vector: vector not in the numerator subspace");
  return project * v;
}

RatVector QuotientStructure::lift_vector(const RatVector& coords) const { return lift * coords; }

Subspace QuotientStructure::lift_subspace(const Subspace& s) const {
  if (s.ambient_dim() != dim()) throw std::invalid_argument("lift_subspace: dimension mismatch");
  auto rows = den.vectors();
  for (const auto& v : s.vectors()) rows.push_back(lift_vector(v));
  return Subspace::span(rows, ambient_dim);
}

QuotientResult quotient(const Subspace& num, const Subspace& den, const RatMatrix& x,
                        const std::optional<BilinearForm>& form) {
  const int amb = num.ambient_dim();
  if (den.ambient_dim() != amb || x.rows() != amb || x.cols() != amb)
    throw std::invalid_argument("quotient: size mismatch");
  if (!num.contains(den)) throw std::invalid_argument("quotient: denominator not contained in numerator");
  if (!num.contains(image(x, num))) throw std::invalid_argument("quotient: numerator not x-invariant");
  if (!den.contains(image(x, den))) throw std::invalid_argument("quotient: denominator not x-invariant");
  if (form && !(perp(den, *form) == num)) throw std::invalid_argument("quotient: numerator is not the perp of the denominator");

  // complement: rows of num at pivots den does not use
  std::vector<int> comp_rows;
  for (int r = 0; r < num.dim(); ++r) {
    int p = num.pivots()[static_cast<std::size_t>(r)];
    if (std::find(den.pivots().begin(), den.pivots().end(), p) == den.pivots().end()) comp_rows.push_back(r);
  }
  const int q = static_cast<int>(comp_rows.size());
  RatMatrix comp = num.basis().select_rows(comp_rows);

  std::vector<RatVector> all_rows = comp.row_list();
  for (const auto& d : den.vectors()) all_rows.push_back(d);
  RatMatrix s = RatMatrix::from_rows(all_rows, amb);  // dim(num) x amb

  // Restrict to the pivot columns of num: square and invertible.
  const int k = num.dim();
  RatMatrix sp(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sp(r, c) = s(r, num.pivots()[static_cast<std::size_t>(c)]);
  // coords c with c^T S = w^T, so c = (S_P^T)^{-1} w_P.
  RatMatrix aug(k, 2 * k);
  RatMatrix spt = sp.transpose();
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      aug(r, c) = spt(r, c);
      aug(r, k + c) = r == c ? 1 : 0;
    }
  RatMatrix red = rref(aug).reduced;
  RatMatrix project(q, amb);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < k; ++c) project(r, num.pivots()[static_cast<std::size_t>(c)]) = red(r, k + c);

  QuotientResult out;
  out.structure.ambient_dim = amb;
  out.structure.num = num;
  out.structure.den = den;
  out.structure.lift = comp.transpose();
  out.structure.project = project;
  out.x = project * x * out.structure.lift;
  if (form) {
    BilinearForm induced(out.structure.lift.transpose() * form->gram() * out.structure.lift);
    if (!induced.is_skew() || !induced.is_nondegenerate())
      throw std::logic_error("quotient: induced form is not symplectic");
    out.form = induced;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::vector<std::vector<std::string>> to_strings(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(to_strings(m.row(r)));
  return out;
}

std::vector<std::string> to_strings(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace esf
