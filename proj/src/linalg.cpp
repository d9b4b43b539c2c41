#include "maxplus/linalg.hpp"

#include <stdexcept>
#include <string>

namespace maxplus {

std::string label_str(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) return std::to_string(*i);
  const auto& w = std::get<Word>(label);
  return w.empty() ? "ε" : w.str();
}

Axis::Axis(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("Axis: duplicate label " + label_str(labels_[i]));
    }
  }
}

Axis Axis::indices(std::size_t n) {
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(static_cast<std::int64_t>(i));
  return Axis(std::move(labels));
}

Axis Axis::of_words(const std::vector<Word>& words) {
  std::vector<Label> labels(words.begin(), words.end());
  return Axis(std::move(labels));
}

std::optional<std::size_t> Axis::find(const Label& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Axis::require(const Label& label) const {
  if (auto i = find(label)) return *i;
  throw std::out_of_range("Axis: unknown label " + label_str(label));
}

Vector::Vector(std::vector<Scalar> entries)
    : axis_(Axis::indices(entries.size())), entries_(std::move(entries)) {}

Vector::Vector(Axis axis, std::vector<Scalar> entries)
    : axis_(std::move(axis)), entries_(std::move(entries)) {
  if (axis_.size() != entries_.size()) {
    throw std::invalid_argument("Vector: axis/entry count mismatch");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(Axis::indices(rows), Axis::indices(cols)) {}

Matrix::Matrix(Axis rows, Axis cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size()) {}

Matrix::Matrix(Axis rows, Axis cols, std::vector<Scalar> row_major)
    : rows_(std::move(rows)), cols_(std::move(cols)), data_(std::move(row_major)) {
  if (data_.size() != rows_.size() * cols_.size()) {
    throw std::invalid_argument("Matrix: entry count does not match axes");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(0);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  Matrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

const Scalar& Matrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= row_count() || j >= col_count()) throw std::out_of_range("Matrix::operator()");
  return data_[i * col_count() + j];
}

Scalar& Matrix::operator()(std::size_t i, std::size_t j) {
  if (i >= row_count() || j >= col_count()) throw std::out_of_range("Matrix::operator()");
  return data_[i * col_count() + j];
}

const Scalar& Matrix::at(const Label& row, const Label& col) const {
  return (*this)(rows_.require(row), cols_.require(col));
}

Vector Matrix::row(std::size_t i) const {
  std::vector<Scalar> e(col_count());
  for (std::size_t j = 0; j < col_count(); ++j) e[j] = (*this)(i, j);
  return Vector(cols_, std::move(e));
}

Vector Matrix::col(std::size_t j) const {
  std::vector<Scalar> e(row_count());
  for (std::size_t i = 0; i < row_count(); ++i) e[i] = (*this)(i, j);
  return Vector(rows_, std::move(e));
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < row_count(); ++i) {
    for (std::size_t j = 0; j < col_count(); ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.col_count() != b.row_count()) {
    throw std::invalid_argument("mat_mul: inner dimension mismatch");
  }
  Matrix out(a.row_axis(), b.col_axis());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t k = 0; k < b.col_count(); ++k) {
      Scalar acc;
      for (std::size_t j = 0; j < a.col_count(); ++j) {
        acc = oplus(acc, otimes(a(i, j), b(j, k)));
      }
      out(i, k) = acc;
    }
  }
  return out;
}

Vector mat_mul(const Vector& x, const Matrix& a) {
  if (x.size() != a.row_count()) throw std::invalid_argument("mat_mul: dimension mismatch");
  std::vector<Scalar> out(a.col_count());
  for (std::size_t j = 0; j < a.col_count(); ++j) {
    Scalar acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc = oplus(acc, otimes(x[i], a(i, j)));
    out[j] = acc;
  }
  return Vector(a.col_axis(), std::move(out));
}

Vector mat_mul(const Matrix& a, const Vector& x) {
  if (x.size() != a.col_count()) throw std::invalid_argument("mat_mul: dimension mismatch");
  std::vector<Scalar> out(a.row_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < x.size(); ++j) acc = oplus(acc, otimes(a(i, j), x[j]));
    out[i] = acc;
  }
  return Vector(a.row_axis(), std::move(out));
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc = oplus(acc, otimes(a[i], b[i]));
  return acc;
}

Vector principal_solution(const Matrix& a, const Vector& b) {
  if (b.size() != a.col_count()) {
    throw std::invalid_argument("principal_solution: dimension mismatch");
  }
  std::vector<Scalar> x(a.row_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    bool seen_constraint = false;
    bool forced_bottom = false;
    Scalar best;
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_bottom()) continue;  // no constraint from this column
      if (b[j].is_bottom()) {
        forced_bottom = true;
        break;
      }
      Scalar diff(mpq_class(b[j].value() - aij.value()));
      if (!seen_constraint || diff < best) best = diff;
      seen_constraint = true;
    }
    // An all-bottom row contributes nothing, so its coordinate is pinned
    // to bottom rather than left unconstrained.
    x[i] = (forced_bottom || !seen_constraint) ? Scalar::bottom() : best;
  }
  return Vector(a.row_axis(), std::move(x));
}

bool is_solution(const Vector& x, const Matrix& a, const Vector& b) {
  if (x.size() != a.row_count() || b.size() != a.col_count()) {
    throw std::invalid_argument("is_solution: dimension mismatch");
  }
  return mat_mul(x, a) == b;
}

std::optional<Vector> solve_row(const Matrix& a, const Vector& b) {
  Vector x = principal_solution(a, b);
  if (!is_solution(x, a, b)) return std::nullopt;
  return x;
}

MatrixSolution solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.col_count() != b.col_count()) {
    throw std::invalid_argument("solve_matrix: column count mismatch");
  }
  Matrix x(b.row_axis(), a.row_axis());
  for (std::size_t k = 0; k < b.row_count(); ++k) {
    auto sol = solve_row(a, b.row(k));
    if (!sol) return {std::nullopt, b.row_axis().label(k)};
    for (std::size_t i = 0; i < a.row_count(); ++i) x(k, i) = (*sol)[i];
  }
  return {std::move(x), std::nullopt};
}

std::optional<Vector> combination_coeffs(const std::vector<Vector>& basis, const Vector& target) {
  Matrix a(basis.size(), target.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != target.size()) {
      throw std::invalid_argument("combination_coeffs: dimension mismatch");
    }
    for (std::size_t j = 0; j < target.size(); ++j) a(i, j) = basis[i][j];
  }
  return solve_row(a, target);
}

namespace {

template <typename It>
Scalar max_entry(It begin, It end) {
  Scalar best = Scalar::bottom();
  for (It it = begin; it != end; ++it) best = oplus(best, *it);
  return best;
}

template <typename It>
Scalar min_finite_entry(It begin, It end, const char* who) {
  bool seen = false;
  Scalar best;
  for (It it = begin; it != end; ++it) {
    if (it->is_bottom()) throw std::domain_error(std::string(who) + ": bottom entry");
    if (!seen || *it < best) best = *it;
    seen = true;
  }
  if (!seen) throw std::domain_error(std::string(who) + ": empty input");
  return best;
}

}  // namespace

Scalar norm(const Vector& v) {
  if (v.size() == 0) throw std::domain_error("norm: empty vector");
  return max_entry(v.entries().begin(), v.entries().end());
}

Scalar norm(const Matrix& m) {
  if (m.row_count() == 0 || m.col_count() == 0) throw std::domain_error("norm: empty matrix");
  Scalar best = Scalar::bottom();
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) best = oplus(best, m(i, j));
  }
  return best;
}

Vector scale(const Vector& v) {
  const Scalar n = norm(v);
  if (n.is_bottom()) throw std::domain_error("scale: all entries are bottom");
  const Scalar shift = n.negated();
  std::vector<Scalar> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = otimes(shift, v[i]);
  return Vector(v.axis(), std::move(out));
}

Matrix scale(const Matrix& m) {
  const Scalar n = norm(m);
  if (n.is_bottom()) throw std::domain_error("scale: all entries are bottom");
  const Scalar shift = n.negated();
  Matrix out(m.row_axis(), m.col_axis());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) out(i, j) = otimes(shift, m(i, j));
  }
  return out;
}

Scalar height(const Vector& v) {
  if (v.size() == 0) throw std::domain_error("height: empty vector");
  const Scalar lo = min_finite_entry(v.entries().begin(), v.entries().end(), "height");
  const Scalar hi = norm(v);
  return Scalar(mpq_class(hi.value() - lo.value()));
}

Scalar height(const Matrix& m) {
  if (m.row_count() == 0 || m.col_count() == 0) throw std::domain_error("height: empty matrix");
  bool seen = false;
  Scalar lo, hi;
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    for (std::size_t j = 0; j < m.col_count(); ++j) {
      const Scalar& e = m(i, j);
      if (e.is_bottom()) throw std::domain_error("height: bottom entry");
      if (!seen || e < lo) lo = e;
      if (!seen || hi < e) hi = e;
      seen = true;
    }
  }
  return Scalar(mpq_class(hi.value() - lo.value()));
}

}  // namespace maxplus
