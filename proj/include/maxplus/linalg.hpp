#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "maxplus/scalar.hpp"
#include "maxplus/word.hpp"

namespace maxplus {

/// Axis labels are either plain indices or words (table rows/columns are
/// indexed by prefixes and suffixes).
using Label = std::variant<std::int64_t, Word>;

std::string label_str(const Label& label);

/// An ordered list of unique labels. Operations on vectors and matrices
/// are positional; labels are carried along for exact lookup and for
/// reproducible diagnostics.
class Axis {
 public:
  Axis() = default;
  explicit Axis(std::vector<Label> labels);

  static Axis indices(std::size_t n);
  static Axis of_words(const std::vector<Word>& words);

  std::size_t size() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const { return labels_; }
  std::optional<std::size_t> find(const Label& label) const;
  std::size_t require(const Label& label) const;

  bool operator==(const Axis& o) const { return labels_ == o.labels_; }

 private:
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> entries);
  Vector(Axis axis, std::vector<Scalar> entries);

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_.at(i); }
  Scalar& operator[](std::size_t i) { return entries_.at(i); }
  const Scalar& at(const Label& label) const { return entries_.at(axis_.require(label)); }
  const Axis& axis() const { return axis_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  /// Entrywise exact equality; axis labels are metadata and not compared.
  bool operator==(const Vector& o) const { return entries_ == o.entries_; }

 private:
  Axis axis_;
  std::vector<Scalar> entries_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // all bottom
  Matrix(Axis rows, Axis cols);                // all bottom
  Matrix(Axis rows, Axis cols, std::vector<Scalar> row_major);

  /// Diagonal 0, off-diagonal bottom: the unit of mat_mul.
  static Matrix identity(std::size_t n);
  /// Stacks equally sized vectors as rows (index axes).
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const Axis& row_axis() const { return rows_; }
  const Axis& col_axis() const { return cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const;
  Scalar& operator()(std::size_t i, std::size_t j);
  const Scalar& at(const Label& row, const Label& col) const;

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;

  /// Dimensions and entrywise exact equality; labels not compared.
  bool operator==(const Matrix& o) const {
    return rows_.size() == o.rows_.size() && cols_.size() == o.cols_.size() && data_ == o.data_;
  }

 private:
  Axis rows_, cols_;
  std::vector<Scalar> data_;  // row-major
};

/// (AB)(i,k) = oplus_j A(i,j) otimes B(j,k). Requires matching inner
/// dimension (positional; labels need not coincide).
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector mat_mul(const Vector& x, const Matrix& a);
/// Matrix times column vector.
Vector mat_mul(const Matrix& a, const Vector& x);
/// oplus_i a(i) otimes b(i).
Scalar dot(const Vector& a, const Vector& b);

/// The residuation candidate for x A = b (A: n x m, b: length m):
///
///   x(i) = min over j of (b(j) - A(i,j)),
///
/// where terms with A(i,j) = -inf impose no constraint and are skipped,
/// a term with b(j) = -inf and A(i,j) finite forces x(i) = -inf, and an
/// all-(-inf) row yields x(i) = -inf. The candidate always satisfies
/// x A <= b entrywise but may fail to be a solution.
Vector principal_solution(const Matrix& a, const Vector& b);

/// Exact entrywise check of x A = b.
bool is_solution(const Vector& x, const Matrix& a, const Vector& b);

/// Complete solver for x A = b: the principal candidate is a solution
/// iff any solution exists. When A has no all-(-inf) row, the returned
/// solution is the pointwise maximum among all solutions.
std::optional<Vector> solve_row(const Matrix& a, const Vector& b);

struct MatrixSolution {
  std::optional<Matrix> solution;       // X with X A = B, all rows principal
  std::optional<Label> failed_row;      // label of the first unsolvable row of B
};

/// Solves X A = B row by row; succeeds iff every row does.
MatrixSolution solve_matrix(const Matrix& a, const Matrix& b);

/// Coefficients c with target = oplus_i c(i) otimes basis[i], if any.
/// An empty basis spans exactly the all-bottom vector.
std::optional<Vector> combination_coeffs(const std::vector<Vector>& basis, const Vector& target);

// Diagnostics on vectors and matrices: the norm is the maximum entry,
// scaling shifts every entry by -norm (so the result has norm 0), and
// the height is max minus min over all entries.
Scalar norm(const Vector& v);
Scalar norm(const Matrix& m);
Vector scale(const Vector& v);   // requires at least one finite entry
Matrix scale(const Matrix& m);   // shifts by the global maximum
Scalar height(const Vector& v);  // requires all entries finite
Scalar height(const Matrix& m);

}  // namespace maxplus
