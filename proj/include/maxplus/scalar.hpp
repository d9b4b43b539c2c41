#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxplus {

/// An element of the max-plus semiring restricted to exact rationals:
/// either the bottom element -inf (the unit of oplus, annihilator of
/// otimes) or an arbitrary-precision rational in canonical reduced form.
///
/// All comparisons are exact; there is no floating-point mode and no
/// tolerance anywhere. The default-constructed value is bottom, so a
/// Scalar can serve directly as an accumulator for oplus.
class Scalar {
 public:
  Scalar() : finite_(false) {}
  Scalar(long v) : finite_(true), value_(v) {}  // NOLINT: implicit by design
  explicit Scalar(mpq_class v) : finite_(true), value_(std::move(v)) {
    value_.canonicalize();
  }

  static Scalar bottom() { return Scalar(); }

  /// num/den as an exact rational. Throws std::domain_error on den == 0.
  static Scalar fraction(long num, long den);

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// The rational value; throws std::domain_error when bottom.
  const mpq_class& value() const;

  /// Additive inverse of the underlying rational (not a semiring
  /// operation). Throws std::domain_error when bottom.
  Scalar negated() const;

  /// Text form: "-inf", an integer "n", or a canonical fraction "p/q".
  std::string str() const;

  /// Parses the text form above. Throws std::invalid_argument on any
  /// other token (including fractions with a zero denominator).
  static Scalar parse(std::string_view token);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  /// Total order with bottom strictly below every finite value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  bool finite_;
  mpq_class value_;
};

/// Semiring addition: max, with bottom as the neutral element.
inline Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Semiring multiplication: rational sum; bottom annihilates.
Scalar otimes(const Scalar& a, const Scalar& b);

}  // namespace maxplus
