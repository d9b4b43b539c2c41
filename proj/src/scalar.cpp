#include "maxplus/scalar.hpp"

#include <cctype>

namespace maxplus {

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar::fraction: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  Scalar s;
  s.finite_ = true;
  s.value_ = std::move(q);
  return s;
}

const mpq_class& Scalar::value() const {
  if (!finite_) throw std::domain_error("Scalar::value: bottom has no rational value");
  return value_;
}

Scalar Scalar::negated() const {
  if (!finite_) throw std::domain_error("Scalar::negated: bottom");
  return Scalar(mpq_class(-value_));
}

std::string Scalar::str() const {
  if (!finite_) return "-inf";
  return value_.get_str();
}

namespace {

bool is_integer_token(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view token) {
  if (token == "-inf") return bottom();
  const auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  if (!is_integer_token(num)) {
    throw std::invalid_argument("Scalar::parse: bad token '" + std::string(token) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num), 10));
  } else {
    std::string_view den = token.substr(slash + 1);
    if (!is_integer_token(den) || den.front() == '-' || den.front() == '+') {
      throw std::invalid_argument("Scalar::parse: bad denominator in '" + std::string(token) +
                                  "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw std::invalid_argument("Scalar::parse: zero denominator in '" + std::string(token) +
                                  "'");
    }
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  }
  Scalar s;
  s.finite_ = true;
  s.value_ = std::move(q);
  return s;
}

Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  return Scalar(mpq_class(a.value() + b.value()));
}

}  // namespace maxplus
