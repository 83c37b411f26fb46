#include "nesto/polynomial.hpp"

#include <sstream>

#include "nesto/error.hpp"

namespace nesto {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient multiplication");
  return r;
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_power(std::int64_t a, std::int64_t b, int k) {
  return IntPolynomial({a, b}).pow(k);
}

std::int64_t IntPolynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
}

std::int64_t IntPolynomial::eval(std::int64_t t) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, t), *it);
  return r;
}

IntPolynomial IntPolynomial::compose_shift(std::int64_t shift) const {
  // Horner with (t + shift) as the variable.
  IntPolynomial r;
  IntPolynomial lin({shift, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
  return r;
}

IntPolynomial IntPolynomial::reversed(int d) const {
  if (degree() > d) throw Error(ErrorCode::InvalidArgument, "reversal degree below polynomial degree");
  std::vector<std::int64_t> v(d + 1, 0);
  for (int i = 0; i <= degree(); ++i) v[d - i] = c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::times_monomial(std::int64_t c, int k) const {
  if (is_zero() || c == 0) return {};
  std::vector<std::int64_t> v(k, 0);
  for (auto x : c_) v.push_back(checked_mul(x, c));
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::nonnegative() const {
  for (auto x : c_)
    if (x < 0) return false;
  return true;
}

bool IntPolynomial::palindromic(int d) const {
  if (degree() > d) return false;
  for (int i = 0; i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) { return *this += -o; }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = checked_add(v[i + j], checked_mul(a.c_[i], b.c_[j]));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  IntPolynomial r = constant(1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::string IntPolynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

IntPolynomial RationalInT::scaled_to(int K) const {
  if (K < k) throw Error(ErrorCode::InvalidArgument, "scale below denominator degree");
  return numerator.times_monomial(sign, K - k);
}

std::string RationalInT::str() const {
  std::ostringstream os;
  os << numerator.str() << " / (" << (sign < 0 ? "-" : "") << "t^" << k << ')';
  return os.str();
}

}  // namespace nesto
