#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nesto {

// Dense integer polynomial in t, lowest degree first, trailing zeros trimmed.
// Every arithmetic operation is overflow-checked and throws Overflow.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(std::int64_t c, int degree);
  // (a + b t)^k
  static IntPolynomial binomial_power(std::int64_t a, std::int64_t b, int k);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int i) const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t eval(std::int64_t t) const;

  // p(t + shift)
  IntPolynomial compose_shift(std::int64_t shift) const;
  // t^d p(1/t); requires degree <= d.
  IntPolynomial reversed(int d) const;
  IntPolynomial times_monomial(std::int64_t c, int k) const;
  bool nonnegative() const;
  bool palindromic(int d) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial pow(int k) const;
  bool operator==(const IntPolynomial&) const = default;

  // "[1,3,1]"
  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// numerator / (sign * t^k), kept unreduced.
struct RationalInT {
  IntPolynomial numerator;
  int sign = 1;
  int k = 0;

  // numerator * sign * t^(K - k), i.e. the value multiplied by t^K.
  IntPolynomial scaled_to(int K) const;
  std::string str() const;
};

}  // namespace nesto
