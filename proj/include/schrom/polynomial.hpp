#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace schrom {

/// Integer polynomial in one variable; coefficient k multiplies x^k.
/// Canonical form has no trailing zero coefficient (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  static IntPolynomial monomial(std::size_t power, std::int64_t coefficient = 1);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t power) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::int64_t evaluate(std::int64_t x) const;
  /// p(x + shift) as a polynomial in x.
  IntPolynomial shifted(std::int64_t shift) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form such as "q^3 - 3q + 1".
  std::string to_string(std::string_view variable = "q") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace schrom
