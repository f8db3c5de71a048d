#include "schrom/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

namespace schrom {

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : coeffs_(coefficients) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, std::int64_t coefficient) {
  std::vector<std::int64_t> c(power + 1, 0);
  c[power] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : 0;
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(std::int64_t shift) const {
  // Horner in the polynomial ring: p(x + shift)
  const IntPolynomial linear{shift, 1};
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + IntPolynomial{*it};
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial out{1};
  for (unsigned k = 0; k < exponent; ++k) out = out * *this;
  return out;
}

std::string IntPolynomial::to_string(std::string_view variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t mag = std::llabs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace schrom
