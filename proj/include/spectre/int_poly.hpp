#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectre/rational.hpp"

namespace spectre {

/// Dense univariate polynomial with integer coefficients; coeffs[i] is the
/// coefficient of t^i. The representation never carries leading zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);
  static IntPoly one() { return monomial(0); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Division by a polynomial with leading coefficient +-1; returns {quotient, remainder}.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  /// Descending powers of t, e.g. "t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The q-th cyclotomic polynomial, q >= 1.
IntPoly cyclotomic(std::size_t q);

/// Multiplicities m_q with p = prod Phi_q^{m_q} (up to sign); std::nullopt
/// when p has a root that is not a root of unity.
std::optional<std::map<std::size_t, std::size_t>> cyclotomic_factorization(const IntPoly& p);

std::size_t euler_phi(std::size_t q);

}  // namespace spectre
