#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "spectre/int_poly.hpp"
#include "spectre/rational.hpp"
#include "spectre/spectral_set.hpp"

namespace spectre {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix transpose() const;
  BigInt determinant() const;
  /// det(t I - M), monic of degree n.
  IntPoly characteristic_polynomial() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix power(const IntMatrix& m, std::uint64_t e);

/// Distinguished basis of vanishing cycles of a curve morsification.
struct VanishingBasis {
  /// Skew-symmetric intersection form <delta_i, delta_j>.
  IntMatrix intersection;
  /// 0-based order in which the critical values are encircled.
  std::vector<std::size_t> path_order;

  std::size_t rank() const { return intersection.size(); }
};

/// The A_k chain: <delta_i, delta_{i+1}> = 1, non-neighbours orthogonal.
VanishingBasis ak_chain(std::size_t k);

/// Transvection x -> x - <x, delta_i> delta_i (columns are images of basis
/// vectors). i is 0-based.
IntMatrix local_monodromy(const VanishingBasis& b, std::size_t i);

/// Product of the local monodromies along the path order, later paths on the left.
IntMatrix total_monodromy(const VanishingBasis& b);

/// Least q <= cap with m^q = I; std::nullopt if none (NotFiniteWithinCap).
std::optional<std::uint64_t> matrix_order(const IntMatrix& m, std::uint64_t cap);

/// Eigenvalue fractions read off the cyclotomic factorisation of the
/// characteristic polynomial; std::nullopt if some eigenvalue is not a root of unity.
std::optional<EigenvalueSet> matrix_eigenvalues(const IntMatrix& m);

}  // namespace spectre
