#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spectre/poly.hpp"

namespace spectre {

/// A local degree ordering: 1 is the largest monomial and lower total degree
/// always wins; ties are broken lexicographically or reverse-lexicographically.
class LocalOrder {
 public:
  enum class Kind { NegDegLex, NegDegRevLex };

  LocalOrder(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return nvars_; }

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const ExpVec& a, const ExpVec& b) const;
  bool greater(const ExpVec& a, const ExpVec& b) const { return compare(a, b) > 0; }

 private:
  Kind kind_;
  std::size_t nvars_;
};

struct StandardBasis {
  /// Generators whose leading monomials are pairwise non-divisible.
  std::vector<Poly> generators;
  /// Minimal generators of the leading ideal.
  std::vector<ExpVec> staircase;
};

/// Standard basis of the ideal generated by `gens` in the localisation of
/// the polynomial ring at the origin (Mora's tangent cone algorithm).
/// Zero generators are ignored.
StandardBasis standard_basis(const std::vector<Poly>& gens, const LocalOrder& order);

struct MilnorData {
  /// std::nullopt means the Milnor number is infinite (non-isolated singularity).
  std::optional<std::size_t> mu;
  /// Monomials under the staircase in graded order; empty when mu is infinite.
  std::vector<ExpVec> basis;

  bool isolated() const noexcept { return mu.has_value(); }
};

struct MilnorOptions {
  LocalOrder::Kind order = LocalOrder::Kind::NegDegRevLex;
  /// Abort with ResourceLimit once the staircase complement exceeds this size.
  std::size_t max_staircase = 10000;
};

/// Monomials outside the leading ideal; std::nullopt when there are
/// infinitely many (some variable has no pure power in the staircase).
std::optional<std::vector<ExpVec>> standard_monomials(const std::vector<ExpVec>& staircase,
                                                      std::size_t nvars, std::size_t cap);

/// mu(f) = dim O/J_f together with a monomial basis of the Milnor algebra.
MilnorData milnor_number(const Poly& f, const MilnorOptions& options = {});

}  // namespace spectre
