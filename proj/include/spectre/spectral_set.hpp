#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spectre/int_poly.hpp"
#include "spectre/rational.hpp"

namespace spectre {

using Multiplicity = std::uint64_t;

/// Multiset of spectral numbers of a germ in `num_vars` variables.
/// Entries are strictly increasing in alpha with positive multiplicities.
class SpectralSet {
 public:
  using Entry = std::pair<Rat, Multiplicity>;

  SpectralSet() = default;
  explicit SpectralSet(int num_vars) : num_vars_(num_vars) {}
  SpectralSet(std::map<Rat, Multiplicity> counts, int num_vars);

  static SpectralSet from_values(const std::vector<Rat>& values, int num_vars);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Total multiplicity, i.e. the Milnor number.
  Multiplicity mu() const;
  Multiplicity multiplicity(const Rat& alpha) const;
  const Rat& min() const;
  const Rat& max() const;

  /// Sorted list with repetitions.
  std::vector<Rat> values() const;
  /// Sub-multiset with lo < alpha <= hi.
  SpectralSet restricted(const Rat& lo, const Rat& hi) const;

  friend bool operator==(const SpectralSet&, const SpectralSet&) = default;

 private:
  std::vector<Entry> entries_;
  int num_vars_ = 0;
};

enum class IntervalKind { Open, HalfOpenRight };

/// Multiset of monodromy eigenvalues exp(2 pi i * fraction), fraction in [0, 1).
class EigenvalueSet {
 public:
  using Entry = std::pair<Rat, Multiplicity>;

  EigenvalueSet() = default;
  explicit EigenvalueSet(std::map<Rat, Multiplicity> counts);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Multiplicity total() const;

  friend bool operator==(const EigenvalueSet&, const EigenvalueSet&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Pairwise sums; the spectral polynomials multiply.
SpectralSet thom_sebastiani(const SpectralSet& a, const SpectralSet& b);

/// Spectrum of f + z^m: m-1 shifted copies.
SpectralSet suspension(const SpectralSet& s, int m);

/// The A_{m-1} point spectrum {1/m, ..., (m-1)/m} in one variable.
SpectralSet monomial_spectrum(int m);

bool check_symmetry(const SpectralSet& s);
bool check_range(const SpectralSet& s);

/// Multiplicity inside (alpha, alpha+1) or (alpha, alpha+1].
Multiplicity interval_count(const SpectralSet& s, const Rat& alpha, IntervalKind kind);

EigenvalueSet eigenvalues(const SpectralSet& s);

struct GaloisUnstable {
  EigenvalueSet fractions;
};

/// prod Phi_q^{m_q}, provided the fractions of each reduced denominator q
/// all carry the same multiplicity.
std::variant<IntPoly, GaloisUnstable> characteristic_polynomial(const EigenvalueSet& e);

/// The fraction multiset of the roots of a product of cyclotomic polynomials;
/// std::nullopt if p has a root that is not a root of unity.
std::optional<EigenvalueSet> eigenvalues_of(const IntPoly& p);

/// Order of the semisimple part: lcm of the reduced denominators.
std::uint64_t monodromy_order(const EigenvalueSet& e);

struct VarianceCheck {
  Rat lhs;
  Rat rhs;
  bool holds;
};

/// lhs = (1/mu) sum (alpha - num_vars/2)^2, rhs = (alpha_max - alpha_min)/12.
VarianceCheck variance_check(const SpectralSet& s);

/// Two-row box: multiplicities above the spectral numbers.
std::string render_table(const SpectralSet& s);

/// {"num_vars": n, "spectrum": [{"alpha": "p/q", "mult": k}, ...]}
std::string to_json(const SpectralSet& s, int indent = -1);
SpectralSet spectral_set_from_json(const std::string& text);

}  // namespace spectre
