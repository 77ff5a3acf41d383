#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectre/spectral_set.hpp"

namespace spectre {

/// Hypersurface of degree d in P^n; its singular points are germs in n variables.
struct BoundProblem {
  int n = 3;
  int d = 3;
  IntervalKind kind = IntervalKind::Open;

  BoundProblem() = default;
  BoundProblem(int n, int d, IntervalKind kind = IntervalKind::Open);
};

struct BoundRow {
  Rat alpha;
  Multiplicity fermat = 0;
  Multiplicity config = 0;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct BoundReport {
  bool feasible = true;
  /// Candidate alpha with the largest config - fermat deficit.
  Rat worst_alpha;
  Multiplicity fermat_count = 0;
  Multiplicity config_count = 0;
  std::vector<BoundRow> table;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// #{k in (0,d)^n : nd/2 - d + 1 < sum k_i <= nd/2}.
std::uint64_t arnold_number(int n, int d);

/// The parity-split cubic closed form for A_3(d).
Rat arnold_closed_form_3(int d);

/// Spectrum of x_1^d + ... + x_n^d; empty in n variables for d = 1.
SpectralSet fermat_spectrum(int n, int d);

/// Every beta and beta - 1 over all sets, plus midpoints of consecutive values.
std::vector<Rat> breakpoints(const std::vector<SpectralSet>& sets);

/// Largest number of copies of g allowed on the hypersurface;
/// std::nullopt means unbounded (no interval sees g).
std::optional<std::uint64_t> max_copies(const SpectralSet& g, const BoundProblem& p);

/// Checks the semicontinuity inequality for a configuration of germs.
BoundReport check_configuration(const std::vector<SpectralSet>& germs, const BoundProblem& p);

/// {"feasible", "worst_alpha", "fermat_count", "config_count", "table"}.
std::string to_json(const BoundReport& r, int indent = -1);
BoundReport bound_report_from_json(const std::string& text);

std::uint64_t basset_bound(int d);
Rat miyaoka_yau_bound(int d);
std::uint64_t plane_curve_bound(int d);

struct ClassicalBounds {
  std::optional<std::uint64_t> basset;
  std::optional<Rat> miyaoka_yau;
  std::optional<std::uint64_t> plane_curve;
  /// Why a bound is missing, one message per absent field.
  std::vector<std::string> domain_errors;
};

ClassicalBounds classical_bounds(int d);

}  // namespace spectre
