#pragma once

#include <vector>

#include "spectre/poly.hpp"
#include "spectre/spectral_set.hpp"

namespace spectre {

/// Weights w_0..w_n of a quasi-homogeneous germ, each strictly inside (0, 1).
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rat> weights);

  const std::vector<Rat>& weights() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  const Rat& operator[](std::size_t i) const { return w_[i]; }

  /// sum w_i (k_i + 1): the weight of the form x^k dx_0 ^ ... ^ dx_n.
  Rat form_weight(const ExpVec& k) const;
  /// prod (1 - w_i) / w_i.
  Rat milnor_number() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rat> w_;
};

/// Solves w . nu = 1 over the support of f. Throws NotQuasiHomogeneous,
/// UnderdeterminedWeights or WeightOutOfRange.
WeightVector detect_weights(const Poly& f);

/// Expansion of prod (s - s^{w_i}) / (s^{w_i} - 1).
SpectralSet qh_spectrum(const WeightVector& w);

/// {sum (k_i + 1) / a_i : 0 <= k_i <= a_i - 2} for x_0^{a_0} + ... + x_n^{a_n}.
SpectralSet bp_spectrum(const std::vector<int>& exponents);

}  // namespace spectre
