#include "spectre/quasihomogeneous.hpp"

#include <algorithm>

#include "spectre/errors.hpp"

namespace spectre {

WeightVector::WeightVector(std::vector<Rat> weights) : w_(std::move(weights)) {
  for (const auto& w : w_)
    if (w.sign() <= 0 || w >= Rat(1))
      throw Error(ErrorKind::WeightOutOfRange,
                  "weight " + w.to_string() + " is outside the open interval (0, 1)");
}

Rat WeightVector::form_weight(const ExpVec& k) const {
  if (k.size() != w_.size()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  Rat total(0);
  for (std::size_t i = 0; i < w_.size(); ++i) total += w_[i] * Rat(k[i] + 1);
  return total;
}

Rat WeightVector::milnor_number() const {
  Rat mu(1);
  for (const auto& w : w_) mu *= (Rat(1) - w) / w;
  return mu;
}

WeightVector detect_weights(const Poly& f) {
  const std::size_t n = f.num_vars();
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no weights");

  // Augmented rows [nu | 1], reduced to row echelon form.
  std::vector<std::vector<Rat>> rows;
  for (const auto& e : support(f)) {
    std::vector<Rat> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(e[i]);
    row[n] = Rat(1);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = Rat(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rat factor = rows[i][c];
      for (std::size_t k = c; k <= n; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (!rows[i][n].is_zero())
      throw Error(ErrorKind::NotQuasiHomogeneous,
                  "the support of " + f.to_string() + " does not lie on a weight hyperplane");
  if (r < n)
    throw Error(ErrorKind::UnderdeterminedWeights,
                "the support of " + f.to_string() + " does not determine the weights");
  std::vector<Rat> w(n);
  for (std::size_t i = 0; i < r; ++i) w[pivot_cols[i]] = rows[i][n];
  return WeightVector(std::move(w));
}

SpectralSet qh_spectrum(const WeightVector& w) {
  const Rat mu = w.milnor_number();
  if (!mu.is_integer())
    throw Error(ErrorKind::NonIntegralMu,
                "prod (1 - w_i)/w_i = " + mu.to_string() + " is not an integer");

  // Substitute s = t^L with L the common denominator, so every factor
  // becomes an integer polynomial in t.
  BigInt common(1);
  for (const auto& wi : w.weights()) common = lcm(common, wi.den());
  const std::size_t L = common.get_ui();
  IntPoly numer = IntPoly::one();
  IntPoly denom = IntPoly::one();
  for (const auto& wi : w.weights()) {
    const std::size_t a = (wi * Rat(common)).num().get_ui();
    numer = numer * (IntPoly::monomial(L) - IntPoly::monomial(a));
    denom = denom * (IntPoly::monomial(a) - IntPoly::one());
  }
  auto [quot, rem] = numer.divmod_monic(denom);
  if (!rem.is_zero())
    throw Error(ErrorKind::InexactExpansion,
                "the weighted Poincare series does not expand to a polynomial");

  std::map<Rat, Multiplicity> counts;
  for (std::size_t j = 0; j < quot.coeffs().size(); ++j) {
    const BigInt& c = quot.coeffs()[j];
    if (c == 0) continue;
    if (c < 0)
      throw Error(ErrorKind::InexactExpansion,
                  "the weighted Poincare series has a negative coefficient");
    counts[Rat(BigInt(static_cast<unsigned long>(j)), common)] = c.get_ui();
  }
  SpectralSet s(std::move(counts), static_cast<int>(w.size()));
  if (BigInt(static_cast<unsigned long>(s.mu())) != mu.num())
    throw Error(ErrorKind::InexactExpansion, "spectrum cardinality differs from mu");
  return s;
}

SpectralSet bp_spectrum(const std::vector<int>& exponents) {
  for (int a : exponents)
    if (a < 2) throw Error(ErrorKind::InvalidArgument, "Brieskorn-Pham exponents must be >= 2");
  const std::size_t n = exponents.size();
  if (n == 0) return SpectralSet(0);
  std::map<Rat, Multiplicity> counts;
  std::vector<int> k(n, 0);
  for (;;) {
    Rat alpha(0);
    for (std::size_t i = 0; i < n; ++i) alpha += Rat(k[i] + 1, exponents[i]);
    ++counts[alpha];
    std::size_t i = 0;
    while (i < n && ++k[i] > exponents[i] - 2) k[i++] = 0;
    if (i == n) break;
  }
  return SpectralSet(std::move(counts), static_cast<int>(n));
}

}  // namespace spectre
