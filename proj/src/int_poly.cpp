#include "spectre/int_poly.hpp"

#include <algorithm>
#include <mutex>

#include "spectre/errors.hpp"

namespace spectre {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const BigInt lc = divisor.coeffs_.back();
  if (lc != 1 && lc != -1)
    throw Error(ErrorKind::InvalidArgument, "divisor must have leading coefficient +-1");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {IntPoly{}, *this};
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const BigInt q = rem[k] * lc;  // lc = +-1 is its own inverse
    quot[k - dd] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= q * divisor.coeffs_[i];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k == 1) mono = var;
    else if (k > 1) mono = var + "^" + std::to_string(k);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::size_t euler_phi(std::size_t q) {
  std::size_t result = q;
  std::size_t n = q;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(std::size_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
  }
  // t^q - 1 = prod_{d | q} Phi_d
  IntPoly p = IntPoly::monomial(q) - IntPoly::one();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d) continue;
    auto [quot, rem] = p.divmod_monic(cyclotomic(d));
    p = std::move(quot);
  }
  std::lock_guard lock(mutex);
  cache.emplace(q, p);
  return p;
}

std::optional<std::map<std::size_t, std::size_t>> cyclotomic_factorization(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  IntPoly rest = p;
  std::map<std::size_t, std::size_t> mult;
  // phi(q) >= sqrt(q / 2), so only q <= 2 deg^2 can contribute a factor.
  const std::size_t deg = static_cast<std::size_t>(std::max(0L, p.degree()));
  const std::size_t bound = std::max<std::size_t>(2, 2 * deg * deg);
  for (std::size_t q = 1; q <= bound && rest.degree() > 0; ++q) {
    if (euler_phi(q) > static_cast<std::size_t>(rest.degree())) continue;
    const IntPoly phi = cyclotomic(q);
    for (;;) {
      auto [quot, rem] = rest.divmod_monic(phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++mult[q];
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  const BigInt c = rest.coeff(0);
  if (c != 1 && c != -1) return std::nullopt;
  return mult;
}

}  // namespace spectre
