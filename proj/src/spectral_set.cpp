#include "spectre/spectral_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "spectre/errors.hpp"

namespace spectre {

SpectralSet::SpectralSet(std::map<Rat, Multiplicity> counts, int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw Error(ErrorKind::InvalidArgument, "negative variable count");
  for (auto& [alpha, m] : counts)
    if (m > 0) entries_.emplace_back(alpha, m);
}

SpectralSet SpectralSet::from_values(const std::vector<Rat>& values, int num_vars) {
  std::map<Rat, Multiplicity> counts;
  for (const auto& v : values) ++counts[v];
  return SpectralSet(std::move(counts), num_vars);
}

Multiplicity SpectralSet::mu() const {
  Multiplicity total = 0;
  for (const auto& [alpha, m] : entries_) total += m;
  return total;
}

Multiplicity SpectralSet::multiplicity(const Rat& alpha) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), alpha,
                                   [](const Entry& e, const Rat& a) { return e.first < a; });
  return it != entries_.end() && it->first == alpha ? it->second : 0;
}

const Rat& SpectralSet::min() const {
  if (empty()) throw Error(ErrorKind::InvalidArgument, "minimum of an empty spectrum");
  return entries_.front().first;
}

const Rat& SpectralSet::max() const {
  if (empty()) throw Error(ErrorKind::InvalidArgument, "maximum of an empty spectrum");
  return entries_.back().first;
}

std::vector<Rat> SpectralSet::values() const {
  std::vector<Rat> out;
  for (const auto& [alpha, m] : entries_) out.insert(out.end(), m, alpha);
  return out;
}

SpectralSet SpectralSet::restricted(const Rat& lo, const Rat& hi) const {
  SpectralSet out(num_vars_);
  for (const auto& e : entries_)
    if (e.first > lo && e.first <= hi) out.entries_.push_back(e);
  return out;
}

EigenvalueSet::EigenvalueSet(std::map<Rat, Multiplicity> counts) {
  for (auto& [fraction, m] : counts) {
    if (fraction.sign() < 0 || fraction >= Rat(1))
      throw Error(ErrorKind::InvalidArgument, "eigenvalue fractions must lie in [0, 1)");
    if (m > 0) entries_.emplace_back(fraction, m);
  }
}

Multiplicity EigenvalueSet::total() const {
  Multiplicity t = 0;
  for (const auto& [f, m] : entries_) t += m;
  return t;
}

SpectralSet thom_sebastiani(const SpectralSet& a, const SpectralSet& b) {
  // The empty set in zero variables is the unit (Sp = 1 for a smooth point).
  if (a.empty() && a.num_vars() == 0) return b;
  if (b.empty() && b.num_vars() == 0) return a;
  std::map<Rat, Multiplicity> counts;
  for (const auto& [x, mx] : a.entries())
    for (const auto& [y, my] : b.entries()) counts[x + y] += mx * my;
  return SpectralSet(std::move(counts), a.num_vars() + b.num_vars());
}

SpectralSet monomial_spectrum(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "x^m needs m >= 2");
  std::map<Rat, Multiplicity> counts;
  for (int k = 1; k < m; ++k) counts[Rat(k, m)] = 1;
  return SpectralSet(std::move(counts), 1);
}

SpectralSet suspension(const SpectralSet& s, int m) {
  return thom_sebastiani(s, monomial_spectrum(m));
}

bool check_symmetry(const SpectralSet& s) {
  const Rat center2(s.num_vars());
  for (const auto& [alpha, m] : s.entries())
    if (s.multiplicity(center2 - alpha) != m) return false;
  return true;
}

bool check_range(const SpectralSet& s) {
  const Rat top(s.num_vars());
  return std::all_of(s.entries().begin(), s.entries().end(),
                     [&](const auto& e) { return e.first.sign() > 0 && e.first < top; });
}

Multiplicity interval_count(const SpectralSet& s, const Rat& alpha, IntervalKind kind) {
  const Rat upper = alpha + Rat(1);
  Multiplicity total = 0;
  for (const auto& [beta, m] : s.entries()) {
    if (beta <= alpha) continue;
    if (beta < upper || (kind == IntervalKind::HalfOpenRight && beta == upper)) total += m;
  }
  return total;
}

EigenvalueSet eigenvalues(const SpectralSet& s) {
  std::map<Rat, Multiplicity> counts;
  for (const auto& [alpha, m] : s.entries()) counts[alpha.frac()] += m;
  return EigenvalueSet(std::move(counts));
}

namespace {

std::size_t denominator_of(const Rat& fraction) { return fraction.den().get_ui(); }

}  // namespace

std::variant<IntPoly, GaloisUnstable> characteristic_polynomial(const EigenvalueSet& e) {
  std::map<std::size_t, std::vector<EigenvalueSet::Entry>> by_den;
  for (const auto& entry : e.entries()) by_den[denominator_of(entry.first)].push_back(entry);
  IntPoly result = IntPoly::one();
  for (const auto& [q, group] : by_den) {
    const Multiplicity m = group.front().second;
    const bool stable = group.size() == euler_phi(q) &&
                        std::all_of(group.begin(), group.end(),
                                    [&](const auto& g) { return g.second == m; });
    if (!stable) return GaloisUnstable{e};
    const IntPoly phi = cyclotomic(q);
    for (Multiplicity i = 0; i < m; ++i) result = result * phi;
  }
  return result;
}

std::optional<EigenvalueSet> eigenvalues_of(const IntPoly& p) {
  const auto factors = cyclotomic_factorization(p);
  if (!factors) return std::nullopt;
  std::map<Rat, Multiplicity> counts;
  for (const auto& [q, m] : *factors) {
    for (std::size_t k = 0; k < q; ++k)
      if (std::gcd(k, q) == 1) counts[Rat(static_cast<long>(k), static_cast<long>(q))] += m;
  }
  return EigenvalueSet(std::move(counts));
}

std::uint64_t monodromy_order(const EigenvalueSet& e) {
  std::uint64_t order = 1;
  for (const auto& [fraction, m] : e.entries()) order = std::lcm(order, denominator_of(fraction));
  return order;
}

VarianceCheck variance_check(const SpectralSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "variance of an empty spectrum");
  const Rat center = Rat(s.num_vars(), 2);
  Rat sum(0);
  for (const auto& [alpha, m] : s.entries()) {
    const Rat d = alpha - center;
    sum += d * d * Rat(static_cast<long>(m));
  }
  VarianceCheck v;
  v.lhs = sum / Rat(static_cast<long>(s.mu()));
  v.rhs = (s.max() - s.min()) / Rat(12);
  v.holds = v.lhs <= v.rhs;
  return v;
}

std::string render_table(const SpectralSet& s) {
  if (s.empty()) return "(empty spectrum)\n";
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  std::vector<std::size_t> width;
  for (const auto& [alpha, m] : s.entries()) {
    top.push_back(std::to_string(m));
    bottom.push_back(alpha.to_string());
    width.push_back(std::max(top.back().size(), bottom.back().size()) + 2);
  }
  const auto rule = [&] {
    std::string r = "+";
    for (std::size_t w : width) r += std::string(w, '-') + "+";
    return r + "\n";
  };
  const auto row = [&](const std::vector<std::string>& cells) {
    std::string r = "|";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t pad = width[i] - cells[i].size();
      r += std::string(pad - pad / 2, ' ') + cells[i] + std::string(pad / 2, ' ') + "|";
    }
    return r + "\n";
  };
  return rule() + row(top) + rule() + row(bottom) + rule();
}

std::string to_json(const SpectralSet& s, int indent) {
  nlohmann::json j;
  j["num_vars"] = s.num_vars();
  j["spectrum"] = nlohmann::json::array();
  for (const auto& [alpha, m] : s.entries())
    j["spectrum"].push_back({{"alpha", alpha.to_string()}, {"mult", m}});
  return j.dump(indent);
}

SpectralSet spectral_set_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::map<Rat, Multiplicity> counts;
    for (const auto& item : j.at("spectrum")) {
      const auto m = item.at("mult").get<Multiplicity>();
      if (m == 0) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
      counts[Rat::parse(item.at("alpha").get<std::string>())] += m;
    }
    return SpectralSet(std::move(counts), j.at("num_vars").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed spectrum JSON: ") + e.what());
  }
}

}  // namespace spectre
