#include "spectre/arnold_bounds.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "spectre/errors.hpp"
#include "spectre/quasihomogeneous.hpp"

namespace spectre {

BoundProblem::BoundProblem(int n_, int d_, IntervalKind kind_) : n(n_), d(d_), kind(kind_) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "the ambient dimension n must be >= 2");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "the degree d must be >= 1");
}

std::uint64_t arnold_number(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "arnold_number needs n, d >= 1");
  // ways[s] = number of k in {1..d-1}^j with sum s
  std::vector<std::uint64_t> ways{1};
  for (int j = 0; j < n; ++j) {
    std::vector<std::uint64_t> next(ways.size() + static_cast<std::size_t>(d - 1), 0);
    for (std::size_t s = 0; s < ways.size(); ++s)
      for (int k = 1; k < d; ++k) next[s + static_cast<std::size_t>(k)] += ways[s];
    ways = std::move(next);
  }
  // nd/2 - d + 1 < s <= nd/2, compared after doubling.
  const long lower2 = static_cast<long>(n) * d - 2L * d + 2;
  const long upper2 = static_cast<long>(n) * d;
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < ways.size(); ++s) {
    const long s2 = 2 * static_cast<long>(s);
    if (s2 > lower2 && s2 <= upper2) total += ways[s];
  }
  return total;
}

Rat arnold_closed_form_3(int d) {
  const Rat x(d);
  if (d % 2 == 0) return Rat(23, 48) * x * x * x - Rat(9, 8) * x * x + Rat(5, 6) * x;
  return Rat(23, 48) * x * x * x - Rat(23, 16) * x * x + Rat(73, 48) * x - Rat(9, 16);
}

SpectralSet fermat_spectrum(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "fermat_spectrum needs n, d >= 1");
  if (d == 1) return SpectralSet(n);
  return bp_spectrum(std::vector<int>(static_cast<std::size_t>(n), d));
}

namespace {

std::vector<Rat> raw_breakpoints(const std::vector<SpectralSet>& sets) {
  std::set<Rat> points;
  for (const auto& s : sets)
    for (const auto& [beta, m] : s.entries()) {
      points.insert(beta);
      points.insert(beta - Rat(1));
    }
  return {points.begin(), points.end()};
}

std::vector<Rat> with_midpoints(const std::vector<Rat>& raw) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0) out.push_back((raw[i - 1] + raw[i]) / Rat(2));
    out.push_back(raw[i]);
  }
  return out;
}

}  // namespace

std::vector<Rat> breakpoints(const std::vector<SpectralSet>& sets) {
  return with_midpoints(raw_breakpoints(sets));
}

std::optional<std::uint64_t> max_copies(const SpectralSet& g, const BoundProblem& p) {
  if (g.num_vars() != p.n)
    throw Error(ErrorKind::InvalidArgument, "germ spectrum must live in n = " +
                                                std::to_string(p.n) + " variables");
  const SpectralSet fermat = fermat_spectrum(p.n, p.d);
  std::optional<std::uint64_t> best;
  for (const auto& alpha : breakpoints({g, fermat})) {
    const Multiplicity cg = interval_count(g, alpha, p.kind);
    if (cg == 0) continue;
    const std::uint64_t copies = interval_count(fermat, alpha, p.kind) / cg;
    if (!best || copies < *best) best = copies;
  }
  return best;
}

BoundReport check_configuration(const std::vector<SpectralSet>& germs, const BoundProblem& p) {
  for (const auto& g : germs)
    if (g.num_vars() != p.n)
      throw Error(ErrorKind::InvalidArgument, "every germ spectrum must live in n = " +
                                                  std::to_string(p.n) + " variables");
  const SpectralSet fermat = fermat_spectrum(p.n, p.d);
  std::vector<SpectralSet> all = germs;
  all.push_back(fermat);
  const std::vector<Rat> raw = raw_breakpoints(all);
  const std::set<Rat> exact(raw.begin(), raw.end());

  BoundReport report;
  bool have_worst = false;
  long worst_deficit = 0;
  bool worst_exact = false;
  for (const auto& alpha : with_midpoints(raw)) {
    BoundRow row{alpha, interval_count(fermat, alpha, p.kind), 0};
    for (const auto& g : germs) row.config += interval_count(g, alpha, p.kind);
    if (row.config > row.fermat) report.feasible = false;
    const long deficit = static_cast<long>(row.config) - static_cast<long>(row.fermat);
    const bool is_exact = exact.count(alpha) > 0;
    // Largest deficit; among ties prefer an exact breakpoint, then the smallest alpha.
    if (!have_worst || deficit > worst_deficit || (deficit == worst_deficit && is_exact && !worst_exact)) {
      have_worst = true;
      worst_deficit = deficit;
      worst_exact = is_exact;
      report.worst_alpha = alpha;
      report.fermat_count = row.fermat;
      report.config_count = row.config;
    }
    report.table.push_back(row);
  }
  return report;
}

std::string to_json(const BoundReport& r, int indent) {
  nlohmann::json j;
  j["feasible"] = r.feasible;
  j["worst_alpha"] = r.worst_alpha.to_string();
  j["fermat_count"] = r.fermat_count;
  j["config_count"] = r.config_count;
  j["table"] = nlohmann::json::array();
  for (const auto& row : r.table)
    j["table"].push_back(
        {{"alpha", row.alpha.to_string()}, {"fermat", row.fermat}, {"config", row.config}});
  return j.dump(indent);
}

BoundReport bound_report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BoundReport r;
    r.feasible = j.at("feasible").get<bool>();
    r.worst_alpha = Rat::parse(j.at("worst_alpha").get<std::string>());
    r.fermat_count = j.at("fermat_count").get<Multiplicity>();
    r.config_count = j.at("config_count").get<Multiplicity>();
    for (const auto& row : j.at("table"))
      r.table.push_back({Rat::parse(row.at("alpha").get<std::string>()),
                         row.at("fermat").get<Multiplicity>(), row.at("config").get<Multiplicity>()});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed bound report JSON: ") + e.what());
  }
}

std::uint64_t basset_bound(int d) {
  if (d < 3) throw Error(ErrorKind::DomainError, "basset bound needs d >= 3");
  const BigInt dd(d);
  const BigInt radicand = dd * (dd - 1) * (3 * dd - 14) + 25;
  if (radicand < 0)
    throw Error(ErrorKind::DomainError,
                "basset bound: d(d-1)(3d-14)+25 = " + radicand.get_str() + " is negative");
  const BigInt a = dd * (dd - 1) * (dd - 1) - 5;
  const BigInt s = isqrt(radicand);
  // floor((a - sqrt(R)) / 2); when R is not a square, a - sqrt(R) lies in (a-s-1, a-s).
  BigInt numer = s * s == radicand ? BigInt(a - s) : BigInt(a - s - 1);
  BigInt q;
  mpz_fdiv_q_ui(q.get_mpz_t(), numer.get_mpz_t(), 2);
  if (q < 0) throw Error(ErrorKind::DomainError, "basset bound is negative");
  return q.get_ui();
}

Rat miyaoka_yau_bound(int d) {
  if (d < 4) throw Error(ErrorKind::DomainError, "miyaoka-yau bound needs d >= 4");
  const Rat x(d);
  return Rat(4, 9) * x * (x - Rat(1)) * (x - Rat(1));
}

std::uint64_t plane_curve_bound(int d) {
  if (d < 1) throw Error(ErrorKind::DomainError, "plane curve bound needs d >= 1");
  return static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1) / 2;
}

ClassicalBounds classical_bounds(int d) {
  ClassicalBounds b;
  const auto attempt = [&](auto&& compute, auto& slot) {
    try {
      slot = compute(d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DomainError) throw;
      b.domain_errors.emplace_back(e.what());
    }
  };
  attempt(basset_bound, b.basset);
  attempt(miyaoka_yau_bound, b.miyaoka_yau);
  attempt(plane_curve_bound, b.plane_curve);
  return b;
}

}  // namespace spectre
