#include "spectre/local_algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "spectre/errors.hpp"

namespace spectre {

int LocalOrder::compare(const ExpVec& a, const ExpVec& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  if (kind_ == Kind::NegDegLex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  } else {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

using Term = std::pair<ExpVec, Rat>;

// Terms sorted from the largest to the smallest monomial in the local order,
// so front() is the leading term.
struct LocalPoly {
  std::vector<Term> terms;
  int max_degree = 0;

  bool is_zero() const { return terms.empty(); }
  const ExpVec& lead() const { return terms.front().first; }
  const Rat& lead_coef() const { return terms.front().second; }
  int ecart() const { return max_degree - lead().degree(); }

  void refresh() {
    max_degree = 0;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.first.degree());
  }
};

LocalPoly to_local(const Poly& p, const LocalOrder& order) {
  LocalPoly lp;
  lp.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(lp.terms.begin(), lp.terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  lp.refresh();
  return lp;
}

Poly to_poly(const LocalPoly& lp, const std::vector<std::string>& vars) {
  Poly p(vars);
  for (const auto& [e, c] : lp.terms) p.add_term(e, c);
  return p;
}

void make_monic(LocalPoly& p) {
  if (p.is_zero() || p.lead_coef() == Rat(1)) return;
  const Rat inv = Rat(1) / p.lead_coef();
  for (auto& t : p.terms) t.second *= inv;
}

// a - c * x^shift * b, merged in order. Multiplication by a monomial
// preserves a monomial order, so the shifted b stays sorted.
LocalPoly sub_scaled(const LocalPoly& a, const Rat& c, const ExpVec& shift, const LocalPoly& b,
                     const LocalOrder& order) {
  LocalPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    ExpVec eb = b.terms[j].first + shift;
    const int cmp = i == a.terms.size() ? -1 : order.compare(a.terms[i].first, eb);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.emplace_back(std::move(eb), -(c * b.terms[j].second));
      ++j;
    } else {
      Rat v = a.terms[i].second - c * b.terms[j].second;
      if (!v.is_zero()) r.terms.emplace_back(std::move(eb), std::move(v));
      ++i;
      ++j;
    }
  }
  r.refresh();
  return r;
}

LocalPoly spoly(const LocalPoly& f, const LocalPoly& g, const LocalOrder& order) {
  const ExpVec m = lcm(f.lead(), g.lead());
  // (m/LM f) f / LC f - (m/LM g) g / LC g
  LocalPoly shifted_f;
  const ExpVec sf = m - f.lead();
  const Rat inv = Rat(1) / f.lead_coef();
  shifted_f.terms.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) shifted_f.terms.emplace_back(e + sf, c * inv);
  shifted_f.refresh();
  return sub_scaled(shifted_f, Rat(1) / g.lead_coef(), m - g.lead(), g, order);
}

// Mora's normal form: reducers are chosen with minimal ecart, and an
// intermediate h of smaller ecart than its reducer joins the reducer set.
LocalPoly mora_normal_form(LocalPoly h, const std::vector<LocalPoly>& basis,
                           const LocalOrder& order) {
  std::vector<LocalPoly> extra;
  while (!h.is_zero()) {
    const LocalPoly* best = nullptr;
    const auto consider = [&](const LocalPoly& g) {
      if (!g.lead().divides(h.lead())) return;
      if (best == nullptr || g.ecart() < best->ecart()) best = &g;
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (best == nullptr) break;
    LocalPoly reducer = *best;
    if (reducer.ecart() > h.ecart()) extra.push_back(h);
    h = sub_scaled(h, h.lead_coef() / reducer.lead_coef(), h.lead() - reducer.lead(), reducer,
                   order);
  }
  return h;
}

}  // namespace

StandardBasis standard_basis(const std::vector<Poly>& gens, const LocalOrder& order) {
  std::vector<std::string> vars;
  std::vector<LocalPoly> basis;
  for (const auto& g : gens) {
    if (g.num_vars() != order.num_vars())
      throw Error(ErrorKind::InvalidArgument, "generator variable count differs from the order");
    if (vars.empty()) vars = g.variables();
    if (g.is_zero()) continue;
    LocalPoly lp = to_local(g, order);
    make_monic(lp);
    basis.push_back(std::move(lp));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    // Lowest-degree lcm first; that is the natural "largest first" strategy
    // for a local order.
    auto pick = pairs.begin();
    int best_deg = lcm(basis[pick->first].lead(), basis[pick->second].lead()).degree();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      const int d = lcm(basis[it->first].lead(), basis[it->second].lead()).degree();
      if (d < best_deg) {
        best_deg = d;
        pick = it;
      }
    }
    const auto [i, j] = *pick;
    pairs.erase(pick);
    LocalPoly h = mora_normal_form(spoly(basis[i], basis[j], order), basis, order);
    if (h.is_zero()) continue;
    make_monic(h);
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }

  StandardBasis out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead().divides(basis[i].lead())) continue;
      // Equal leading monomials: keep the earliest.
      redundant = basis[j].lead() != basis[i].lead() || j < i;
    }
    if (redundant) continue;
    out.generators.push_back(to_poly(basis[i], vars));
    out.staircase.push_back(basis[i].lead());
  }
  std::sort(out.staircase.begin(), out.staircase.end(), GradedOrder{});
  return out;
}

std::optional<std::vector<ExpVec>> standard_monomials(const std::vector<ExpVec>& staircase,
                                                      std::size_t nvars, std::size_t cap) {
  for (std::size_t v = 0; v < nvars; ++v) {
    const bool has_power = std::any_of(staircase.begin(), staircase.end(), [&](const ExpVec& e) {
      return e.is_zero() || e.pure_power_index() == v;
    });
    if (!has_power) return std::nullopt;
  }
  const auto in_ideal = [&](const ExpVec& m) {
    return std::any_of(staircase.begin(), staircase.end(),
                       [&](const ExpVec& g) { return g.divides(m); });
  };
  std::vector<ExpVec> out;
  std::set<ExpVec> seen;
  std::deque<ExpVec> queue;
  const ExpVec one(nvars);
  if (!in_ideal(one)) {
    queue.push_back(one);
    seen.insert(one);
  }
  while (!queue.empty()) {
    ExpVec m = std::move(queue.front());
    queue.pop_front();
    out.push_back(m);
    if (out.size() > cap)
      throw Error(ErrorKind::ResourceLimit,
                  "staircase complement exceeds the limit of " + std::to_string(cap) + " monomials");
    for (std::size_t v = 0; v < nvars; ++v) {
      ExpVec next = m + ExpVec::unit(nvars, v);
      if (seen.count(next) || in_ideal(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

MilnorData milnor_number(const Poly& f, const MilnorOptions& options) {
  if (!f.constant_term().is_zero())
    throw Error(ErrorKind::NotACriticalGerm, "f(0) = " + f.constant_term().to_string() +
                                                 " is nonzero; the germ must vanish at the origin");
  const std::size_t n = f.num_vars();
  for (std::size_t v = 0; v < n; ++v)
    if (!f.coefficient(ExpVec::unit(n, v)).is_zero()) return MilnorData{0, {}};

  const StandardBasis sb = standard_basis(partials(f), LocalOrder(options.order, n));
  auto monomials = standard_monomials(sb.staircase, n, options.max_staircase);
  if (!monomials) return MilnorData{std::nullopt, {}};
  MilnorData data;
  data.mu = monomials->size();
  data.basis = std::move(*monomials);
  return data;
}

}  // namespace spectre
