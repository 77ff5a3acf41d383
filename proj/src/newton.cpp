#include "spectre/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace spectre {

namespace {

// Row-reduces `rows` in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = Rat(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rat factor = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Primitive normal of the hyperplane through n affinely independent points,
// scaled to have positive entries; std::nullopt if the points are dependent
// or the normal is not strictly positive.
std::optional<Facet> facet_through(const std::vector<const ExpVec*>& pts, std::size_t n) {
  std::vector<std::vector<Rat>> rows;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    std::vector<Rat> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat((*pts[j])[i] - (*pts[0])[i]);
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, n);
  if (pivots.size() + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<Rat> normal(n, Rat(0));
  normal[free_col] = Rat(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) normal[pivots[r]] = -rows[r][free_col];

  BigInt den(1);
  for (const auto& v : normal) den = lcm(den, v.den());
  std::vector<BigInt> ints;
  BigInt g(0);
  for (const auto& v : normal) {
    ints.push_back((v * Rat(den)).num());
    g = gcd(g, ints.back());
  }
  const int sign = sgn(ints[0]);
  Facet f;
  for (auto& v : ints) {
    v /= g;
    if (sign < 0) v = -v;
    if (v <= 0) return std::nullopt;
    f.normal.push_back(v.get_si());
  }
  for (std::size_t i = 0; i < n; ++i) f.level += f.normal[i] * (*pts[0])[i];
  return f;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const ExpVec& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

void for_each_subset(std::size_t m, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::set<ExpVec>& supp) {
  if (supp.empty()) throw Error(ErrorKind::InvalidArgument, "empty support");
  const std::size_t n = supp.begin()->size();
  for (const auto& v : supp) {
    if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "inconsistent exponent lengths");
    if (v.is_zero())
      throw Error(ErrorKind::NotACriticalGerm, "the support contains the constant monomial");
  }

  // A point dominated by another support point never lies on a compact face.
  std::vector<ExpVec> minimal;
  for (const auto& v : supp) {
    const bool dominated = std::any_of(supp.begin(), supp.end(), [&](const ExpVec& u) {
      return u != v && u.divides(v);
    });
    if (!dominated) minimal.push_back(v);
  }

  std::set<Facet> facets;
  if (n > 0) {
    for_each_subset(minimal.size(), n, [&](const std::vector<std::size_t>& idx) {
      std::vector<const ExpVec*> pts;
      for (std::size_t i : idx) pts.push_back(&minimal[i]);
      const auto f = facet_through(pts, n);
      if (!f) return;
      const bool supporting = std::all_of(minimal.begin(), minimal.end(), [&](const ExpVec& v) {
        return dot(f->normal, v) >= f->level;
      });
      if (supporting) facets.insert(*f);
    });
  }

  bool convenient = true;
  for (std::size_t i = 0; i < n; ++i) {
    convenient = convenient && std::any_of(supp.begin(), supp.end(), [&](const ExpVec& v) {
                   return v.pure_power_index() == i;
                 });
  }

  // Vertices: support points where the active constraints (facets through
  // the point and coordinate hyperplanes containing it) have full rank.
  std::vector<ExpVec> vertices;
  for (const auto& v : minimal) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : facets) {
      if (dot(f.normal, v) != f.level) continue;
      std::vector<Rat> row;
      for (auto c : f.normal) row.emplace_back(static_cast<long>(c));
      rows.push_back(std::move(row));
    }
    if (rows.empty()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0) continue;
      std::vector<Rat> row(n, Rat(0));
      row[i] = Rat(1);
      rows.push_back(std::move(row));
    }
    if (row_reduce(rows, n).size() == n) vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end(), GradedOrder{});

  return NewtonPolyhedron(n, std::move(vertices), std::vector<Facet>(facets.begin(), facets.end()),
                          convenient);
}

Rat newton_weight(const NewtonPolyhedron& p, const std::vector<Rat>& v) {
  if (!p.convenient())
    throw Error(ErrorKind::NotConvenient, "the Newton diagram does not meet every coordinate axis");
  if (v.size() != p.num_vars())
    throw Error(ErrorKind::InvalidArgument, "weight argument has the wrong length");
  for (const auto& x : v)
    if (x.sign() <= 0)
      throw Error(ErrorKind::InvalidArgument, "Newton weights need strictly positive arguments");
  std::optional<Rat> best;
  for (const auto& f : p.facets()) {
    Rat s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(f.normal[i])) * v[i];
    s /= Rat(static_cast<long>(f.level));
    if (!best || s < *best) best = s;
  }
  if (!best) throw Error(ErrorKind::NotConvenient, "the Newton polyhedron has no compact facet");
  return *best;
}

Rat form_weight(const NewtonPolyhedron& p, const ExpVec& k) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < k.size(); ++i) v.emplace_back(k[i] + 1);
  return newton_weight(p, v);
}

Rat lct(const NewtonPolyhedron& p) { return newton_weight(p, std::vector<Rat>(p.num_vars(), Rat(1))); }

SpectralSet spectrum_unit_part(const NewtonPolyhedron& p) {
  if (!p.convenient())
    throw Error(ErrorKind::NotConvenient, "the Newton diagram does not meet every coordinate axis");
  const std::size_t n = p.num_vars();
  // weight(v) <= 1 needs normal . v <= level for some facet, which bounds v_i.
  std::vector<int> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : p.facets())
      bound[i] = std::max<int>(bound[i], static_cast<int>(f.level / f.normal[i]));
  // In one variable the form df itself has weight 1 and vanishes in the
  // Milnor module; from two variables on, df ^ (n-1)-forms weigh more than 1.
  const Rat cutoff = n == 1 ? Rat(1) : Rat(2);
  std::vector<Rat> values;
  std::vector<int> k(n, 0);
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 1; }))
    return SpectralSet(static_cast<int>(n));
  for (;;) {
    const Rat w = form_weight(p, ExpVec(k));
    if (w <= Rat(1) && w < cutoff) values.push_back(w);
    std::size_t i = 0;
    while (i < n && ++k[i] > bound[i] - 1) k[i++] = 0;
    if (i == n) break;
  }
  return SpectralSet::from_values(values, static_cast<int>(n));
}

SpectralSet nondegenerate_spectrum(const Poly& f, const MilnorOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::NotIsolated, "the zero polynomial is not isolated");
  if (!f.constant_term().is_zero())
    throw Error(ErrorKind::NotACriticalGerm, "f(0) is nonzero; the germ must vanish at the origin");
  const NewtonPolyhedron p = newton_polyhedron(support(f));
  if (!p.convenient())
    throw Error(ErrorKind::NotConvenient,
                f.to_string() + " is not convenient: its Newton diagram misses a coordinate axis");
  const MilnorData md = milnor_number(f, options);
  if (!md.isolated())
    throw Error(ErrorKind::NotIsolated, f.to_string() + " has a non-isolated singularity");

  std::vector<Rat> weights;
  for (const auto& m : md.basis) weights.push_back(form_weight(p, m));
  const int n = static_cast<int>(f.num_vars());
  SpectralSet s = SpectralSet::from_values(weights, n);

  std::vector<std::string> problems;
  if (s.mu() != *md.mu) problems.emplace_back("cardinality differs from mu");
  if (!check_range(s)) problems.emplace_back("a Newton weight lies outside (0, n)");
  if (!check_symmetry(s)) problems.emplace_back("the weights are not symmetric about n/2");
  if (s.restricted(Rat(0), Rat(1)) != spectrum_unit_part(p))
    problems.emplace_back("the (0,1] part disagrees with the lattice count under the diagram");
  if (!problems.empty()) {
    std::string reason = "the Milnor basis is not compatible with the Newton filtration:";
    for (const auto& pr : problems) reason += " " + pr + ";";
    reason.pop_back();
    throw BasisIncompatible(std::move(s), reason);
  }
  return s;
}

}  // namespace spectre
