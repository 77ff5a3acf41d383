#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "spectre/arnold_bounds.hpp"
#include "spectre/errors.hpp"
#include "spectre/quasihomogeneous.hpp"
#include "spectre/singularities.hpp"

using namespace spectre;

namespace {

Rat q(long p, long r) { return Rat(BigInt(p), BigInt(r)); }

BoundProblem cubic_surface() { return BoundProblem(3, 3, IntervalKind::Open); }

}  // namespace

TEST_CASE("Arnold numbers") {
  const std::vector<std::uint64_t> expected{4, 16, 31, 68, 104};
  for (int d = 3; d <= 7; ++d) CHECK(arnold_number(3, d) == expected[static_cast<std::size_t>(d - 3)]);
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 8; ++d) CHECK(arnold_number(n, d) == oracle::arnold_brute(n, d));
  CHECK(arnold_number(2, 5) == 10);
}

TEST_CASE("closed form in three variables") {
  for (int d = 2; d <= 40; ++d) {
    const Rat c = arnold_closed_form_3(d);
    REQUIRE(c.is_integer());
    CHECK(c == Rat(static_cast<long>(arnold_number(3, d))));
  }
}

TEST_CASE("Kalker formula") {
  for (int n = 2; n <= 10; ++n)
    CHECK(arnold_number(n, 3) == oracle::binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(n / 2)));
}

TEST_CASE("Arnold number is the smallest window count around the centre") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 8; ++d) {
      const SpectralSet f = fermat_spectrum(n, d);
      std::uint64_t best = UINT64_MAX;
      const Rat centre = Rat(n) / Rat(2);
      for (const Rat& a : breakpoints({f}))
        if (a < centre && centre < a + Rat(1)) best = std::min(best, interval_count(f, a, IntervalKind::Open));
      CHECK(best == arnold_number(n, d));
    }
}

TEST_CASE("Fermat spectra") {
  CHECK(fermat_spectrum(3, 3) == bp_spectrum({3, 3, 3}));
  CHECK(fermat_spectrum(2, 4).mu() == 9);
  CHECK(fermat_spectrum(2, 5).multiplicity(Rat(1)) == 4);
  CHECK(fermat_spectrum(3, 1).empty());
  CHECK(fermat_spectrum(3, 1).num_vars() == 3);
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints({SpectralSet::from_values({q(3, 2)}, 3)}) == std::vector<Rat>{q(1, 2), Rat(1), q(3, 2)});
  CHECK(breakpoints({}).empty());
  const auto bp = breakpoints({fermat_spectrum(3, 3)});
  for (const Rat& r : {Rat(0), q(1, 3), q(2, 3), Rat(1), q(4, 3), q(5, 3), Rat(2)})
    CHECK(std::find(bp.begin(), bp.end(), r) != bp.end());
  CHECK(std::is_sorted(bp.begin(), bp.end()));
}

TEST_CASE("node bounds") {
  const SpectralSet a1 = builtin_singularity("A1", 3);
  CHECK(max_copies(a1, cubic_surface()) == 4u);
  CHECK(max_copies(a1, BoundProblem(3, 4)) == 16u);
  CHECK(max_copies(a1, BoundProblem(3, 5)) == 31u);
  for (int d = 3; d <= 8; ++d) CHECK(max_copies(a1, BoundProblem(3, d)) == arnold_number(3, d));
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 8; ++d)
      CHECK(max_copies(builtin_singularity("A1", n), BoundProblem(n, d)) == arnold_number(n, d));
}

TEST_CASE("half-open intervals never give smaller bounds") {
  for (int d = 3; d <= 7; ++d)
    for (const char* g : {"A1", "A2", "A3", "D4", "E6"}) {
      const SpectralSet s = builtin_singularity(g, 3);
      CHECK(*max_copies(s, BoundProblem(3, d, IntervalKind::HalfOpenRight)) >=
            *max_copies(s, BoundProblem(3, d, IntervalKind::Open)));
    }
}

TEST_CASE("max copies grows with the degree") {
  for (const char* g : {"A1", "A2", "A4", "D4", "E6", "E8"}) {
    const SpectralSet s = builtin_singularity(g, 3);
    std::uint64_t previous = 0;
    for (int d = 2; d <= 8; ++d) {
      const std::uint64_t c = max_copies(s, BoundProblem(3, d)).value();
      CHECK(c >= previous);
      previous = c;
    }
  }
}

TEST_CASE("cubic surface configurations") {
  const SpectralSet a2 = builtin_singularity("A2", 3);
  CHECK(a2.values() == std::vector<Rat>{q(4, 3), q(5, 3)});
  CHECK(max_copies(a2, cubic_surface()) == 3u);

  const BoundReport a6 = check_configuration({builtin_singularity("A6", 3)}, cubic_surface());
  CHECK_FALSE(a6.feasible);
  CHECK(a6.worst_alpha == q(1, 3));
  CHECK(a6.config_count == 2);
  CHECK(a6.fermat_count == 1);

  CHECK(check_configuration({builtin_singularity("A5", 3), builtin_singularity("A1", 3)}, cubic_surface()).feasible);
  const SpectralSet a1 = builtin_singularity("A1", 3);
  CHECK(check_configuration(std::vector<SpectralSet>(4, a1), cubic_surface()).feasible);
  const BoundReport five = check_configuration(std::vector<SpectralSet>(5, a1), cubic_surface());
  CHECK_FALSE(five.feasible);
  CHECK(five.config_count == 5);
  CHECK(five.fermat_count == 4);
}

TEST_CASE("report tables are symmetric") {
  const BoundReport r = check_configuration({builtin_singularity("A3", 3)}, BoundProblem(3, 4));
  for (const BoundRow& row : r.table) {
    const Rat mirror = Rat(2) - row.alpha;
    const auto it = std::find_if(r.table.begin(), r.table.end(), [&](const BoundRow& x) { return x.alpha == mirror; });
    REQUIRE(it != r.table.end());
    CHECK(it->fermat == row.fermat);
    CHECK(it->config == row.config);
  }
}

TEST_CASE("report JSON round trip") {
  const BoundReport r = check_configuration({builtin_singularity("A6", 3)}, cubic_surface());
  CHECK(bound_report_from_json(to_json(r)) == r);
}

TEST_CASE("problem validation") {
  CHECK_THROWS(BoundProblem(1, 3));
  CHECK_THROWS(BoundProblem(3, 0));
  CHECK_THROWS(max_copies(builtin_singularity("A1", 2), cubic_surface()));
}

TEST_CASE("classical bounds") {
  CHECK(plane_curve_bound(4) == 6);
  CHECK(plane_curve_bound(1) == 0);
  CHECK(basset_bound(4) == 15);
  CHECK(miyaoka_yau_bound(4) == Rat(16));
  CHECK(miyaoka_yau_bound(14) == Rat(4) * Rat(14) * Rat(169) / Rat(9));
  CHECK(miyaoka_yau_bound(14) == q(9464, 9));
  // Basset by floating point, checked where the radicand is far from a square.
  for (int d = 3; d <= 30; ++d) {
    const double radicand = static_cast<double>(d) * (d - 1) * (3 * d - 14) + 25;
    if (radicand < 0) continue;
    const double a = static_cast<double>(d) * (d - 1) * (d - 1) - 5;
    CHECK(basset_bound(d) == static_cast<std::uint64_t>(std::floor((a - std::sqrt(radicand)) / 2 + 1e-9)));
  }
  const ClassicalBounds small = classical_bounds(2);
  CHECK_FALSE(small.basset.has_value());
  CHECK_FALSE(small.miyaoka_yau.has_value());
  CHECK(small.plane_curve == 1u);
  CHECK(small.domain_errors.size() == 2);
  try {
    miyaoka_yau_bound(3);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}
