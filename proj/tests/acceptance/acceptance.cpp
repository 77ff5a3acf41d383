// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "spectre/arnold_bounds.hpp"
#include "spectre/local_algebra.hpp"
#include "spectre/newton.hpp"
#include "spectre/picard_lefschetz.hpp"
#include "spectre/quasihomogeneous.hpp"
#include "spectre/singularities.hpp"
#include "spectre/spectral_set.hpp"

using namespace spectre;

namespace {

Rat q(long p, long r) { return Rat(BigInt(p), BigInt(r)); }

// Collects failed sub-checks so each criterion prints a single line.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<Multiplicity> multiplicities(const SpectralSet& s) {
  std::vector<Multiplicity> out;
  for (const auto& [alpha, m] : s.entries()) out.push_back(m);
  return out;
}

void arnold_table(Checker& c) {
  const std::vector<std::uint64_t> expected{4, 16, 31, 68, 104};
  for (int d = 3; d <= 7; ++d) {
    const auto got = arnold_number(3, d);
    c.expect(got == expected[static_cast<std::size_t>(d - 3)],
             "A_3(" + std::to_string(d) + ") = " + std::to_string(got));
  }
  for (int d = 1; d <= 40; ++d) {
    const Rat cf = arnold_closed_form_3(d);
    if (d >= 2) c.expect(cf == Rat(static_cast<long>(arnold_number(3, d))), "closed form differs at d = " + std::to_string(d));
  }
}

void kalker(Checker& c) {
  for (int n = 2; n <= 10; ++n) {
    const auto expected = oracle::binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(n / 2));
    c.expect(arnold_number(n, 3) == expected, "A_" + std::to_string(n) + "(3)");
  }
}

void node_bounds(Checker& c) {
  const SpectralSet a1 = builtin_singularity("A1", 3);
  for (int d = 3; d <= 8; ++d) {
    const auto m = max_copies(a1, BoundProblem(3, d, IntervalKind::Open));
    c.expect(m && *m == arnold_number(3, d), "max_copies(A1) at d = " + std::to_string(d));
  }
}

void printed_spectra(Checker& c) {
  c.expect(bp_spectrum({2, 3}).values() == std::vector<Rat>{q(5, 6), q(7, 6)}, "x^2+y^3");
  c.expect(multiplicities(bp_spectrum({4, 4})) == std::vector<Multiplicity>{1, 2, 3, 2, 1}, "x^4+y^4");
  c.expect(multiplicities(bp_spectrum({3, 3, 3})) == std::vector<Multiplicity>{1, 3, 3, 1}, "(3,3,3)");
  c.expect(multiplicities(bp_spectrum({4, 4, 4})) == std::vector<Multiplicity>{1, 3, 6, 7, 6, 3, 1}, "(4,4,4)");
  const auto m5 = multiplicities(bp_spectrum({5, 5, 5}));
  c.expect(m5.size() >= 7 && std::vector<Multiplicity>(m5.begin(), m5.begin() + 7) ==
                                 std::vector<Multiplicity>{1, 3, 6, 10, 12, 12, 10},
           "(5,5,5) prefix");
  c.expect(qh_spectrum(detect_weights(parse_polynomial("x^2+y^3"))) == bp_spectrum({2, 3}), "qh route for x^2+y^3");
}

void milnor_numbers(Checker& c) {
  c.expect(milnor_number(parse_polynomial("x^3+y^4")).mu == 6u, "mu(x^3+y^4)");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_exponents(rng, 3, 6);
    std::size_t expected = 1;
    for (int v : a) expected *= static_cast<std::size_t>(v - 1);
    const auto mu = milnor_number(parse_polynomial(oracle::bp_polynomial(a))).mu;
    c.expect(mu == expected, "mu(" + oracle::bp_polynomial(a) + ")");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 5.0, "random suite took " + std::to_string(seconds) + " s");
  const auto kouch = oracle::kouchnirenko_2d({{2, 2}, {5, 0}, {0, 5}});
  const auto mu = milnor_number(parse_polynomial("x^2*y^2+x^5+y^5")).mu;
  c.expect(kouch == 11 && mu == static_cast<std::size_t>(kouch), "mu(x^2y^2+x^5+y^5)");
}

void picard_lefschetz(Checker& c) {
  const VanishingBasis b = ak_chain(2);
  c.expect(local_monodromy(b, 0) == IntMatrix{{1, 1}, {0, 1}}, "T+");
  c.expect(local_monodromy(b, 1) == IntMatrix{{1, 0}, {-1, 1}}, "T-");
  const IntMatrix t = total_monodromy(b);
  c.expect(t == IntMatrix{{1, 1}, {-1, 0}}, "T");
  c.expect(matrix_order(t, 1000) == 6u, "order of T");
  c.expect(oracle::naive_power(t, 6) == IntMatrix::identity(2), "T^6");
  const auto e = matrix_eigenvalues(t);
  c.expect(e && *e == eigenvalues(bp_spectrum({2, 3})), "eigenvalues of T");
  c.expect(e && *e == EigenvalueSet(std::map<Rat, Multiplicity>{{q(1, 6), 1}, {q(5, 6), 1}}), "fractions 1/6, 5/6");
}

void pham(Checker& c) {
  std::mt19937 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_exponents(rng, 3, 6);
    const EigenvalueSet e = eigenvalues(bp_spectrum(a));
    c.expect(e == EigenvalueSet(oracle::pham_fractions(a)), "fractions of " + oracle::bp_polynomial(a));
    c.expect(monodromy_order(e) == oracle::lcm_of(a), "order of " + oracle::bp_polynomial(a) + " is " +
                                                           std::to_string(monodromy_order(e)) + ", lcm(a_i) is " +
                                                           std::to_string(oracle::lcm_of(a)));
  }
}

void schlafli(Checker& c) {
  const BoundProblem cubic(3, 3, IntervalKind::Open);
  const BoundReport a6 = check_configuration({builtin_singularity("A6", 3)}, cubic);
  c.expect(!a6.feasible, "A6 rejected");
  c.expect(a6.worst_alpha == q(1, 3) && a6.config_count == 2 && a6.fermat_count == 1, "A6 witness");
  c.expect(check_configuration({builtin_singularity("A5", 3), builtin_singularity("A1", 3)}, cubic).feasible,
           "A5 + A1 accepted");
  const SpectralSet a1 = builtin_singularity("A1", 3);
  c.expect(check_configuration(std::vector<SpectralSet>(4, a1), cubic).feasible, "4 A1 accepted");
  c.expect(!check_configuration(std::vector<SpectralSet>(5, a1), cubic).feasible, "5 A1 rejected");
  c.expect(max_copies(builtin_singularity("A2", 3), cubic) == 3u, "A2 bound");
}

void newton(Checker& c) {
  const Poly f = parse_polynomial("x^2*y^2+x^5+y^5");
  const NewtonPolyhedron p = newton_polyhedron(support(f));
  c.expect(lct(p) == q(1, 2), "lct");
  const SpectralSet s = nondegenerate_spectrum(f);
  c.expect(s.mu() == 11, "11 entries");
  c.expect(check_symmetry(s) && check_range(s), "symmetry and range");
  c.expect(s.restricted(Rat(0), Rat(1)) == spectrum_unit_part(p), "unit part");
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 50) {
    const auto a = oracle::random_exponents(rng, 3, 5);
    const std::string text = oracle::random_qh_polynomial(rng, a);
    const Poly g = parse_polynomial(text);
    if (!milnor_number(g).isolated()) continue;
    c.expect(nondegenerate_spectrum(g) == qh_spectrum(detect_weights(g)), "Newton vs weights for " + text);
    ++checked;
  }
}

void properties(Checker& c) {
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    const SpectralSet a = bp_spectrum(oracle::random_exponents(rng, 2, 5));
    const SpectralSet b = bp_spectrum(oracle::random_exponents(rng, 2, 5));
    const SpectralSet d = bp_spectrum(oracle::random_exponents(rng, 2, 5));
    c.expect(thom_sebastiani(a, b) == thom_sebastiani(b, a), "TS commutative");
    c.expect(thom_sebastiani(thom_sebastiani(a, b), d) == thom_sebastiani(a, thom_sebastiani(b, d)), "TS associative");
    const SpectralSet ab = thom_sebastiani(a, b);
    c.expect(check_symmetry(ab) && check_range(ab), "TS preserves symmetry and range");
    c.expect(ab.values() == oracle::pairwise_sums(a.values(), b.values()), "TS pairwise sums");
    for (int m = 2; m <= 5; ++m) c.expect(suspension(a, m) == thom_sebastiani(a, monomial_spectrum(m)), "suspension");
  }
  const VarianceCheck v = variance_check(bp_spectrum({2, 3}));
  c.expect(v.holds && v.lhs == q(1, 36) && v.rhs == q(1, 36), "variance equality on {5/6, 7/6}");
  for (int x = 2; x <= 5; ++x)
    for (int y = 2; y <= 5; ++y) {
      c.expect(variance_check(bp_spectrum({x})).holds, "variance one variable");
      c.expect(variance_check(bp_spectrum({x, y})).holds, "variance two variables");
      for (int z = 2; z <= 5; ++z) c.expect(variance_check(bp_spectrum({x, y, z})).holds, "variance three variables");
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"1 Arnold numbers A_3(d) and closed form", arnold_table},
      {"2 Kalker formula A_n(3)", kalker},
      {"3 node bounds equal Arnold numbers", node_bounds},
      {"4 printed spectra", printed_spectra},
      {"5 Milnor numbers", milnor_numbers},
      {"6 Picard-Lefschetz for A_2", picard_lefschetz},
      {"7 Pham eigenvalues", pham},
      {"8 cubic surface configurations", schlafli},
      {"9 Newton route", newton},
      {"10 spectral properties", properties},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << "  criterion " << name << "  (" << static_cast<long>(ms)
         << " ms)";
    if (!c.failures.empty()) {
      line << "  first failure: " << c.failures.front() << " [" << c.failures.size() << " total]";
      ++failed;
    }
    std::cout << line.str() << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
