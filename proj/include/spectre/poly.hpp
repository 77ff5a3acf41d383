#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spectre/rational.hpp"

namespace spectre {

/// Exponent vector of a monomial, one non-negative entry per variable.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t nvars) : e_(nvars, 0) {}
  ExpVec(std::initializer_list<int> e);
  explicit ExpVec(std::vector<int> e);

  static ExpVec unit(std::size_t nvars, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  const std::vector<int>& values() const noexcept { return e_; }

  int degree() const;
  bool is_zero() const { return degree() == 0; }
  /// True iff this monomial divides `other`.
  bool divides(const ExpVec& other) const;
  /// Index i if this is a pure power x_i^k with k >= 1.
  std::optional<std::size_t> pure_power_index() const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  /// Requires b | a.
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  friend ExpVec lcm(const ExpVec& a, const ExpVec& b);

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<int> e_;
};

/// Total order used for printing: ascending total degree, then
/// lexicographically descending (x^2 before x*y before y^2).
struct GradedOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Renders a monomial over the given variable names, "1" for the unit.
std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& vars);

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<ExpVec, Rat>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables);
  Poly(std::vector<std::string> variables, const TermMap& terms);

  static Poly constant(std::vector<std::string> variables, const Rat& c);
  static Poly monomial(std::vector<std::string> variables, const ExpVec& e, const Rat& c = 1);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  Rat coefficient(const ExpVec& e) const;
  Rat constant_term() const { return coefficient(ExpVec(num_vars())); }
  /// Lowest total degree of a term; requires a nonzero polynomial.
  int order() const;
  int degree() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const ExpVec& e, const Rat& c);

  Poly derivative(std::size_t var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);

  /// Canonical text form, parseable by parse_polynomial.
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Poly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Parses the polynomial input language. Without an explicit variable
/// list the variables are taken in order of first appearance.
Poly parse_polynomial(std::string_view text,
                      const std::optional<std::vector<std::string>>& variables = std::nullopt);

/// [df/dx_0, ..., df/dx_n] in variable order.
std::vector<Poly> partials(const Poly& f);

std::set<ExpVec> support(const Poly& f);

/// Same polynomial with variables permuted: new variable j is old variable perm[j].
Poly permute_variables(const Poly& f, const std::vector<std::size_t>& perm);

}  // namespace spectre
