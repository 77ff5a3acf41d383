#include "spectre/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "spectre/errors.hpp"

namespace spectre {

ExpVec::ExpVec(std::initializer_list<int> e) : ExpVec(std::vector<int>(e)) {}

ExpVec::ExpVec(std::vector<int> e) : e_(std::move(e)) {
  for (int v : e_)
    if (v < 0) throw Error(ErrorKind::NegativeExponent, "exponent vectors are non-negative");
}

ExpVec ExpVec::unit(std::size_t nvars, std::size_t i) {
  ExpVec e(nvars);
  e.e_.at(i) = 1;
  return e;
}

void ExpVec::set(std::size_t i, int value) {
  if (value < 0) throw Error(ErrorKind::NegativeExponent, "exponent vectors are non-negative");
  e_.at(i) = value;
}

int ExpVec::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool ExpVec::divides(const ExpVec& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::optional<std::size_t> ExpVec::pure_power_index() const {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (idx) return std::nullopt;
    idx = i;
  }
  return idx;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] -= b.e_[i];
    if (r.e_[i] < 0) throw Error(ErrorKind::InvalidArgument, "monomial quotient is not exact");
  }
  return r;
}

ExpVec lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool GradedOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Poly::Poly(std::vector<std::string> variables, const TermMap& terms)
    : vars_(std::move(variables)) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Poly Poly::constant(std::vector<std::string> variables, const Rat& c) {
  Poly p(std::move(variables));
  p.add_term(ExpVec(p.num_vars()), c);
  return p;
}

Poly Poly::monomial(std::vector<std::string> variables, const ExpVec& e, const Rat& c) {
  Poly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

Rat Poly::coefficient(const ExpVec& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::order() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "order of the zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
  return d;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
  if (e.size() != num_vars())
    throw Error(ErrorKind::InvalidArgument, "exponent vector length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= num_vars()) throw Error(ErrorKind::InvalidArgument, "derivative index out of range");
  Poly d(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec de = e;
    de.set(var, e[var] - 1);
    d.add_term(de, c * Rat(e[var]));
  }
  return d;
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials live over different variable lists");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly r(p.vars_);
  for (const auto& [e, coef] : p.terms_) r.add_term(e, c * coef);
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<ExpVec, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return GradedOrder{}(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    const Rat mag = negative ? -c : c;
    if (e.is_zero()) {
      out += mag.to_string();
    } else if (mag == Rat(1)) {
      out += monomial_to_string(e, vars_);
    } else {
      out += mag.to_string() + "*" + monomial_to_string(e, vars_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& vars)
      : text_(text), fixed_(vars.has_value()) {
    if (vars) {
      vars_ = *vars;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_ident(vars_[i]))
          throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + vars_[i] + "'");
        if (std::find(vars_.begin(), vars_.begin() + static_cast<long>(i), vars_[i]) !=
            vars_.begin() + static_cast<long>(i))
          throw Error(ErrorKind::InvalidArgument, "duplicate variable name '" + vars_[i] + "'");
      }
    }
  }

  Poly parse() {
    std::vector<std::pair<std::vector<std::size_t>, Rat>> raw;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    raw.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("'+', '-', '*' or end of input");
      ++pos_;
      raw.push_back(term(c == '-'));
    }
    Poly p(vars_);
    for (auto& [factors, coef] : raw) {
      ExpVec e(vars_.size());
      for (std::size_t v = 0; v < factors.size(); ++v) e.set(v, static_cast<int>(factors[v]));
      p.add_term(e, coef);
    }
    return p;
  }

 private:
  static bool valid_ident(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected, ErrorKind kind = ErrorKind::Syntax) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(kind, pos_, expected,
                      "syntax error at position " + std::to_string(pos_) + ": expected " +
                          expected + ", found " + found);
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  std::pair<std::vector<std::size_t>, Rat> term(bool negative) {
    skip_ws();
    std::vector<std::size_t> exps(vars_.size(), 0);
    Rat coef(1);
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num(digits(), 10);
      skip_ws();
      BigInt den(1);
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.empty()) fail("positive integer");
        den = BigInt(d, 10);
        if (den == 0) {
          pos_ = at;
          fail("positive integer");
        }
      }
      coef = Rat(num, den);
    } else {
      need_factor = true;
    }
    for (;;) {
      if (need_factor) {
        factor(exps);
        need_factor = false;
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      need_factor = true;
    }
    if (negative) coef = -coef;
    exps.resize(vars_.size(), 0);
    return {exps, coef};
  }

  void factor(std::vector<std::size_t>& exps) {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("variable name or coefficient");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    std::size_t idx = std::find(vars_.begin(), vars_.end(), name) - vars_.begin();
    if (idx == vars_.size()) {
      if (fixed_)
        throw SyntaxError(ErrorKind::UnknownVariable, start, "one of the declared variables",
                          "unknown variable '" + name + "' at position " + std::to_string(start));
      vars_.push_back(name);
    }
    exps.resize(vars_.size(), 0);
    std::size_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') fail("non-negative exponent", ErrorKind::NegativeExponent);
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.empty()) fail("positive integer");
      if (d.size() > 6) {
        pos_ = at;
        fail("exponent below 1000000");
      }
      power = std::stoul(d);
      if (power == 0) {
        pos_ = at;
        fail("positive integer");
      }
    }
    exps[idx] += power;
    if (exps[idx] > 1000000) fail("total exponent below 1000000");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_;
  std::vector<std::string> vars_;
};

}  // namespace

Poly parse_polynomial(std::string_view text,
                      const std::optional<std::vector<std::string>>& variables) {
  return Parser(text, variables).parse();
}

std::vector<Poly> partials(const Poly& f) {
  std::vector<Poly> out;
  out.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) out.push_back(f.derivative(i));
  return out;
}

std::set<ExpVec> support(const Poly& f) {
  std::set<ExpVec> s;
  for (const auto& [e, c] : f.terms()) s.insert(e);
  return s;
}

Poly permute_variables(const Poly& f, const std::vector<std::size_t>& perm) {
  if (perm.size() != f.num_vars())
    throw Error(ErrorKind::InvalidArgument, "permutation length mismatch");
  std::vector<std::string> vars(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) vars[j] = f.variables().at(perm[j]);
  Poly out(vars);
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) ne.set(j, e[perm[j]]);
    out.add_term(ne, c);
  }
  return out;
}

}  // namespace spectre
