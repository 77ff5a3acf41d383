#include "spectre/rational.hpp"

#include <ostream>

#include "spectre/errors.hpp"

namespace spectre {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NotACriticalGerm: return "NotACriticalGerm";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorKind::UnderdeterminedWeights: return "UnderdeterminedWeights";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::NonIntegralMu: return "NonIntegralMu";
    case ErrorKind::InexactExpansion: return "InexactExpansion";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::BasisIncompatible: return "BasisIncompatible";
    case ErrorKind::UnknownSingularity: return "UnknownSingularity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  };
  const auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!digits(num_text) || !digits(den_text)) throw bad();
  BigInt num(std::string(num_text), 10);
  const BigInt den(std::string(den_text), 10);
  if (den == 0) throw bad();
  if (negative) num = -num;
  return Rat(num, den);
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt isqrt(const BigInt& a) {
  if (a < 0) throw Error(ErrorKind::DomainError, "square root of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

}  // namespace spectre

std::size_t std::hash<spectre::Rat>::operator()(const spectre::Rat& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() + 1);
}
