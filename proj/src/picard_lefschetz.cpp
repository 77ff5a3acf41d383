#include "spectre/picard_lefschetz.hpp"

#include <numeric>
#include <sstream>

#include "spectre/errors.hpp"

namespace spectre {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

BigInt IntMatrix::determinant() const {
  // Fraction-free Bareiss elimination.
  if (n_ == 0) return 1;
  std::vector<BigInt> m = a_;
  const auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n_ + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntPoly IntMatrix::characteristic_polynomial() const {
  // Faddeev-LeVerrier over the rationals: M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = n_;
  std::vector<Rat> c(n + 1);
  c[n] = Rat(1);
  std::vector<Rat> mk(n * n, Rat(0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rat> next(n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t l = 0; l < n; ++l) s += Rat((*this)(i, l)) * mk[l * n + j];
        next[i * n + j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    Rat trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += Rat((*this)(i, l)) * next[l * n + i];
    c[n - k] = -trace / Rat(static_cast<long>(k));
    mk = std::move(next);
  }
  std::vector<BigInt> coeffs;
  for (const auto& v : c) {
    if (!v.is_integer()) throw Error(ErrorKind::InvalidArgument, "non-integral characteristic polynomial");
    coeffs.push_back(v.num());
  }
  return IntPoly(std::move(coeffs));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t l = 0; l < a.n_; ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += a(i, l) * b(l, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& v : a_) {
    cells.push_back(v.get_str());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      const std::string& c = cells[i * n_ + j];
      os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

IntMatrix power(const IntMatrix& m, std::uint64_t e) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

VanishingBasis ak_chain(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "A_k chain needs k >= 1");
  VanishingBasis b{IntMatrix(k), {}};
  for (std::size_t i = 0; i + 1 < k; ++i) {
    b.intersection(i, i + 1) = 1;
    b.intersection(i + 1, i) = -1;
  }
  b.path_order.resize(k);
  std::iota(b.path_order.begin(), b.path_order.end(), 0);
  return b;
}

IntMatrix local_monodromy(const VanishingBasis& b, std::size_t i) {
  const std::size_t n = b.rank();
  if (i >= n) throw Error(ErrorKind::InvalidArgument, "vanishing cycle index out of range");
  // Column j is T(delta_j) = delta_j - <delta_j, delta_i> delta_i, so only
  // row i changes: T(i, j) = delta_ij + <delta_i, delta_j>.
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) t(i, j) -= b.intersection(j, i);
  return t;
}

IntMatrix total_monodromy(const VanishingBasis& b) {
  const std::size_t n = b.rank();
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t i : b.path_order) t = local_monodromy(b, i) * t;
  return t;
}

std::optional<std::uint64_t> matrix_order(const IntMatrix& m, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "order cap must be >= 1");
  const IntMatrix id = IntMatrix::identity(m.size());
  IntMatrix p = m;
  for (std::uint64_t q = 1; q <= cap; ++q) {
    if (p == id) return q;
    p = p * m;
  }
  return std::nullopt;
}

std::optional<EigenvalueSet> matrix_eigenvalues(const IntMatrix& m) {
  return eigenvalues_of(m.characteristic_polynomial());
}

}  // namespace spectre
