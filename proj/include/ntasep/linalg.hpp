#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ntasep/lattice.hpp"
#include "ntasep/scalars.hpp"

namespace ntasep {

// Sparse matrix over exact rationals, same labeling scheme as PolyMatrix.
class RatMatrix {
 public:
  RatMatrix(std::vector<Word> rows, std::vector<Word> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size()) {}

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return cols_.size(); }
  const std::vector<Word>& row_words() const { return rows_; }
  const std::vector<Word>& col_words() const { return cols_; }
  const std::map<int, Rat>& row(std::size_t r) const { return data_[r]; }

  Rat entry(std::size_t r, std::size_t c) const {
    auto it = data_[r].find(static_cast<int>(c));
    return it == data_[r].end() ? Rat(0) : it->second;
  }

  void add_entry(std::size_t r, std::size_t c, const Rat& v) {
    if (r >= rows_.size() || c >= cols_.size())
      throw std::out_of_range("matrix index out of range");
    auto it = data_[r].find(static_cast<int>(c));
    if (it == data_[r].end()) {
      if (v != 0) data_[r].emplace(static_cast<int>(c), v);
      return;
    }
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }

  void set_entry(std::size_t r, std::size_t c, const Rat& v) {
    if (v == 0)
      data_[r].erase(static_cast<int>(c));
    else
      data_[r][static_cast<int>(c)] = v;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_.size())
      throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Rat> out(rows_.size(), Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, x] : data_[r]) out[r] += x * v[static_cast<std::size_t>(c)];
    return out;
  }

 private:
  std::vector<Word> rows_, cols_;
  std::vector<std::map<int, Rat>> data_;
};

namespace detail {

// Clears denominators row by row; row scaling preserves the kernel.
inline std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m) {
  const std::size_t n = m.n_rows(), p = m.n_cols();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(p, Int(0)));
  for (std::size_t r = 0; r < n; ++r) {
    Int lcm(1);
    for (const auto& [c, v] : m.row(r)) {
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
      lcm = lcm / g * v.get_den();
    }
    for (const auto& [c, v] : m.row(r))
      a[r][static_cast<std::size_t>(c)] = v.get_num() * (lcm / v.get_den());
  }
  return a;
}

}  // namespace detail

// Exact one-dimensional null space of a Markov generator evaluated at fixed
// positive rates. Fraction-free (Bareiss) elimination on the denominator-
// cleared integer matrix, then rational back substitution. The result is
// normalized to sum 1 and verified against the input before returning.
inline std::vector<Rat> kernel_solve(const RatMatrix& m) {
  if (m.n_rows() != m.n_cols())
    throw std::invalid_argument("kernel_solve: matrix must be square");
  const std::size_t n = m.n_rows();
  auto a = detail::to_integer_rows(m);

  std::vector<int> pivot_col_of_row;     // echelon structure
  std::vector<bool> is_pivot_col(n, false);
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t pr = r;
    while (pr < n && a[pr][c] == 0) ++pr;
    if (pr == n) continue;  // free column
    std::swap(a[r], a[pr]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot_col[c] = true;
    ++r;
  }

  const std::size_t rank = r;
  if (rank != n - 1)
    throw std::runtime_error("kernel_solve: null space dimension != 1 (rank " +
                             std::to_string(rank) + " of " + std::to_string(n) + ")");

  std::vector<Rat> v(n, Rat(0));
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot_col[c]) v[c] = 1;
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[i]);
    Rat acc(0);
    for (std::size_t j = pc + 1; j < n; ++j)
      if (a[i][j] != 0) acc += Rat(a[i][j]) * v[j];
    v[pc] = -acc / Rat(a[i][pc]);
  }

  Rat total(0);
  for (const auto& x : v) total += x;
  if (total == 0) throw std::runtime_error("kernel_solve: kernel vector sums to zero");
  for (auto& x : v) x /= total;
  for (const auto& x : v)
    if (x <= 0)
      throw std::runtime_error("kernel_solve: kernel vector is not strictly positive");

  // exact residual check; a nonzero residual means the elimination or the
  // generator construction is broken
  auto res = m.apply(v);
  for (const auto& x : res)
    if (x != 0) throw std::runtime_error("kernel_solve: residual is nonzero");
  return v;
}

// Coefficients of det(lambda*I - M), ascending in lambda, computed by the
// division-free Berkowitz recursion (valid over any commutative ring, so the
// rational entries never force an inexact step).
inline std::vector<Rat> charpoly(const RatMatrix& m) {
  if (m.n_rows() != m.n_cols())
    throw std::invalid_argument("charpoly: matrix must be square");
  const std::size_t n = m.n_rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : m.row(r)) a[r][static_cast<std::size_t>(c)] = v;

  // p holds the char poly of the leading principal r x r block, highest
  // power first; p = [1] for the empty block.
  std::vector<Rat> p{Rat(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column: (1, -a_rr, -R C, -R A_{r-1} C, ...)
    std::vector<Rat> t(r + 1, Rat(0));
    t[0] = 1;
    t[1] = -a[r - 1][r - 1];
    if (r >= 2) {
      std::vector<Rat> w(r - 1);
      for (std::size_t i = 0; i < r - 1; ++i) w[i] = a[i][r - 1];  // C
      for (std::size_t k = 2; k <= r; ++k) {
        Rat dot(0);
        for (std::size_t i = 0; i < r - 1; ++i) dot += a[r - 1][i] * w[i];  // R A^{k-2} C
        t[k] = -dot;
        if (k == r) break;
        std::vector<Rat> w2(r - 1, Rat(0));
        for (std::size_t i = 0; i < r - 1; ++i) {
          if (w[i] == 0) continue;
          for (std::size_t j = 0; j < r - 1; ++j) w2[j] += a[j][i] * w[i];
        }
        w = std::move(w2);
      }
    }
    // p_r = T_r p_{r-1}: banded product, only degrees 0..r survive
    std::vector<Rat> q(r + 1, Rat(0));
    for (std::size_t i = 0; i <= r; ++i) {
      if (t[i] == 0) continue;
      for (std::size_t j = 0; j < p.size() && i + j <= r; ++j) q[i + j] += t[i] * p[j];
    }
    p = std::move(q);
  }

  std::vector<Rat> asc(p.rbegin(), p.rend());
  return asc;
}

// Exact division test in Q[lambda]; coefficients ascending.
inline bool poly_divides(const std::vector<Rat>& divisor, const std::vector<Rat>& dividend) {
  auto deg = [](const std::vector<Rat>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  const long dd = deg(divisor), dn = deg(dividend);
  if (dd < 0) return false;
  if (dn < 0) return true;
  if (dn < dd) return false;
  std::vector<Rat> rem(dividend.begin(), dividend.begin() + dn + 1);
  const Rat lead = divisor[static_cast<std::size_t>(dd)];
  for (long k = dn - dd; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * divisor[static_cast<std::size_t>(i)];
  }
  for (const auto& x : rem)
    if (x != 0) return false;
  return true;
}

}  // namespace ntasep
