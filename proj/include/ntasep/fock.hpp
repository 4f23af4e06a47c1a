#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntasep/monomial.hpp"

namespace ntasep {

// Basis label of the auxiliary space at species level N: a tuple
// mu = (mu_1,...,mu_{N-1}) of nonnegative integers (empty at N = 1).
// Component nu counts the arrows of value nu still in flight.
struct FockState {
  std::vector<int> mu;

  friend bool operator==(const FockState&, const FockState&) = default;
};

// Result of one operator entry on a basis state: either the state is killed,
// or it maps to a single basis state with a single-monomial coefficient.
struct EntryAction {
  std::optional<std::pair<Monomial, FockState>> result;

  bool annihilated() const { return !result.has_value(); }
  const Monomial& coefficient() const { return result->first; }
  const FockState& next() const { return result->second; }
};

namespace detail {

// In-place entry action on the first (level-1) components of mu.
// Returns -1 if the state is annihilated, 0 for unit coefficient, and a >= 1
// when the coefficient is y_a. The case split:
//   j < k : needs mu_1..mu_{j-1} = 0 and mu_j > 0; mu_j -= 1, and mu_k += 1
//           unless k = N (value-N arrows are not tracked)
//   j = k : needs mu_1..mu_{j-1} = 0; identity
//   j = N+1, k < N : coefficient y_min(l,k) with l the first nonzero index
//                    (y_k when mu = 0); mu_k += 1
//   j = N+1, k = N : coefficient y_l (y_N when mu = 0); identity
//   k < j <= N : the zero operator
template <typename IntT>
inline int apply_entry_inplace(int level, int j, int k, IntT* mu) {
  const int comps = level - 1;
  if (j < k) {
    for (int i = 0; i < j - 1; ++i)
      if (mu[i] != 0) return -1;
    if (mu[j - 1] <= 0) return -1;
    --mu[j - 1];
    if (k < level) ++mu[k - 1];
    return 0;
  }
  if (j == k) {
    for (int i = 0; i < j - 1; ++i)
      if (mu[i] != 0) return -1;
    return 0;
  }
  if (j == level + 1) {
    int first_nonzero = 0;
    for (int i = 0; i < comps; ++i)
      if (mu[i] != 0) {
        first_nonzero = i + 1;
        break;
      }
    if (k < level) {
      ++mu[k - 1];
      return first_nonzero == 0 ? k : std::min(first_nonzero, k);
    }
    return first_nonzero == 0 ? level : first_nonzero;
  }
  return -1;
}

// Hat entries: zero rows except j = N+1, where column k < N raises mu_k and
// column N is the identity.
template <typename IntT>
inline int apply_hat_entry_inplace(int level, int j, int k, IntT* mu) {
  if (j != level + 1) return -1;
  if (k < level) ++mu[k - 1];
  return 0;
}

inline void check_entry_indices(int level, int j, int k, std::size_t mu_size) {
  if (level < 1) throw std::out_of_range("entry action: level must be >= 1");
  if (j < 1 || j > level + 1) throw std::out_of_range("entry action: row index out of range");
  if (k < 1 || k > level) throw std::out_of_range("entry action: column index out of range");
  if (mu_size != static_cast<std::size_t>(level - 1))
    throw std::out_of_range("entry action: state has wrong component count");
}

template <typename Fn>
inline EntryAction run_entry(int level, int j, int k, const FockState& state, Fn&& fn) {
  check_entry_indices(level, j, k, state.mu.size());
  FockState next = state;
  const int code = fn(level, j, k, next.mu.data());
  if (code < 0) return EntryAction{};
  Monomial coef = code == 0 ? Monomial::unit(static_cast<std::size_t>(level))
                            : Monomial::var(static_cast<std::size_t>(level), code);
  return EntryAction{std::make_pair(std::move(coef), std::move(next))};
}

}  // namespace detail

inline EntryAction apply_entry(int level, int j, int k, const FockState& state) {
  return detail::run_entry(level, j, k, state,
                           [](int n, int jj, int kk, int* mu) {
                             return detail::apply_entry_inplace(n, jj, kk, mu);
                           });
}

inline EntryAction apply_hat_entry(int level, int j, int k, const FockState& state) {
  return detail::run_entry(level, j, k, state,
                           [](int n, int jj, int kk, int* mu) {
                             return detail::apply_hat_entry_inplace(n, jj, kk, mu);
                           });
}

}  // namespace ntasep
