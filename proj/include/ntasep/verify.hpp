#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ntasep/al.hpp"
#include "ntasep/generator.hpp"
#include "ntasep/linalg.hpp"
#include "ntasep/mpa.hpp"

namespace ntasep {

// Outcome of one executable identity check. A failing report always carries
// a concrete counterexample: the inputs and both evaluated sides.
struct CheckReport {
  std::string name;
  std::string scope;
  bool pass = true;
  std::string counterexample;

  static CheckReport ok(std::string name, std::string scope) {
    return CheckReport{std::move(name), std::move(scope), true, {}};
  }
  static CheckReport fail(std::string name, std::string scope, std::string why) {
    return CheckReport{std::move(name), std::move(scope), false, std::move(why)};
  }
};

namespace detail {

// ----- single-mode operator algebra (delta, epsilon, A, 1) -----

using ModeVec = std::map<int, LaurentPoly>;  // basis index -> coefficient

struct ModeOp {
  std::size_t vars = 2;
  std::function<ModeVec(int)> act;
};

inline void mode_accumulate(ModeVec& into, int state, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.emplace(state, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

inline ModeOp mode_compose(const ModeOp& a, const ModeOp& b) {
  return ModeOp{a.vars, [a, b](int mu) {
                  ModeVec out;
                  for (const auto& [s, c] : b.act(mu))
                    for (const auto& [s2, c2] : a.act(s)) mode_accumulate(out, s2, c * c2);
                  return out;
                }};
}

inline ModeOp mode_add(const ModeOp& a, const ModeOp& b) {
  return ModeOp{a.vars, [a, b](int mu) {
                  ModeVec out = a.act(mu);
                  for (const auto& [s, c] : b.act(mu)) mode_accumulate(out, s, c);
                  return out;
                }};
}

inline ModeOp mode_scale(const LaurentPoly& f, const ModeOp& a) {
  return ModeOp{a.vars, [f, a](int mu) {
                  ModeVec out;
                  for (const auto& [s, c] : a.act(mu)) mode_accumulate(out, s, f * c);
                  return out;
                }};
}

inline std::string mode_vec_str(const ModeVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")|" << s << ">";
  }
  return os.str();
}

}  // namespace detail

// The four fundamental operators, injectable so mutation tests can break one
// action and watch the corresponding relation fail.
struct FundamentalOps {
  detail::ModeOp del;  // lowering
  detail::ModeOp eps;  // raising
  detail::ModeOp vac;  // projector onto |0>
  detail::ModeOp one;  // identity

  static FundamentalOps standard(std::size_t vars = 2) {
    using detail::ModeOp;
    using detail::ModeVec;
    FundamentalOps ops;
    ops.del = ModeOp{vars, [vars](int mu) {
                       ModeVec v;
                       if (mu > 0) v.emplace(mu - 1, LaurentPoly::one(vars));
                       return v;
                     }};
    ops.eps = ModeOp{vars, [vars](int mu) {
                       ModeVec v;
                       v.emplace(mu + 1, LaurentPoly::one(vars));
                       return v;
                     }};
    ops.vac = ModeOp{vars, [vars](int mu) {
                       ModeVec v;
                       if (mu == 0) v.emplace(0, LaurentPoly::one(vars));
                       return v;
                     }};
    ops.one = ModeOp{vars, [vars](int mu) {
                       ModeVec v;
                       v.emplace(mu, LaurentPoly::one(vars));
                       return v;
                     }};
    return ops;
  }
};

// Quadratic relations of the fundamental algebra, checked by action on the
// basis levels 0..2 (every operator branches only on mu = 0 versus mu > 0 and
// shifts by at most one, so these levels exercise every branch).
inline CheckReport check_dehp(const FundamentalOps& ops = FundamentalOps::standard()) {
  using detail::mode_add;
  using detail::mode_compose;
  using detail::mode_scale;
  const std::size_t vars = ops.del.vars;
  const auto minus_one = LaurentPoly::constant(vars, -1);
  const detail::ModeOp b_op = mode_add(ops.one, mode_scale(minus_one, ops.vac));

  struct Relation {
    const char* label;
    detail::ModeOp lhs, rhs;
  };
  const detail::ModeOp zero{vars, [](int) { return detail::ModeVec{}; }};
  std::vector<Relation> rels = {
      {"delta*eps = 1", mode_compose(ops.del, ops.eps), ops.one},
      {"delta*A = 0", mode_compose(ops.del, ops.vac), zero},
      {"A*eps = 0", mode_compose(ops.vac, ops.eps), zero},
      {"A*A = A", mode_compose(ops.vac, ops.vac), ops.vac},
      {"B*B = B (B = 1-A)", mode_compose(b_op, b_op), b_op},
      {"delta*B = delta", mode_compose(ops.del, b_op), ops.del},
      {"B*eps = eps", mode_compose(b_op, ops.eps), ops.eps},
  };
  for (const auto& rel : rels) {
    for (int mu = 0; mu <= 2; ++mu) {
      const auto lhs = rel.lhs.act(mu), rhs = rel.rhs.act(mu);
      if (lhs != rhs) {
        std::ostringstream os;
        os << rel.label << " on |" << mu << ">: lhs = " << detail::mode_vec_str(lhs)
           << ", rhs = " << detail::mode_vec_str(rhs);
        return CheckReport::fail("dehp", "mu in {0,1,2}", os.str());
      }
    }
  }
  return CheckReport::ok("dehp", "mu in {0,1,2}");
}

// Two-species quadratic algebra X1 X3 = y1 X1 + X3, X2 X3 = y2 X2,
// X1 X2 = X2 with X1 = 1 + delta, X2 = A, X3 = y1 eps + y1 B + y2 A.
inline CheckReport check_two_species_algebra(
    const FundamentalOps& ops = FundamentalOps::standard()) {
  using detail::mode_add;
  using detail::mode_compose;
  using detail::mode_scale;
  const std::size_t vars = ops.del.vars;
  const auto y1 = LaurentPoly::var(vars, 1);
  const auto y2 = LaurentPoly::var(vars, 2);
  const auto minus_one = LaurentPoly::constant(vars, -1);
  const detail::ModeOp b_op = mode_add(ops.one, mode_scale(minus_one, ops.vac));

  const detail::ModeOp x1 = mode_add(ops.one, ops.del);
  const detail::ModeOp x2 = ops.vac;
  const detail::ModeOp x3 =
      mode_add(mode_scale(y1, ops.eps), mode_add(mode_scale(y1, b_op), mode_scale(y2, ops.vac)));

  struct Relation {
    const char* label;
    detail::ModeOp lhs, rhs;
  };
  std::vector<Relation> rels = {
      {"X1*X3 = y1*X1 + X3", mode_compose(x1, x3),
       mode_add(mode_scale(y1, x1), x3)},
      {"X2*X3 = y2*X2", mode_compose(x2, x3), mode_scale(y2, x2)},
      {"X1*X2 = X2", mode_compose(x1, x2), x2},
  };
  for (const auto& rel : rels) {
    for (int mu = 0; mu <= 2; ++mu) {
      const auto lhs = rel.lhs.act(mu), rhs = rel.rhs.act(mu);
      if (lhs != rhs) {
        std::ostringstream os;
        os << rel.label << " on |" << mu << ">: lhs = " << detail::mode_vec_str(lhs)
           << ", rhs = " << detail::mode_vec_str(rhs);
        return CheckReport::fail("two-species-algebra", "mu in {0,1,2}", os.str());
      }
    }
  }
  return CheckReport::ok("two-species-algebra", "mu in {0,1,2}");
}

using EntryFn = std::function<EntryAction(int, int, int, const FockState&)>;

namespace detail {

using FockVec = std::map<std::vector<int>, LaurentPoly>;

inline void fock_accumulate(FockVec& into, const std::vector<int>& state,
                            const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.emplace(state, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

inline FockVec entry_on_vec(const EntryFn& fn, int level, int j, int k, const FockVec& v,
                            std::size_t vars) {
  FockVec out;
  for (const auto& [state, coef] : v) {
    const EntryAction act = fn(level, j, k, FockState{state});
    if (act.annihilated()) continue;
    Monomial mono = act.coefficient();
    if (mono.vars() != vars) {
      Monomial lifted(vars);
      for (std::size_t a = 1; a <= mono.vars(); ++a)
        lifted.set_exponent(static_cast<int>(a), mono.exponent(static_cast<int>(a)));
      mono = lifted;
    }
    fock_accumulate(out, act.next().mu, coef.scaled(mono));
  }
  return out;
}

inline std::string fock_vec_str(const FockVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [state, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")|";
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (i) os << ",";
      os << state[i];
    }
    os << ">";
  }
  return os.str();
}

inline std::string fock_state_str(const std::vector<int>& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << ")";
  return os.str();
}

template <typename Next>
bool for_each_box(int comps, int bound, Next&& visit) {
  std::vector<int> mu(static_cast<std::size_t>(comps), 0);
  for (;;) {
    if (!visit(mu)) return false;
    int i = 0;
    while (i < comps && mu[static_cast<std::size_t>(i)] == bound) {
      mu[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == comps) return true;
    ++mu[static_cast<std::size_t>(i)];
  }
}

}  // namespace detail

// Verifies the six intertwining relations between adjacent species levels for
// every entry quadruple (j, j', k, k'), by action on mu in {0,1,2}^{N-1}.
// Before checking the relations it asserts the branch structure that makes
// this finite sweep exhaustive: no entry's action depends on a component
// beyond the zero / nonzero distinction, and all shifts are within +-1.
inline CheckReport check_hat_relation(
    int level,
    const EntryFn& entry = [](int n, int j, int k, const FockState& s) {
      return apply_entry(n, j, k, s);
    },
    const EntryFn& hat = [](int n, int j, int k, const FockState& s) {
      return apply_hat_entry(n, j, k, s);
    }) {
  if (level < 2) throw std::invalid_argument("check_hat_relation: level must be >= 2");
  const int comps = level - 1;
  const std::size_t vars = static_cast<std::size_t>(level);
  const std::string scope = "N=" + std::to_string(level) + ", mu in {0,1,2}^" +
                            std::to_string(comps);
  const std::string name = "hat-relation[N=" + std::to_string(level) + "]";

  // branch-structure assertion over mu in {0..3}^{N-1}
  std::string branch_fail;
  for (int which = 0; which < 2 && branch_fail.empty(); ++which) {
    const EntryFn& fn = which == 0 ? entry : hat;
    for (int j = 1; j <= level + 1 && branch_fail.empty(); ++j) {
      for (int k = 1; k <= level && branch_fail.empty(); ++k) {
        struct Outcome {
          bool seen = false;
          bool ann = false;
          Monomial coef{1};
          std::vector<int> delta;
        };
        std::map<unsigned, Outcome> by_pattern;
        detail::for_each_box(comps, 3, [&](const std::vector<int>& mu) {
          unsigned pattern = 0;
          for (int i = 0; i < comps; ++i)
            if (mu[static_cast<std::size_t>(i)] > 0) pattern |= 1u << i;
          const EntryAction act = fn(level, j, k, FockState{mu});
          Outcome cur;
          cur.seen = true;
          cur.ann = act.annihilated();
          if (!cur.ann) {
            cur.coef = act.coefficient();
            cur.delta.resize(static_cast<std::size_t>(comps));
            for (int i = 0; i < comps; ++i) {
              const int d = act.next().mu[static_cast<std::size_t>(i)] -
                            mu[static_cast<std::size_t>(i)];
              if (d < -1 || d > 1) {
                branch_fail = (which == 0 ? "a" : "ahat") +
                              std::string("[") + std::to_string(j) + "," + std::to_string(k) +
                              "] shifts component by more than 1 at mu=" +
                              detail::fock_state_str(mu);
                return false;
              }
              cur.delta[static_cast<std::size_t>(i)] = d;
            }
          }
          auto [it, inserted] = by_pattern.emplace(pattern, cur);
          if (!inserted) {
            const Outcome& ref = it->second;
            if (ref.ann != cur.ann || (!cur.ann && (ref.coef != cur.coef || ref.delta != cur.delta))) {
              branch_fail = (which == 0 ? "a" : "ahat") + std::string("[") +
                            std::to_string(j) + "," + std::to_string(k) +
                            "] acts differently within one zero-pattern class at mu=" +
                            detail::fock_state_str(mu);
              return false;
            }
          }
          return true;
        });
      }
    }
  }
  if (!branch_fail.empty()) return CheckReport::fail(name, scope, branch_fail);

  // the six relations, selected by (j vs j') x (k vs k')
  const auto x_of = [&](int a) { return LaurentPoly::var(vars, a, -1); };
  std::string failure;
  detail::for_each_box(comps, 2, [&](const std::vector<int>& mu) {
    detail::FockVec basis;
    basis.emplace(mu, LaurentPoly::one(vars));
    for (int j = 1; j <= level + 1; ++j)
      for (int jp = 1; jp <= level + 1; ++jp)
        for (int k = 1; k <= level; ++k)
          for (int kp = 1; kp <= level; ++kp) {
            const auto prod = [&](const EntryFn& top, int tj, int tk, const EntryFn& bot,
                                  int bj, int bk) {
              return detail::entry_on_vec(top, level, tj, tk,
                                          detail::entry_on_vec(bot, level, bj, bk, basis, vars),
                                          vars);
            };
            const auto scaled = [&](const LaurentPoly& f, detail::FockVec v) {
              detail::FockVec out;
              for (const auto& [s, c] : v) detail::fock_accumulate(out, s, f * c);
              return out;
            };
            const auto add = [&](detail::FockVec a, const detail::FockVec& b) {
              for (const auto& [s, c] : b) detail::fock_accumulate(a, s, c);
              return a;
            };

            detail::FockVec lhs;
            const auto a_jk_jpkp = prod(entry, j, k, entry, jp, kp);
            if (k < kp) {
              const auto exchange = add(prod(entry, j, kp, entry, jp, k),
                                        scaled(LaurentPoly::constant(vars, -1), a_jk_jpkp));
              lhs = scaled(-x_of(k), exchange);
            }
            if (j < jp)
              lhs = add(lhs, scaled(-x_of(j), a_jk_jpkp));
            else if (j > jp)
              lhs = add(lhs, scaled(x_of(jp), prod(entry, jp, k, entry, j, kp)));

            const auto rhs = add(prod(hat, j, k, entry, jp, kp),
                                 scaled(LaurentPoly::constant(vars, -1),
                                        prod(entry, j, k, hat, jp, kp)));
            if (!(lhs == rhs)) {
              std::ostringstream os;
              os << "j=" << j << ", j'=" << jp << ", k=" << k << ", k'=" << kp
                 << ", mu=" << detail::fock_state_str(mu)
                 << ": lhs = " << detail::fock_vec_str(lhs)
                 << ", rhs = " << detail::fock_vec_str(rhs);
              failure = os.str();
              return false;
            }
          }
    return true;
  });
  if (!failure.empty()) return CheckReport::fail(name, scope, failure);
  return CheckReport::ok(name, scope);
}

// Exact symbolic intertwining M_m psi_m = psi_m M_{m'}; the psi overload lets
// tests feed a deliberately broken matrix.
inline CheckReport check_conjugation(const Sector& m, const PolyMatrix& psi) {
  require_basic(m, "check_conjugation");
  const std::size_t vars = psi.vars();
  const std::string name = "conjugation[" + format_sector(m) + "]";
  const PolyMatrix gen_m = build_generator(m, vars);
  const PolyMatrix gen_merged = build_generator(merge_last(m), vars);
  const PolyMatrix left = matmul(gen_m, psi);
  const PolyMatrix right = matmul(psi, gen_merged);
  if (left == right) return CheckReport::ok(name, "symbolic");
  for (std::size_t r = 0; r < left.n_rows(); ++r)
    for (std::size_t c = 0; c < left.n_cols(); ++c) {
      const LaurentPoly l = left.entry_or_zero(r, c), g = right.entry_or_zero(r, c);
      if (!(l == g)) {
        std::ostringstream os;
        os << "entry (" << format_word(left.row_words()[r]) << ", "
           << format_word(left.col_words()[c]) << "): M*psi = " << l.to_string()
           << ", psi*M' = " << g.to_string();
        return CheckReport::fail(name, "symbolic", os.str());
      }
    }
  return CheckReport::fail(name, "symbolic", "matrices differ in shape");
}

inline CheckReport check_conjugation(const Sector& m) {
  require_basic(m, "check_conjugation");
  return check_conjugation(m, conjugation_matrix(m, static_cast<std::size_t>(m.parts() - 1)));
}

enum class Route { mpa, al };

inline const char* route_name(Route r) { return r == Route::mpa ? "mpa" : "al"; }

// Symbolic stationarity M_m |P> = 0, plus exact proportionality with the
// null-space solve at seeded rational rate points.
inline CheckReport check_stationarity(const Sector& m, Route route,
                                      std::uint64_t seed = 12345, int rate_points = 5) {
  require_basic(m, "check_stationarity");
  const std::string name =
      "stationarity[" + format_sector(m) + ";route=" + route_name(route) + "]";
  const std::string scope =
      "symbolic + " + std::to_string(rate_points) + " seeded rate points";
  const auto weights = route == Route::mpa ? stationary_mpa(m) : stationary_al(m);
  const std::size_t vars = static_cast<std::size_t>(m.parts() - 1);

  const PolyMatrix gen = build_generator(m, vars);
  const auto residual = gen.apply(weights);
  const auto words = enumerate_sector(m);
  for (std::size_t i = 0; i < residual.size(); ++i)
    if (!residual[i].is_zero())
      return CheckReport::fail(name, scope,
                               "M*P is nonzero at " + format_word(words[i]) + ": " +
                                   residual[i].to_string());

  SmallRatGen gen_rates(seed);
  for (int point = 0; point < rate_points; ++point) {
    std::vector<Rat> x;
    for (std::size_t a = 0; a < vars; ++a) x.push_back(gen_rates.next());
    const RateAssignment rates(x);
    const auto y = rates.y_values();
    const auto w = evaluate_vector(weights, y);
    std::vector<Rat> kernel;
    try {
      kernel = kernel_solve(build_generator_at(m, rates));
    } catch (const std::exception& e) {
      return CheckReport::fail(name, scope, std::string("kernel solve failed: ") + e.what());
    }
    Rat total(0);
    for (const auto& v : w) total += v;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != kernel[i] * total) {
        std::ostringstream os;
        os << "rate point " << point << " (x =";
        for (const auto& v : x) os << " " << format_fraction(v);
        os << "): weight(" << format_word(words[i]) << ") = " << format_fraction(w[i])
           << " but kernel gives " << format_fraction(kernel[i] * total);
        return CheckReport::fail(name, scope, os.str());
      }
  }
  return CheckReport::ok(name, scope);
}

// The two construction routes must agree entry for entry, zero pattern
// included.
inline CheckReport check_tr_eq_w(const Sector& m) {
  require_basic(m, "check_tr_eq_w");
  const std::string name = "tr-eq-w[" + format_sector(m) + "]";
  const PolyMatrix trace_route = conjugation_matrix(m);
  const PolyMatrix graphical = psi_al(m);
  if (trace_route == graphical) return CheckReport::ok(name, "exhaustive entrywise");
  for (std::size_t r = 0; r < trace_route.n_rows(); ++r)
    for (std::size_t c = 0; c < trace_route.n_cols(); ++c) {
      const LaurentPoly a = trace_route.entry_or_zero(r, c);
      const LaurentPoly b = graphical.entry_or_zero(r, c);
      if (!(a == b)) {
        std::ostringstream os;
        os << "entry (" << format_word(trace_route.row_words()[r]) << ", "
           << format_word(trace_route.col_words()[c]) << "): trace = " << a.to_string()
           << ", graphical = " << b.to_string();
        return CheckReport::fail(name, "exhaustive entrywise", os.str());
      }
    }
  return CheckReport::fail(name, "exhaustive entrywise", "matrices differ in shape");
}

// Characteristic polynomial of the merged sector divides that of the refined
// sector, exactly over the rationals at the given rates.
inline CheckReport check_spectral_inclusion(const Sector& m, const RateAssignment& rates,
                                            int dim_cap = 40) {
  require_basic(m, "check_spectral_inclusion");
  const Sector merged = merge_last(m);
  const std::string name =
      "spectral[" + format_sector(m) + "|" + format_sector(merged) + "]";
  const RatMatrix big = build_generator_at(m, rates);
  if (static_cast<int>(big.n_rows()) > dim_cap)
    throw std::invalid_argument("check_spectral_inclusion: dimension cap exceeded");
  const RatMatrix small = build_generator_at(merged, rates);
  const auto p_big = charpoly(big);
  const auto p_small = charpoly(small);
  std::ostringstream scope;
  scope << "dims " << big.n_rows() << " | " << small.n_rows() << " at x = (";
  for (std::size_t i = 0; i < rates.x.size(); ++i)
    scope << (i ? "," : "") << format_fraction(rates.x[i]);
  scope << ")";
  if (poly_divides(p_small, p_big)) return CheckReport::ok(name, scope.str());
  std::ostringstream os;
  os << "charpoly(M_merged) does not divide charpoly(M); coefficients (ascending):"
     << " divisor =";
  for (const auto& c : p_small) os << " " << format_fraction(c);
  os << "; dividend =";
  for (const auto& c : p_big) os << " " << format_fraction(c);
  return CheckReport::fail(name, scope.str(), os.str());
}

// Nonnegative integer coefficients for every stationary weight, and agreement
// of the homogeneous specialization with the kernel of the x = 1 generator.
// For dimensions beyond kernel_dim_cap the null-space solve is replaced by an
// exact residual check of the evaluated weights (the kernel is simple for
// basic sectors, so the residual pins the same vector).
inline CheckReport check_positivity(const Sector& m, int kernel_dim_cap = 300) {
  require_basic(m, "check_positivity");
  const std::string name = "positivity[" + format_sector(m) + "]";
  const auto weights = stationary_al(m);
  const auto words = enumerate_sector(m);
  const std::size_t vars = static_cast<std::size_t>(m.parts() - 1);

  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].is_zero())
      return CheckReport::fail(name, "coefficients", "zero weight at " + format_word(words[i]));
    for (const auto& [mono, coef] : weights[i].terms()) {
      if (coef < 0) {
        std::ostringstream os;
        os << "negative coefficient in weight(" << format_word(words[i])
           << ") = " << weights[i].to_string();
        return CheckReport::fail(name, "coefficients", os.str());
      }
      for (auto e : mono.exponents())
        if (e < 0)
          return CheckReport::fail(name, "coefficients",
                                   "negative exponent in weight(" + format_word(words[i]) +
                                       ") = " + weights[i].to_string());
    }
  }

  const std::vector<Rat> ones_y(vars, Rat(1));
  const auto homogeneous = evaluate_vector(weights, ones_y);
  for (std::size_t i = 0; i < homogeneous.size(); ++i)
    if (homogeneous[i].get_den() != 1 || homogeneous[i] <= 0)
      return CheckReport::fail(name, "y=1",
                               "homogeneous weight at " + format_word(words[i]) +
                                   " is not a positive integer: " +
                                   format_fraction(homogeneous[i]));

  const RateAssignment ones = RateAssignment::ones(vars);
  if (static_cast<int>(words.size()) <= kernel_dim_cap) {
    const auto kernel = kernel_solve(build_generator_at(m, ones));
    Rat total(0);
    for (const auto& v : homogeneous) total += v;
    for (std::size_t i = 0; i < homogeneous.size(); ++i)
      if (homogeneous[i] != kernel[i] * total) {
        std::ostringstream os;
        os << "y=1 weight(" << format_word(words[i]) << ") = " << format_fraction(homogeneous[i])
           << " but kernel gives " << format_fraction(kernel[i] * total);
        return CheckReport::fail(name, "y=1 vs kernel", os.str());
      }
    return CheckReport::ok(name, "coefficients + y=1 kernel comparison");
  }

  const auto residual = build_generator_at(m, ones).apply(homogeneous);
  for (std::size_t i = 0; i < residual.size(); ++i)
    if (residual[i] != 0)
      return CheckReport::fail(name, "y=1 residual",
                               "M(1)*P is nonzero at " + format_word(words[i]) + ": " +
                                   format_fraction(residual[i]));
  return CheckReport::ok(name, "coefficients + y=1 residual (dim > kernel cap)");
}

struct SuiteOptions {
  int max_n = 3;
  int max_l = 6;
  std::uint64_t seed = 12345;
  int charpoly_dim_cap = 40;
  int kernel_dim_cap = 300;
};

// Named suites backing the `verify` command. Sector sweeps cover every basic
// sector with species level <= max_n and length <= max_l.
inline std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& opt) {
  std::vector<CheckReport> reports;
  const bool all = suite == "all";
  const auto sectors = all_basic_sectors(opt.max_n, opt.max_l);

  if (all || suite == "dehp") {
    reports.push_back(check_dehp());
    reports.push_back(check_two_species_algebra());
  }
  if (all || suite == "hat") {
    for (int n = 2; n <= std::max(2, opt.max_n); ++n)
      reports.push_back(check_hat_relation(n));
  }
  if (all || suite == "conjugation") {
    for (const auto& m : sectors) reports.push_back(check_conjugation(m));
  }
  if (all || suite == "stationarity") {
    for (const auto& m : sectors) {
      reports.push_back(check_stationarity(m, Route::mpa, opt.seed));
      reports.push_back(check_stationarity(m, Route::al, opt.seed));
    }
  }
  if (all || suite == "tr-eq-w") {
    for (const auto& m : sectors) reports.push_back(check_tr_eq_w(m));
  }
  if (all || suite == "spectral") {
    for (const auto& m : sectors) {
      const Int dim = detail::sector_dimension(m);
      if (dim > opt.charpoly_dim_cap) continue;
      reports.push_back(check_spectral_inclusion(
          m, RateAssignment::ramp(static_cast<std::size_t>(m.parts() - 1)),
          opt.charpoly_dim_cap));
    }
  }
  if (all || suite == "positivity") {
    for (const auto& m : sectors) reports.push_back(check_positivity(m, opt.kernel_dim_cap));
  }
  if (reports.empty() && !all)
    throw std::invalid_argument("unknown verify suite: " + suite);
  return reports;
}

}  // namespace ntasep
