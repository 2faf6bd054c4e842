#include "sncqa/costmodel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sncqa {

__extension__ typedef unsigned __int128 u128;

namespace {

// !l by the recurrence !l = (l - 1)(!(l-1) + !(l-2)).
u128 subfactorial(int l) {
  u128 a = 1, b = 0;  // !0, !1
  if (l == 0) return a;
  for (int i = 2; i <= l; ++i) {
    u128 c = static_cast<u128>(i - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

double log_subfactorial(int l) {
  if (l == 0) return 0.0;
  if (l == 1) return -std::numeric_limits<double>::infinity();
  if (l <= 30) return std::log(static_cast<double>(subfactorial(l)));
  // !l = round(l!/e), exact to double precision here.
  return std::lgamma(l + 1.0) - 1.0;
}

}  // namespace

std::uint64_t derangement(int n, int l) {
  if (n < 0 || l < 0) throw std::invalid_argument("derangement needs n, l >= 0");
  if (l > n) throw std::invalid_argument("derangement needs l <= n");
  if (n > 20) throw std::overflow_error("derangement count exceeds 64 bits for n > 20");
  u128 binom = 1;
  for (int i = 1; i <= l; ++i) binom = binom * static_cast<unsigned>(n - l + i) / static_cast<unsigned>(i);
  u128 value = binom * subfactorial(l);
  if (value > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("derangement count overflow");
  return static_cast<std::uint64_t>(value);
}

double log_derangement(int n, int l) {
  if (l > n || l < 0) throw std::invalid_argument("derangement needs 0 <= l <= n");
  return std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0) + log_subfactorial(l);
}

TruncationOrder truncation_order(double dt_norm, double eps_tilde) {
  if (!(dt_norm > 0.0)) throw std::invalid_argument("dt_norm must be positive");
  if (!(eps_tilde > 0.0 && eps_tilde < 1.0)) throw std::invalid_argument("eps_tilde must lie in (0, 1)");
  TruncationOrder out;
  const double log_x = std::log(dt_norm);
  const double log_eps = std::log(eps_tilde);
  // Relative slack absorbs round-off at exact ties such as 1/2! = 0.5.
  const double slack = 1e-12 * std::max(1.0, std::abs(log_eps));
  for (int K = 1;; ++K) {
    if (K * log_x - std::lgamma(K + 1.0) <= log_eps + slack) {
      out.K = K;
      break;
    }
    if (K > 10'000'000) throw std::runtime_error("truncation order did not converge");
  }
  const double inv = -log_eps;  // log(1/eps)
  if (inv > 1.0) {
    const double ll = std::log(inv);
    if (ll > 0.0) out.K_surrogate = static_cast<int>(std::ceil(inv / ll));
  }
  return out;
}

std::string to_string(CostModel model) {
  return model == CostModel::kQuditSwap ? "qudit_swap" : "qubit_pauli";
}

CostModel parse_cost_model(std::string_view text) {
  if (text == "qudit_swap" || text == "qudit") return CostModel::kQuditSwap;
  if (text == "qubit_pauli" || text == "qubit") return CostModel::kQubitPauli;
  throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

CostEstimate estimate(CostModel model, int n, int k, double t, double epsilon, double C) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("estimate needs 1 <= k <= n");
  if (!(t > 0.0) || !(epsilon > 0.0) || !(C > 0.0)) throw std::invalid_argument("t, epsilon and C must be positive");
  if (!(epsilon < 1.0)) throw std::invalid_argument("epsilon must be below 1");
  CostEstimate e;
  e.model = model;
  e.n = n;
  e.k = k;
  e.t = t;
  e.epsilon = epsilon;
  e.C = C;
  const double log_nk = k * std::log(static_cast<double>(n));
  double log_leading = 0.0;
  double log_m = 0.0;
  if (model == CostModel::kQuditSwap) {
    e.L = C;
    log_m = std::log(t * C * k) + log_nk;
    log_leading = std::log(t * C) + 3.0 * std::log(static_cast<double>(k)) + log_nk;
    e.term_bound = std::round(std::exp(std::log(static_cast<double>(k)) + log_nk));
  } else {
    e.L = C * std::ldexp(1.0, k - 1);
    log_m = std::log(t * e.L) + log_nk;
    log_leading = log_m;
    e.term_bound = std::round(std::exp(2.0 * std::log(static_cast<double>(k)) + log_nk + k * std::log(4.0)));
  }
  e.M = std::max(1.0, std::ceil(std::exp(log_m)));
  e.leading = std::exp(log_leading);

  const double log_m_eps = std::log(e.M) - std::log(epsilon);  // log(M / eps)
  const double loglog = std::log(log_m_eps);
  // Below M/eps = e^e the loglog factor drops under one; clamp to keep the
  // estimate positive and monotone.
  const double ratio = loglog > 1.0 ? log_m_eps / loglog : log_m_eps;
  e.log_gate_count = log_leading + std::log(ratio);
  e.gate_count = std::exp(e.log_gate_count);

  const double eps_tilde = std::exp(std::log(epsilon) - std::log(e.M));
  const auto order = truncation_order(1.0, eps_tilde);
  e.K = order.K;
  e.K_surrogate = order.K_surrogate;

  double terms = 0.0;
  for (int l = 2; l <= k; ++l) terms += std::exp(log_derangement(n, l));
  e.term_count = std::round(terms);
  e.ancilla_log = e.term_count > 0 ? std::log2(e.term_count * e.K) : 0.0;
  return e;
}

}  // namespace sncqa
