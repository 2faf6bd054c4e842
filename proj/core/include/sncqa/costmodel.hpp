#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sncqa {

/// Permutations of n points moving exactly l of them: C(n, l) * !l.
/// Exact up to n = 20; throws std::overflow_error beyond 64 bits.
std::uint64_t derangement(int n, int l);

/// Natural log of derangement(n, l), usable for any n.
double log_derangement(int n, int l);

struct TruncationOrder {
  int K = 0;          // smallest K with x^K / K! <= eps
  int K_surrogate = 0;  // ceil(log(1/eps) / log log(1/eps)), 0 when undefined
};

/// Smallest K >= 1 with dt_norm^K / K! <= eps_tilde, evaluated in log space.
TruncationOrder truncation_order(double dt_norm, double eps_tilde);

enum class CostModel { kQuditSwap, kQubitPauli };

std::string to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

struct CostEstimate {
  CostModel model = CostModel::kQuditSwap;
  int n = 0;
  int k = 0;
  double t = 0.0;
  double epsilon = 0.0;
  double C = 0.0;
  double L = 0.0;              // L(k) = C 2^(k-1) for the qubit model, C otherwise
  double M = 0.0;              // segment count ceil(t C k n^k) or ceil(t L(k) n^k)
  int K = 0;                   // truncation order at eps / M
  int K_surrogate = 0;
  double leading = 0.0;        // t C k^3 n^k or t L(k) n^k
  double log_gate_count = 0.0; // natural log of gate_count
  double gate_count = 0.0;     // leading * log(M/eps) / loglog(M/eps); inf on overflow
  double term_count = 0.0;     // sum_{l=2..k} D_l
  double term_bound = 0.0;     // k n^k (qudit) or k^2 n^k 4^k (qubit)
  double ancilla_log = 0.0;    // log2(N K)
};

/// Order-of-magnitude gate counts with all O(.) constants set to one.
CostEstimate estimate(CostModel model, int n, int k, double t, double epsilon, double C = 1.0);

}  // namespace sncqa
