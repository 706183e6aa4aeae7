#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regshift/markov.hpp"

namespace regshift {

// TV(P, Q) below always means sum |P - Q| (range [0, 2]), not half of it.

/// Max over states of the L1 distance between full rows (emissions and termination).
double epsilon(const EdgeMarkovChain& p, const EdgeMarkovChain& q);
/// Max row L1 norm of the table difference (the induced infinity norm).
double shift_norm(const EdgeMarkovChain& p, const EdgeMarkovChain& q);
/// Max absolute entry difference.
double entrywise_norm(const EdgeMarkovChain& p, const EdgeMarkovChain& q);

/// Shift term 2 T |S|^(T+1) eps of the end-to-end worst case; +inf on overflow.
double bound_e2e_worstcase(double eps, double T, int n_states);
/// Shift term 2 T^2 eps of the compositional worst case.
double bound_comp_worstcase(double eps, double T);
/// TV bound for an equal mixture of positive and negative distributions.
double mixture_tv_bound(double tv_pos, double tv_neg);
/// clamp(1 - train_loss - shift_term, 0, 1).
double accuracy_lower_bound(double train_loss, double shift_term);

struct TvEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

enum class TvStatistic {
  /// 2 max(0, 1 - Q(x)/P(x)): bounded in [0, 2], so the variance is finite,
  /// and exact even where Q puts mass outside the support of P.
  positive_part,
  /// |1 - Q(x)/P(x)|: heavy-tailed whenever Q/P has infinite variance under
  /// P (the parity family beyond delta ~ 0.4), and it misses Q-mass outside
  /// the support of P.
  absolute,
};

/// Mean over n strings drawn from p of the chosen statistic, whose
/// expectation is TV(P, Q), with its standard error. Sample i uses
/// substream (seed, i). OpenMP-parallel.
TvEstimate estimate_tv_strings_mc(const EdgeMarkovChain& p, const EdgeMarkovChain& q, std::size_t n,
                                  std::uint64_t seed, TvStatistic statistic = TvStatistic::positive_part);
TvEstimate estimate_tv_strings_mc_serial(const EdgeMarkovChain& p, const EdgeMarkovChain& q,
                                         std::size_t n, std::uint64_t seed,
                                         TvStatistic statistic = TvStatistic::positive_part);

struct TvBracket {
  double lower = 0.0;
  double upper = 0.0;
};

inline constexpr std::size_t kDefaultSignatureBudget = std::size_t{1} << 24;

/// Deterministic bracket on TV(P(x), Q(x)) for two chains over the same DFA.
///
/// Strings of length <= max_len are grouped by their transition-count
/// signature (how often each (state, symbol) edge is taken, plus the final
/// state); every string in a group has the same probability under each
/// chain, so the sum of |P - Q| over them is exact. The probability mass of
/// longer strings under each chain comes from powers of the continuation
/// matrix and is added to form the upper end.
/// Throws ResourceError when a layer holds more than `budget` signatures.
TvBracket exact_tv_enumeration(const EdgeMarkovChain& p, const EdgeMarkovChain& q, int max_len,
                               std::size_t budget = kDefaultSignatureBudget);

/// Probability that a string from emc is longer than max_len.
double tail_mass(const EdgeMarkovChain& emc, int max_len);

struct StateDistribution {
  std::vector<double> probs;
  bool exact = false;
  std::size_t n_samples = 0;  ///< 0 when exact
};

/// Pools every induced state of n sampled strings into one normalised histogram.
StateDistribution estimate_state_distribution(const EdgeMarkovChain& emc, std::size_t n,
                                              std::uint64_t seed);
/// Expected visit counts normalised; the limit of estimate_state_distribution.
StateDistribution exact_state_distribution(const EdgeMarkovChain& emc);

enum class CompEstimator {
  aggregated,  ///< one pooled state histogram stands in for every step, scaled by E[T]
  per_step,    ///< separate histograms per position, normalised by n
};

/// ltilde + sum_t TV(P_t(s,a), Q_t(s,a)) + TV(P_final(s), Q_final(s)) estimated
/// from n strings of each chain. Joint tables use full rows (termination
/// included). The aggregated form uses T = expected_length(p).
double bound_comp_estimate(const EdgeMarkovChain& p, const EdgeMarkovChain& q, std::size_t n,
                           double ltilde, std::uint64_t seed,
                           CompEstimator mode = CompEstimator::aggregated);

/// One row of the shift report. Accuracy lower bounds refer to a balanced
/// test set whose negatives are not shifted, so the positive-chain shift
/// term is halved via mixture_tv_bound(term, 0).
struct ShiftReport {
  double delta = 0.0;
  double shift_norm = 0.0;
  double entrywise_norm = 0.0;
  double epsilon = 0.0;
  double bound_e2e_wc = 0.0;
  double bound_comp_wc = 0.0;
  double tv_mc = 0.0;
  double tv_mc_se = 0.0;
  double comp_est = 0.0;
  double acc_lower_e2e = 0.0;
  double acc_lower_comp = 0.0;
  double T_heuristic = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

ShiftReport make_shift_report(const EdgeMarkovChain& p, const EdgeMarkovChain& q, double delta,
                              std::size_t n, std::uint64_t seed, double train_loss = 0.0,
                              double ltilde = 0.0);

std::string shift_report_csv_header();
std::string shift_report_csv_row(const ShiftReport& r);

}  // namespace regshift
