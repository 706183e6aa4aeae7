#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "regshift/automata.hpp"
#include "regshift/rng.hpp"

namespace regshift {

/// Edge Markov chain over a DFA.
///
/// Row s of the table is one categorical distribution with |alphabet|+1
/// entries: entry a is the probability of emitting alphabet[a] (and moving to
/// next(s, a)), the last entry is the probability of terminating in s. When
/// forbid_empty is set the termination branch is skipped on the first step
/// and the first emission is drawn from the renormalised emission entries.
class EdgeMarkovChain {
 public:
  static constexpr double kRowTolerance = 1e-9;

  /// Validates the table. With strict_positive, termination outside the
  /// DFA's accepting set is rejected so every sample is in L(dfa).
  EdgeMarkovChain(Dfa dfa, const std::vector<std::vector<double>>& rows, bool forbid_empty,
                  bool strict_positive);

  const Dfa& dfa() const { return dfa_; }
  int num_states() const { return dfa_.num_states(); }
  int num_symbols() const { return dfa_.num_symbols(); }
  int row_size() const { return dfa_.num_symbols() + 1; }
  bool forbid_empty() const { return forbid_empty_; }

  std::span<const double> row(int s) const {
    return {table_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(row_size()),
            static_cast<std::size_t>(row_size())};
  }
  double emit(int s, int a) const { return row(s)[static_cast<std::size_t>(a)]; }
  double end(int s) const { return row(s)[static_cast<std::size_t>(num_symbols())]; }
  std::vector<std::vector<double>> rows() const;

  /// True when termination has positive probability from every reachable state.
  bool terminates() const { return terminates_; }
  /// States reachable from the start with positive probability.
  const std::vector<char>& reachable() const { return reachable_; }

  friend bool operator==(const EdgeMarkovChain&, const EdgeMarkovChain&) = default;

 private:
  Dfa dfa_;
  std::vector<double> table_;
  bool forbid_empty_ = false;
  bool terminates_ = false;
  std::vector<char> reachable_;
};

/// One generated string with its label and provenance.
struct LabeledExample {
  Symbols x;
  int y = 0;          ///< membership in the positive language
  StateSequence z;    ///< induced states under the generating DFA, |x|+1 entries
  double logp = 0.0;  ///< natural-log probability under the generating chain

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

enum class LikelihoodMode {
  full,   ///< emission entries along the path times the final termination entry
  bare,   ///< bare product of emission entries along the path
};

inline constexpr std::size_t kRunawayLength = 1'000'000;

/// Draws one string. The label refers to `label_dfa` when given, otherwise to
/// the chain's own DFA. Throws ConfigurationError for non-terminating chains
/// and NumericalError past kRunawayLength symbols.
LabeledExample sample_string(const EdgeMarkovChain& emc, Rng& rng, const Dfa* label_dfa = nullptr);

/// Log-probability of x; -infinity when x cannot be generated.
double string_likelihood(const EdgeMarkovChain& emc, std::span<const int> x,
                         LikelihoodMode mode = LikelihoodMode::full);

/// State-to-state transition mass of one non-terminating step:
/// A(s, s') = sum over symbols a with next(s, a) = s' of emit(s, a).
Eigen::MatrixXd continuation_matrix(const EdgeMarkovChain& emc);

/// Distribution over states after the first emission (sub-stochastic; the
/// missing mass is the probability of the empty string).
Eigen::RowVectorXd first_step_distribution(const EdgeMarkovChain& emc);

/// Probability of generating the empty string.
double empty_string_probability(const EdgeMarkovChain& emc);

/// Exact expected length by solving E_s = (1 - e_s)(1 + sum_a P(a|s) E_next(s,a)).
double expected_length(const EdgeMarkovChain& emc);

/// `count` independent strings; example i uses substream (seed, stream, i).
/// OpenMP-parallel; the output is identical to sample_batch_serial.
std::vector<LabeledExample> sample_batch(const EdgeMarkovChain& emc, const Dfa& label_dfa,
                                         std::size_t count, std::uint64_t seed, std::uint64_t stream);
std::vector<LabeledExample> sample_batch_serial(const EdgeMarkovChain& emc, const Dfa& label_dfa,
                                                std::size_t count, std::uint64_t seed,
                                                std::uint64_t stream);

/// n_pos positives from `positive`, n_neg negatives from `negative`, labels
/// against `language`, shuffled with the seed.
std::vector<LabeledExample> sample_labeled(const EdgeMarkovChain& positive,
                                           const EdgeMarkovChain& negative, const Dfa& language,
                                           std::size_t n_pos, std::size_t n_neg, std::uint64_t seed);

/// Base chain, its perturbation family and the fixed negative chain.
struct ShiftFamily {
  std::string name;
  Dfa language;  ///< positive-language DFA; labels always refer to it
  EdgeMarkovChain base;
  EdgeMarkovChain negative;  ///< strict over complement(language)
  std::function<EdgeMarkovChain(double)> make_perturbed;
  double anchor = 0.2;
  double delta_min = 0.2;
  double delta_max = 0.85;
  std::vector<double> delta_grid;

  /// Throws InvalidParameter outside [delta_min, delta_max].
  EdgeMarkovChain perturbed(double delta) const;
};

enum class Split : std::uint64_t { train_id = 1, dev_id = 2, test_id = 3, test_ood = 4 };

/// Dataset for a split. test_ood draws positives from perturbed(delta); all
/// other splits use the base chain. Negatives always come from the negative chain.
std::vector<LabeledExample> sample_dataset(const ShiftFamily& family, Split which, double delta,
                                           std::size_t n_pos, std::size_t n_neg, std::uint64_t seed);

/// {0.2, 0.25, ..., 0.85}.
std::vector<double> default_delta_grid();

/// Parity: P = [[0.2,0.8,0],[0.7,0.2,0.1]], Q(d) = [[d,1-d,0],[0.9-d,d,0.1]],
/// negatives [[0.7,0.2,0.1],[0.8,0.2,0]] over the complement.
ShiftFamily parity_shift_family(std::vector<double> delta_grid = default_delta_grid());

/// Modulo-k counterpart: non-accepting rows [d,1-d,0], accepting row
/// [0.9-d,d,0.1], positives never empty.
ShiftFamily modk_shift_family(int k, std::vector<double> delta_grid = default_delta_grid());

/// Parity chain with the given rows (positive, strict, empty strings allowed).
EdgeMarkovChain parity_chain(const std::vector<std::vector<double>>& rows);

// eMC text format:
//   emc v1
//   dfa <path, relative to the emc file>
//   forbid_empty <0|1>
//   <|S| rows of |alphabet|+1 probabilities>
void write_emc(std::ostream& out, const EdgeMarkovChain& emc, const std::string& dfa_path);
EdgeMarkovChain read_emc(std::istream& in, const std::string& base_dir);
EdgeMarkovChain load_emc(const std::string& path);

// Dataset format: one example per line, tab-separated
//   x  y  z (comma-joined state indices)  logp (shortest round-trip form)
void write_dataset(std::ostream& out, const Dfa& dfa, std::span<const LabeledExample> data);
std::vector<LabeledExample> read_dataset(std::istream& in, const Dfa& dfa);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

}  // namespace regshift
