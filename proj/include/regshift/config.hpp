#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regshift/markov.hpp"
#include "regshift/metrics.hpp"
#include "regshift/neural.hpp"
#include "regshift/shift.hpp"

namespace regshift {

/// Flat `key = value` text with `#` comments. Throws ConfigurationError
/// naming the path when the file cannot be read, FormatError naming the line
/// on malformed input.
std::map<std::string, std::string> parse_key_values(const std::string& text, const std::string& origin = "<text>");
std::map<std::string, std::string> load_key_values(const std::string& path);

struct DatasetSizes {
  std::size_t train_pos = 1600, train_neg = 1600;
  std::size_t dev_pos = 200, dev_neg = 200;
  std::size_t test_pos = 2000, test_neg = 2000;
};

struct ExperimentConfig {
  std::string language = "parity";  ///< "parity" or "mod-<k>"
  std::vector<double> delta_grid = default_delta_grid();
  DatasetSizes sizes;
  ModelConfig model;
  TrainSchedule schedule;
  int n_repeats = 10;
  std::size_t n_estimator = 10000;
  std::uint64_t seed = 0;
  std::string out_dir = "results";
  int jobs = 0;  ///< 0: all available threads
  int ece_bins = 10;
  EceBinning ece_binning = EceBinning::psi;
  CompEstimator comp_estimator = CompEstimator::aggregated;
  std::vector<int> modulo_ks = {3, 4, 5};
  double table_delta = 0.85;
  double sweep_delta = 0.85;
  std::vector<std::size_t> sample_sizes = {400, 800, 1200, 1600, 2000, 2400, 2800, 3200, 3600, 4000};
  std::vector<double> calibration_deltas = {0.2, 0.4, 0.6, 0.8};

  /// Throws ConfigurationError on an unusable combination.
  void validate() const;
  /// Every key with its resolved value, in key order.
  std::map<std::string, std::string> to_map() const;
};

/// Applies keys on top of `base`; unknown keys and bad values throw ConfigurationError.
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path);

/// `key = value` lines in key order; the hashing input.
std::string canonical_text(const std::map<std::string, std::string>& kv);
/// Git blob id (sha1 over "blob <len>\0<content>") as lower-case hex.
std::string git_blob_hash(const std::string& content);
/// Hash of the canonical text, independent of the order keys appeared in a file.
std::string config_hash(const ExperimentConfig& config);

/// Family named by the language key; throws ConfigurationError otherwise.
ShiftFamily make_family(const std::string& language, const std::vector<double>& delta_grid = default_delta_grid());

}  // namespace regshift
