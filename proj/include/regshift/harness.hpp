#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regshift/config.hpp"

namespace regshift {

/// Rows of already-formatted cells under a fixed header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::size_t column(const std::string& name) const;  ///< throws InvalidInput when absent
  std::vector<double> numeric_column(const std::string& name) const;
  void write_csv(std::ostream& out) const;
  /// Array of objects; cells that parse as numbers become JSON numbers.
  nlohmann::json to_json() const;
};

enum class OutputFormat { csv, json };
OutputFormat parse_format(const std::string& text);

struct ExperimentOutput {
  std::string name;
  std::vector<std::pair<std::string, Table>> tables;  ///< (file stem, table)
  nlohmann::json manifest;

  const Table& table(const std::string& stem) const;
};

struct RunOptions {
  bool write = true;  ///< write tables and manifest under config.out_dir
  OutputFormat format = OutputFormat::csv;
  std::ostream* log = nullptr;  ///< progress lines; nullptr is silent
};

/// The asymmetry chains over the parity DFA: P1 (the base chain), P2 and Q.
struct AsymmetryChains {
  EdgeMarkovChain p1, p2, q;
};
AsymmetryChains asymmetry_chains();

/// A trained model with the measurements taken right after training.
struct TrainedModel {
  RecurrentClassifier model;
  TrainReport report;
  std::string key;
  int repeat = 0;
  std::uint64_t train_seed = 0;
  double train_accuracy = 0.0;
  double id_accuracy = 0.0;
  double state_step_accuracy = 1.0;   ///< SSAS models only
  double state_final_accuracy = 1.0;  ///< SSAS models only
  double wall_seconds = 0.0;
  bool from_cache = false;
};

/// Trains (or loads from `<out_dir>/cache/models`) the model for one
/// (language, positive chain, cell, aux mode, training size, repeat).
/// Training data depend only on (base seed, repeat), so models are shared
/// by every experiment and every delta that uses the same arm.
TrainedModel obtain_model(const ExperimentConfig& config, const std::string& chain_name, CellKind cell, AuxMode aux,
                          std::size_t n_pos, std::size_t n_neg, int repeat, std::ostream* log = nullptr);

/// Seeds: training data for repeat r come from derive_seed(seed, {1, r});
/// an o.o.d. test set at delta from derive_seed(seed, {3, round(delta*1e6), r}).
std::uint64_t training_seed(std::uint64_t base_seed, int repeat);
std::uint64_t test_seed(std::uint64_t base_seed, std::uint64_t chain_tag, int repeat);
std::uint64_t delta_tag(double delta);

ExperimentOutput run_shift_sweep(const ExperimentConfig& config, const RunOptions& options = {});
ExperimentOutput run_modulo_table(const ExperimentConfig& config, const RunOptions& options = {});
ExperimentOutput run_sample_size_sweep(const ExperimentConfig& config, const RunOptions& options = {});
ExperimentOutput run_cell_comparison(const ExperimentConfig& config, const RunOptions& options = {});
ExperimentOutput run_asymmetry(const ExperimentConfig& config, const RunOptions& options = {});
ExperimentOutput run_calibration(const ExperimentConfig& config, const RunOptions& options = {});

/// shift-sweep, modulo-table, sample-size, cell-comparison, asymmetry, calibration.
const std::vector<std::string>& experiment_names();
/// Throws InvalidParameter for an unknown name.
ExperimentOutput run_experiment(const std::string& name, const ExperimentConfig& config,
                                const RunOptions& options = {});

/// Writes every table as <stem>.csv or <stem>.json plus <name>_manifest.json.
void write_output(const ExperimentOutput& output, const std::string& out_dir, OutputFormat format);

}  // namespace regshift
