#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "regshift/markov.hpp"

namespace regshift {

enum class CellKind { rnn, lstm, gru };
enum class AuxMode { none, ssas, count };

std::string to_string(CellKind cell);
std::string to_string(AuxMode mode);
CellKind parse_cell(std::string_view text);
AuxMode parse_aux(std::string_view text);

struct ModelConfig {
  CellKind cell = CellKind::lstm;
  int vocab_size = 2;
  int embed_dim = 50;
  int hidden_dim = 50;
  int n_states = 0;          ///< state-head classes; 0 disables the head
  int n_count_classes = 10;  ///< count-head classes; 0 disables the head
  AuxMode aux = AuxMode::none;
  double main_weight = 1.0;
  double aux_weight = 1.0;

  int gates() const { return cell == CellKind::lstm ? 4 : cell == CellKind::gru ? 3 : 1; }
  /// Throws InvalidParameter when a dimension or aux requirement is violated.
  void validate() const;
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Named parameter tensors. Vectors are stored as single-column matrices so
/// every tensor can be visited uniformly. Gate blocks are stacked along rows
/// in the order (i, f, g, o) for LSTM and (r, z, n) for GRU.
struct Parameters {
  Eigen::MatrixXd embedding;  ///< vocab x embed
  Eigen::MatrixXd w_input;    ///< gates*hidden x embed
  Eigen::MatrixXd w_hidden;   ///< gates*hidden x hidden
  Eigen::MatrixXd b_input;    ///< gates*hidden x 1
  Eigen::MatrixXd b_hidden;   ///< gates*hidden x 1
  Eigen::MatrixXd w_label;    ///< 1 x hidden
  Eigen::MatrixXd b_label;    ///< 1 x 1
  Eigen::MatrixXd w_state;    ///< n_states x hidden (empty when disabled)
  Eigen::MatrixXd b_state;
  Eigen::MatrixXd w_count;    ///< n_count_classes x hidden (empty when disabled)
  Eigen::MatrixXd b_count;

  static Parameters zeros(const ModelConfig& config);

  template <typename F>
  void for_each(F&& f) {
    f("embedding", embedding);
    f("w_input", w_input);
    f("w_hidden", w_hidden);
    f("b_input", b_input);
    f("b_hidden", b_hidden);
    f("w_label", w_label);
    f("b_label", b_label);
    f("w_state", w_state);
    f("b_state", b_state);
    f("w_count", w_count);
    f("b_count", b_count);
  }
  template <typename F>
  void for_each(F&& f) const {
    const_cast<Parameters*>(this)->for_each(
        [&](const char* name, Eigen::MatrixXd& m) { f(name, static_cast<const Eigen::MatrixXd&>(m)); });
  }

  std::size_t size() const;
  bool all_finite() const;
  double squared_norm() const;
  void set_zero();
  Parameters& operator+=(const Parameters& other);
  Parameters& operator*=(double s);
  friend bool operator==(const Parameters& a, const Parameters& b);
};

struct RecurrentClassifier {
  ModelConfig config;
  Parameters params;
};

/// Embedding entries standard normal; other weights uniform in
/// [-1/sqrt(hidden), 1/sqrt(hidden)]; biases zero; LSTM forget-gate input bias 1.
RecurrentClassifier init_model(const ModelConfig& config, std::uint64_t seed);

/// Copy of the model with the state and count heads removed.
RecurrentClassifier strip_auxiliary_heads(const RecurrentClassifier& model);

struct ForwardResult {
  double p_label = 0.5;
  double label_logit = 0.0;
  Eigen::MatrixXd state_logits;  ///< n_states x T; column t predicts the state after symbol t
  Eigen::VectorXd count_logits;  ///< from the last hidden state
  Eigen::MatrixXd hiddens;       ///< hidden x T
};

/// Full forward pass from a zero initial state. Throws InvalidInput on an
/// empty sequence or out-of-range symbol.
ForwardResult forward(const RecurrentClassifier& model, std::span<const int> x);

/// Label probability only; never touches the auxiliary heads.
double predict_proba(const RecurrentClassifier& model, std::span<const int> x);

/// Zero-count class: min(#symbol-0, n_classes - 1).
int count_class(std::span<const int> x, int n_classes = 10);
/// Text form; throws InvalidInput (unsupported alphabet) on anything but '0'/'1'.
int count_class(std::string_view x, int n_classes = 10);

struct LossParts {
  double total = 0.0;
  double main = 0.0;  ///< binary cross-entropy of the label head
  double aux = 0.0;   ///< mean state cross-entropy or count cross-entropy
};

/// Loss and full BPTT gradients. With AuxMode::ssas the state head at step t
/// is trained against z[t+1] for t = 1..T (the state reached after symbol t).
LossParts loss_and_gradients(const RecurrentClassifier& model, const LabeledExample& example,
                             Parameters& grads);
/// Loss only.
LossParts compute_loss(const RecurrentClassifier& model, const LabeledExample& example);

struct EpochStats {
  double mean_loss = 0.0;
  double accuracy = 0.0;  ///< running accuracy of pre-update predictions
  std::size_t updates = 0;
};

struct SgdOptions {
  double lr = 0.01;
  int batch_size = 1;
  double clip_norm = 5.0;  ///< global gradient-norm clip; <= 0 disables
};

/// One pass of plain SGD over a seeded shuffle. Per-example gradients of a
/// batch are computed in parallel and summed in example order, so the
/// result equals sgd_epoch_serial bit for bit. Throws NumericalError on a
/// non-finite loss, naming the dataset index.
EpochStats sgd_epoch(RecurrentClassifier& model, std::span<const LabeledExample> data,
                     const SgdOptions& options, std::uint64_t seed);
EpochStats sgd_epoch_serial(RecurrentClassifier& model, std::span<const LabeledExample> data,
                            const SgdOptions& options, std::uint64_t seed);

struct TrainSchedule {
  SgdOptions sgd;
  int max_epochs = 30;
  int patience = 3;  ///< stop after this many consecutive epochs at dev accuracy 1
  std::uint64_t seed = 0;
};

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  double dev_accuracy = 0.0;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  int stopping_epoch = 0;
  std::uint64_t seed = 0;
};

TrainReport train(RecurrentClassifier& model, std::span<const LabeledExample> train_set,
                  std::span<const LabeledExample> dev_set, const TrainSchedule& schedule);

struct Evaluation {
  double accuracy = 0.0;
  std::vector<double> psi;  ///< P(y = 1) per example
};

/// Accuracy at threshold 0.5 (p = 0.5 predicts 0). Throws InvalidInput on
/// an empty dataset. OpenMP-parallel over examples.
Evaluation evaluate(const RecurrentClassifier& model, std::span<const LabeledExample> data);
Evaluation evaluate_serial(const RecurrentClassifier& model, std::span<const LabeledExample> data);

inline int predict_label(double p) { return p > 0.5 ? 1 : 0; }

/// Fraction of supervised state-head positions predicted correctly, and of
/// final-state predictions (the last position) predicted correctly.
struct StateHeadAccuracy {
  double per_step = 0.0;
  double final_state = 0.0;
  std::size_t positions = 0;
};
StateHeadAccuracy state_head_accuracy(const RecurrentClassifier& model,
                                      std::span<const LabeledExample> data);

// Checkpoint format:
//   rcmodel v1
//   config cell=<c> vocab=<v> embed=<e> hidden=<h> states=<s> count=<k> aux=<a> main_weight=<w> aux_weight=<w>
//   then per tensor: "<name> <rows> <cols>" followed by <rows> lines of row-major values (shortest round-trip form)
void write_checkpoint(std::ostream& out, const RecurrentClassifier& model);
RecurrentClassifier read_checkpoint(std::istream& in);
void save_checkpoint(const std::string& path, const RecurrentClassifier& model);
RecurrentClassifier load_checkpoint(const std::string& path);

}  // namespace regshift
