#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace regshift {

struct CalibrationBin {
  std::size_t count = 0;
  double mean_confidence = 0.0;
  double mean_accuracy = 0.0;
};

struct CalibrationReport {
  double brier = 0.0;
  double ece = 0.0;
  int n_bins = 0;
  std::vector<CalibrationBin> bins;
};

enum class EceBinning {
  psi,             ///< bins over P(y=1); confidence is psi, accuracy the positive rate
  max_confidence,  ///< bins over max(psi, 1-psi); accuracy of the thresholded prediction
};

/// Mean of (psi_i - y_i)^2. Throws InvalidInput on empty or mismatched input.
double brier(std::span<const double> psi, std::span<const int> y);

/// Bins are ((m-1)/M, m/M] with 0 assigned to the first bin. Brier is filled in too.
CalibrationReport ece(std::span<const double> psi, std::span<const int> y, int n_bins = 10,
                      EceBinning binning = EceBinning::psi);

double accuracy(std::span<const int> predictions, std::span<const int> y);

}  // namespace regshift
