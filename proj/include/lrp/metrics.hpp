#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lrp {

struct LabeledPrediction {
  std::string true_label;
  std::string predicted_label;
};

/// Fraction of queries whose predicted scan equals their true scan.
double patch_to_scan_accuracy(const std::vector<LabeledPrediction> &results);

/// Unweighted mean over scans of correct_s / n_s. The mean runs over every
/// scan in scan_sizes; throws MissingScanSize if a scan seen in results has
/// no positive size.
double whole_scan_accuracy(const std::vector<LabeledPrediction> &results,
                           const std::map<std::string, std::size_t> &scan_sizes);

/// Product of the two accuracies. Throws Error outside [0, 1].
double total_accuracy(double eta_p, double eta_w);

/// Correct fraction over all results (denominator = results.size()).
double ct_accuracy(const std::vector<LabeledPrediction> &results);

/// confusion[true][predicted] = count
using Confusion = std::map<std::string, std::map<std::string, std::size_t>>;
Confusion confusion_counts(const std::vector<LabeledPrediction> &results);

} // namespace lrp
