#include "lrp/metrics.hpp"

#include "lrp/errors.hpp"

namespace lrp {

double patch_to_scan_accuracy(const std::vector<LabeledPrediction> &results) {
  if (results.empty()) throw EmptyResults("patch-to-scan accuracy over an empty result list");
  std::size_t correct = 0;
  for (const auto &r : results) correct += r.true_label == r.predicted_label;
  return static_cast<double>(correct) / static_cast<double>(results.size());
}

double whole_scan_accuracy(const std::vector<LabeledPrediction> &results,
                           const std::map<std::string, std::size_t> &scan_sizes) {
  if (results.empty()) throw EmptyResults("whole-scan accuracy over an empty result list");
  std::map<std::string, std::size_t> correct;
  for (const auto &r : results) {
    auto it = scan_sizes.find(r.true_label);
    if (it == scan_sizes.end() || it->second == 0) throw MissingScanSize("no size for scan '" + r.true_label + "'");
    if (r.true_label == r.predicted_label) ++correct[r.true_label];
  }
  double sum = 0.0;
  for (const auto &[scan, size] : scan_sizes) {
    if (size == 0) throw MissingScanSize("scan '" + scan + "' has size 0");
    auto it = correct.find(scan);
    if (it != correct.end()) sum += static_cast<double>(it->second) / static_cast<double>(size);
  }
  return sum / static_cast<double>(scan_sizes.size());
}

double total_accuracy(double eta_p, double eta_w) {
  if (!(eta_p >= 0.0 && eta_p <= 1.0 && eta_w >= 0.0 && eta_w <= 1.0))
    throw Error("accuracies must lie in [0, 1]");
  return eta_p * eta_w;
}

double ct_accuracy(const std::vector<LabeledPrediction> &results) {
  if (results.empty()) throw EmptyResults("accuracy over an empty result list");
  std::size_t correct = 0;
  for (const auto &r : results) correct += r.true_label == r.predicted_label;
  return static_cast<double>(correct) / static_cast<double>(results.size());
}

Confusion confusion_counts(const std::vector<LabeledPrediction> &results) {
  Confusion c;
  for (const auto &r : results) ++c[r.true_label][r.predicted_label];
  return c;
}

} // namespace lrp
