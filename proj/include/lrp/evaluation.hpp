#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrp/dataset.hpp"
#include "lrp/descriptor.hpp"
#include "lrp/metrics.hpp"
#include "lrp/similarity.hpp"

namespace lrp {

struct TraceRow {
  std::string query_id;
  std::string true_label;
  std::string predicted_label;
  std::string neighbor_id;
  double distance = 0.0;
};

/// Accuracy of one (method, distance) pair over a dataset.
struct EvaluationCell {
  Method method = Method::Median;
  DistanceKind kind = DistanceKind::CityBlock;
  std::size_t queries = 0;
  std::size_t correct = 0;
  // PatchToScan
  double eta_p = 0.0;
  double eta_w = 0.0;
  double eta_total = 0.0;
  // LeaveOneOut
  double a_ct = 0.0;
  Confusion confusion;
  std::vector<TraceRow> trace;
};

struct EvaluationReport {
  std::string dataset;
  DatasetKind kind = DatasetKind::LeaveOneOut;
  std::vector<EvaluationCell> cells;
};

/// Runs top-1 retrieval for one cell. `descriptors` is aligned with
/// `manifest.items` and must all use `method`.
///
/// PatchToScan: test items query the train items; the whole-scan mean runs
/// over the labels of the test split. LeaveOneOut: every item queries all
/// others.
EvaluationCell evaluate_cell(const DatasetManifest &manifest, const std::vector<LrpDescriptor> &descriptors,
                             Method method, DistanceKind kind);

/// Fixed-width table, one row per cell.
void print_table(std::ostream &out, const EvaluationReport &report);

/// key=value lines, e.g. "median.l1.eta_p=0.753962". Values use 17
/// significant digits.
void print_key_values(std::ostream &out, const EvaluationReport &report);

/// Tab-separated per-query trace for all cells.
void print_trace(std::ostream &out, const EvaluationReport &report);

} // namespace lrp
