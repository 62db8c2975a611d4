#include "lrp/evaluation.hpp"

#include <cstdio>
#include <ostream>

#include "lrp/errors.hpp"
#include "lrp/search_index.hpp"

namespace lrp {

EvaluationCell evaluate_cell(const DatasetManifest &manifest, const std::vector<LrpDescriptor> &descriptors,
                             Method method, DistanceKind kind) {
  if (descriptors.size() != manifest.items.size())
    throw LengthMismatch("descriptor list does not match manifest items");

  EvaluationCell cell;
  cell.method = method;
  cell.kind = kind;
  std::vector<LabeledPrediction> predictions;

  if (manifest.kind == DatasetKind::PatchToScan) {
    std::vector<IndexedDescriptor> train;
    std::vector<std::size_t> test;
    for (std::size_t i = 0; i < manifest.items.size(); ++i) {
      const auto &it = manifest.items[i];
      if (it.split == Split::Train) train.push_back({it.path, it.label, descriptors[i]});
      else if (it.split == Split::Test) test.push_back(i);
    }
    if (test.empty()) throw EmptyResults("no test items");
    const SearchIndex index = SearchIndex::build(std::move(train), method, kind);
    std::vector<const LrpDescriptor *> queries;
    for (auto i : test) queries.push_back(&descriptors[i]);
    const auto nearest = index.nearest_batch(queries, kind);
    for (std::size_t q = 0; q < test.size(); ++q) {
      const auto &it = manifest.items[test[q]];
      predictions.push_back({it.label, nearest[q].label});
      cell.trace.push_back({it.path, it.label, nearest[q].label, nearest[q].id, nearest[q].distance});
    }
    cell.eta_p = patch_to_scan_accuracy(predictions);
    cell.eta_w = whole_scan_accuracy(predictions, manifest.label_counts(Split::Test));
    cell.eta_total = total_accuracy(cell.eta_p, cell.eta_w);
  } else {
    std::vector<IndexedDescriptor> entries;
    for (std::size_t i = 0; i < manifest.items.size(); ++i)
      entries.push_back({manifest.items[i].path, manifest.items[i].label, descriptors[i]});
    for (const auto &p : leave_one_out(entries, kind)) {
      predictions.push_back({p.true_label, p.predicted_label});
      cell.trace.push_back({p.id, p.true_label, p.predicted_label, p.neighbor_id, p.distance});
    }
    cell.a_ct = ct_accuracy(predictions);
  }

  cell.queries = predictions.size();
  for (const auto &p : predictions) cell.correct += p.true_label == p.predicted_label;
  cell.confusion = confusion_counts(predictions);
  return cell;
}

void print_table(std::ostream &out, const EvaluationReport &report) {
  char line[160];
  out << "dataset: " << report.dataset << " (" << to_string(report.kind) << ")\n";
  if (report.kind == DatasetKind::PatchToScan) {
    std::snprintf(line, sizeof line, "%-8s %-7s %8s %8s %8s %9s %6s\n", "method", "dist", "eta_p%", "eta_w%",
                  "total%", "correct", "|h|");
    out << line;
    for (const auto &c : report.cells) {
      std::snprintf(line, sizeof line, "%-8s %-7s %8.2f %8.2f %8.2f %4zu/%-4zu %6zu\n",
                    std::string(to_string(c.method)).c_str(), std::string(to_string(c.kind)).c_str(), 100 * c.eta_p,
                    100 * c.eta_w, 100 * c.eta_total, c.correct, c.queries, bin_count(c.method));
      out << line;
    }
  } else {
    std::snprintf(line, sizeof line, "%-8s %-7s %8s %9s %6s\n", "method", "dist", "A%", "correct", "|h|");
    out << line;
    for (const auto &c : report.cells) {
      std::snprintf(line, sizeof line, "%-8s %-7s %8.2f %4zu/%-4zu %6zu\n", std::string(to_string(c.method)).c_str(),
                    std::string(to_string(c.kind)).c_str(), 100 * c.a_ct, c.correct, c.queries, bin_count(c.method));
      out << line;
    }
  }
}

void print_key_values(std::ostream &out, const EvaluationReport &report) {
  char value[64];
  auto kv = [&](const std::string &key, double v) {
    std::snprintf(value, sizeof value, "%.17g", v);
    out << key << '=' << value << '\n';
  };
  out << "dataset=" << report.dataset << '\n' << "kind=" << to_string(report.kind) << '\n';
  for (const auto &c : report.cells) {
    const std::string prefix = std::string(to_string(c.method)) + "." + std::string(to_string(c.kind)) + ".";
    out << prefix << "queries=" << c.queries << '\n' << prefix << "correct=" << c.correct << '\n';
    if (report.kind == DatasetKind::PatchToScan) {
      kv(prefix + "eta_p", c.eta_p);
      kv(prefix + "eta_w", c.eta_w);
      kv(prefix + "eta_total", c.eta_total);
    } else {
      kv(prefix + "a_ct", c.a_ct);
    }
    for (const auto &[truth, row] : c.confusion)
      for (const auto &[pred, n] : row) out << prefix << "confusion." << truth << "." << pred << '=' << n << '\n';
  }
}

void print_trace(std::ostream &out, const EvaluationReport &report) {
  out << "method\tdistance\tquery\ttrue\tpredicted\tneighbor\tneighbor_distance\n";
  char value[64];
  for (const auto &c : report.cells)
    for (const auto &t : c.trace) {
      std::snprintf(value, sizeof value, "%.17g", t.distance);
      out << to_string(c.method) << '\t' << to_string(c.kind) << '\t' << t.query_id << '\t' << t.true_label << '\t'
          << t.predicted_label << '\t' << t.neighbor_id << '\t' << value << '\n';
    }
}

} // namespace lrp
