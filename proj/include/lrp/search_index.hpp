#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lrp/descriptor.hpp"
#include "lrp/similarity.hpp"

namespace lrp {

struct IndexedDescriptor {
  std::string id;
  std::string label;
  LrpDescriptor descriptor;
};

struct Neighbor {
  std::size_t position = 0; // insertion index within the index
  std::string id;
  std::string label;
  double distance = 0.0;
};

struct RetrievalResult {
  std::string query_id;
  std::vector<Neighbor> ranked;
  std::size_t k = 0;
};

struct LooPrediction {
  std::string id;
  std::string true_label;
  std::string predicted_label;
  std::string neighbor_id;
  double distance = 0.0;
};

/// Immutable exhaustive-scan index. Ties in distance are broken by
/// insertion order.
class SearchIndex {
public:
  /// Throws EmptyIndex, HeterogeneousEntries, or Error on duplicate ids.
  static SearchIndex build(std::vector<IndexedDescriptor> entries, Method method, DistanceKind kind);

  Method method() const { return method_; }
  DistanceKind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t bin_count() const { return bins_; }
  const std::vector<IndexedDescriptor> &entries() const { return entries_; }

  /// Free-form key/value pairs persisted in the manifest header (no
  /// whitespace or '=' in keys, no whitespace in values).
  std::map<std::string, std::string> &attributes() { return attributes_; }
  const std::map<std::string, std::string> &attributes() const { return attributes_; }

  /// Throws IncompatibleQuery if the query does not match the index layout.
  RetrievalResult top_k(const LrpDescriptor &query, std::size_t k, const std::string &query_id = {}) const;
  /// Same as top_k with an explicit distance kind.
  RetrievalResult top_k(const LrpDescriptor &query, std::size_t k, DistanceKind kind,
                        const std::string &query_id = {}) const;

  std::string classify_top1(const LrpDescriptor &query) const;

  /// Nearest neighbor of each query, evaluated in parallel. Output order
  /// follows input order.
  std::vector<Neighbor> nearest_batch(const std::vector<const LrpDescriptor *> &queries,
                                      DistanceKind kind) const;

  /// Directory layout: manifest.tsv (id, label, byte offset) and
  /// descriptors.lrp holding consecutive descriptor records.
  void save(const std::filesystem::path &dir) const;
  static SearchIndex load(const std::filesystem::path &dir);

private:
  friend std::vector<LooPrediction> leave_one_out(const std::vector<IndexedDescriptor> &entries, DistanceKind kind);

  SearchIndex() = default;
  void check_query(const LrpDescriptor &query) const;
  Neighbor nearest(const LrpDescriptor &query, DistanceKind kind, std::size_t skip) const;

  Method method_ = Method::Median;
  DistanceKind kind_ = DistanceKind::CityBlock;
  bool normalized_ = true;
  std::size_t bins_ = 0;
  std::vector<IndexedDescriptor> entries_;
  std::map<std::string, std::string> attributes_;
};

/// Classifies every entry against all others. Throws TooFewEntries for
/// fewer than two entries.
std::vector<LooPrediction> leave_one_out(const std::vector<IndexedDescriptor> &entries, DistanceKind kind);

} // namespace lrp
