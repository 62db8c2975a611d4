#include "lrp/search_index.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "lrp/errors.hpp"

namespace lrp {

namespace {

bool ranks_before(double da, std::size_t ia, double db, std::size_t ib) {
  return da < db || (da == db && ia < ib);
}

} // namespace

SearchIndex SearchIndex::build(std::vector<IndexedDescriptor> entries, Method method, DistanceKind kind) {
  if (entries.empty()) throw EmptyIndex("cannot build an index without entries");
  const std::size_t nbins = entries.front().descriptor.bins.size();
  const bool normalized = entries.front().descriptor.normalized;
  std::set<std::string> ids;
  for (const auto &e : entries) {
    if (e.descriptor.method != method || e.descriptor.bins.size() != nbins || e.descriptor.bins.size() != lrp::bin_count(method) ||
        e.descriptor.normalized != normalized)
      throw HeterogeneousEntries("entry '" + e.id + "' does not match the index method, length or normalization");
    if (!ids.insert(e.id).second) throw Error("duplicate id '" + e.id + "' in index");
  }
  SearchIndex index;
  index.method_ = method;
  index.kind_ = kind;
  index.normalized_ = normalized;
  index.bins_ = nbins;
  index.entries_ = std::move(entries);
  return index;
}

void SearchIndex::check_query(const LrpDescriptor &query) const {
  if (query.method != method_ || query.bins.size() != bins_ || query.normalized != normalized_)
    throw IncompatibleQuery("query descriptor (" + std::string(to_string(query.method)) +
                            (query.normalized ? ", normalized" : ", counts") + ") does not match index (" +
                            std::string(to_string(method_)) + (normalized_ ? ", normalized" : ", counts") + ")");
}

RetrievalResult SearchIndex::top_k(const LrpDescriptor &query, std::size_t k, const std::string &query_id) const {
  return top_k(query, k, kind_, query_id);
}

RetrievalResult SearchIndex::top_k(const LrpDescriptor &query, std::size_t k, DistanceKind kind,
                                   const std::string &query_id) const {
  if (k == 0) throw Error("k must be at least 1");
  check_query(query);

  const std::size_t n = entries_.size();
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = distance(query.bins, entries_[i].descriptor.bins, kind);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t take = std::min(k, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](std::size_t a, std::size_t b) { return ranks_before(dist[a], a, dist[b], b); });

  RetrievalResult result;
  result.query_id = query_id;
  result.k = k;
  result.ranked.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const auto &e = entries_[order[i]];
    result.ranked.push_back({order[i], e.id, e.label, dist[order[i]]});
  }
  return result;
}

std::string SearchIndex::classify_top1(const LrpDescriptor &query) const {
  check_query(query);
  return nearest(query, kind_, entries_.size()).label;
}

Neighbor SearchIndex::nearest(const LrpDescriptor &query, DistanceKind kind, std::size_t skip) const {
  std::size_t best = entries_.size();
  double best_d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i == skip) continue;
    const double d = distance(query.bins, entries_[i].descriptor.bins, kind);
    if (best == entries_.size() || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  if (best == entries_.size()) throw EmptyIndex("no candidate entries");
  return {best, entries_[best].id, entries_[best].label, best_d};
}

std::vector<Neighbor> SearchIndex::nearest_batch(const std::vector<const LrpDescriptor *> &queries,
                                                 DistanceKind kind) const {
  for (const auto *q : queries) check_query(*q);
  std::vector<Neighbor> out(queries.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(queries.size()); ++i)
    out[static_cast<std::size_t>(i)] = nearest(*queries[static_cast<std::size_t>(i)], kind, entries_.size());
  return out;
}

std::vector<LooPrediction> leave_one_out(const std::vector<IndexedDescriptor> &entries, DistanceKind kind) {
  if (entries.size() < 2) throw TooFewEntries("leave-one-out needs at least two entries");
  const auto method = entries.front().descriptor.method;
  const SearchIndex index = SearchIndex::build(entries, method, kind);

  std::vector<LooPrediction> out(entries.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(entries.size()); ++q) {
    const auto i = static_cast<std::size_t>(q);
    const Neighbor nn = index.nearest(entries[i].descriptor, kind, i);
    out[i] = {entries[i].id, entries[i].label, nn.label, nn.id, nn.distance};
  }
  return out;
}

void SearchIndex::save(const std::filesystem::path &dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream blob(dir / "descriptors.lrp", std::ios::binary | std::ios::trunc);
  std::ofstream manifest(dir / "manifest.tsv", std::ios::trunc);
  if (!blob || !manifest) throw Error("cannot write index to " + dir.string());

  manifest << "# lrp-index method=" << to_string(method_) << " distance=" << to_string(kind_)
           << " normalized=" << (normalized_ ? 1 : 0) << " count=" << entries_.size();
  for (const auto &[key, value] : attributes_) manifest << ' ' << key << '=' << value;
  manifest << '\n';
  std::uint64_t offset = 0;
  for (const auto &e : entries_) {
    manifest << e.id << '\t' << e.label << '\t' << offset << '\n';
    write_descriptor(blob, e.descriptor);
    offset += encoded_size(e.descriptor);
  }
}

SearchIndex SearchIndex::load(const std::filesystem::path &dir) {
  std::ifstream manifest(dir / "manifest.tsv");
  std::ifstream blob(dir / "descriptors.lrp", std::ios::binary);
  if (!manifest || !blob) throw FileNotFound("no index found at " + dir.string());

  Method method = Method::Median;
  DistanceKind kind = DistanceKind::CityBlock;
  std::vector<IndexedDescriptor> entries;
  std::map<std::string, std::string> attributes;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const auto key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "method") method = parse_method(value);
        else if (key == "distance") kind = parse_distance(value);
        else if (key != "normalized" && key != "count") attributes[key] = value;
      }
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) throw FormatError("bad index manifest line: " + line);
    IndexedDescriptor e;
    e.id = line.substr(0, t1);
    e.label = line.substr(t1 + 1, t2 - t1 - 1);
    const auto offset = std::stoull(line.substr(t2 + 1));
    blob.seekg(static_cast<std::streamoff>(offset));
    e.descriptor = read_descriptor(blob);
    entries.push_back(std::move(e));
  }
  SearchIndex index = build(std::move(entries), method, kind);
  index.attributes_ = std::move(attributes);
  return index;
}

} // namespace lrp
