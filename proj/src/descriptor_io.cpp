#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include "lrp/descriptor.hpp"
#include "lrp/errors.hpp"

static_assert(std::endian::native == std::endian::little, "descriptor I/O assumes a little-endian host");

namespace lrp {

namespace {

constexpr char kMagic[4] = {'L', 'R', 'P', '1'};

template <typename T> void put(std::ostream &out, T value) {
  out.write(reinterpret_cast<const char *>(&value), sizeof(T));
}

template <typename T> T get(std::istream &in) {
  T value{};
  if (!in.read(reinterpret_cast<char *>(&value), sizeof(T)))
    throw FormatError("truncated descriptor record");
  return value;
}

} // namespace

std::size_t encoded_size(const LrpDescriptor &d) { return 4 + 1 + 1 + 4 + 8 * d.bins.size(); }

void write_descriptor(std::ostream &out, const LrpDescriptor &d) {
  out.write(kMagic, 4);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(d.method));
  put<std::uint8_t>(out, d.normalized ? 1 : 0);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(d.bins.size()));
  if (d.normalized) {
    out.write(reinterpret_cast<const char *>(d.bins.data()),
              static_cast<std::streamsize>(d.bins.size() * sizeof(double)));
  } else {
    for (double b : d.bins) put<std::uint64_t>(out, static_cast<std::uint64_t>(b));
  }
  if (!out) throw Error("failed to write descriptor record");
}

LrpDescriptor read_descriptor(std::istream &in) {
  char magic[4];
  if (!in.read(magic, 4)) throw FormatError("truncated descriptor record");
  if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError("bad descriptor magic");

  const auto method = get<std::uint8_t>(in);
  const auto normalized = get<std::uint8_t>(in);
  const auto nbins = get<std::uint32_t>(in);
  if (method > 1) throw FormatError("unknown method byte");
  if (normalized > 1) throw FormatError("bad normalization byte");

  LrpDescriptor d;
  d.method = static_cast<Method>(method);
  d.normalized = normalized == 1;
  if (nbins != bin_count(d.method)) throw FormatError("bin count does not match method");
  d.bins.resize(nbins);
  if (d.normalized) {
    if (!in.read(reinterpret_cast<char *>(d.bins.data()), static_cast<std::streamsize>(nbins * sizeof(double))))
      throw FormatError("truncated descriptor bins");
  } else {
    for (auto &b : d.bins) b = static_cast<double>(get<std::uint64_t>(in));
  }
  return d;
}

} // namespace lrp
