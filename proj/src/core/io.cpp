#include "obslab/core/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "obslab/core/errors.hpp"

namespace obslab::io {

namespace {

constexpr char kMagic[4] = {'O', 'B', 'S', 'L'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint8_t kFieldPayload = 1;
constexpr std::uint8_t kMaskPayload = 2;

template <class T>
void put(std::ostream& os, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
  auto bits = std::bit_cast<U>(value);
  char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  os.write(buf, sizeof(T));
}

template <class T>
T get(std::istream& is) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) throw std::runtime_error("truncated OBSL stream");
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(buf[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

void write_header(std::ostream& os, const GridSpec& g, std::uint8_t payload) {
  os.write(kMagic, 4);
  put<std::uint16_t>(os, kVersion);
  put<std::uint16_t>(os, static_cast<std::uint16_t>(g.dim()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.n()));
  put<double>(os, g.box_len());
  put<std::uint8_t>(os, g.is_frequency() ? 1 : 0);
  put<std::uint8_t>(os, payload);
}

GridSpec read_header(std::istream& is, std::uint8_t expected) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("not an OBSL stream");
  if (get<std::uint16_t>(is) != kVersion) throw std::runtime_error("unsupported OBSL version");
  const int d = get<std::uint16_t>(is);
  const int n = static_cast<int>(get<std::uint32_t>(is));
  const double box = get<double>(is);
  const auto domain = get<std::uint8_t>(is);
  const auto payload = get<std::uint8_t>(is);
  if (payload != expected) throw std::runtime_error("OBSL payload kind mismatch");
  GridSpec g = GridSpec::make(d, n, box);
  return domain == 1 ? g.as_frequency() : g;
}

}  // namespace

void write_field(std::ostream& os, const Field& f) {
  write_header(os, f.grid(), kFieldPayload);
  for (const auto& v : f.samples()) {
    put<double>(os, v.real());
    put<double>(os, v.imag());
  }
}

void write_mask(std::ostream& os, const Mask& m) {
  write_header(os, m.grid(), kMaskPayload);
  os.write(reinterpret_cast<const char*>(m.bits().data()), static_cast<std::streamsize>(m.size()));
}

Field read_field(std::istream& is) {
  const GridSpec g = read_header(is, kFieldPayload);
  std::vector<cplx> s(g.size());
  for (auto& v : s) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    v = {re, im};
  }
  return Field(g, std::move(s));
}

Mask read_mask(std::istream& is) {
  const GridSpec g = read_header(is, kMaskPayload);
  std::vector<std::uint8_t> bits(g.size());
  if (!is.read(reinterpret_cast<char*>(bits.data()), static_cast<std::streamsize>(bits.size())))
    throw std::runtime_error("truncated OBSL mask payload");
  return Mask(g, std::move(bits));
}

void save(const std::filesystem::path& path, const Field& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_field(os, f);
}

void save(const std::filesystem::path& path, const Mask& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_mask(os, m);
}

Field load_field(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return read_field(is);
}

Mask load_mask(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return read_mask(is);
}

}  // namespace obslab::io
