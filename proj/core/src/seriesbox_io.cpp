#include "diagonalis/box_cache.hpp"
#include "diagonalis/json_io.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace diagonalis {

namespace {

constexpr std::string_view kMagic = "diagonalis-box v1";

std::string coeff_text(const Rational& q) { return to_string(q); }
std::string coeff_text(const UniPoly& p) { return ring_to_json(p).dump(); }

void parse_coeff(const std::string& s, Rational& out) { out = parse_rational(s); }
void parse_coeff(const std::string& s, UniPoly& out) { ring_from_json(json::parse(s), out); }

template <CoefficientRing R>
std::string header_line(const MultiPoly<R>& p, unsigned bound) {
  std::ostringstream h;
  h << kMagic << "; d=" << p.dim() << "; N=" << bound << "; ring=" << RingTraits<R>::tag
    << "; denom=" << multipoly_to_json(p).dump();
  return h.str();
}

struct Header {
  std::size_t dim = 0;
  unsigned bound = 0;
  std::string ring;
  json denom;
};

Header parse_header(const std::string& line) {
  if (line.rfind(kMagic, 0) != 0) throw std::invalid_argument("not a diagonalis box cache (bad magic)");
  Header h;
  auto field = [&](std::string_view key) -> std::string {
    std::string needle = "; " + std::string(key) + "=";
    auto pos = line.find(needle);
    if (pos == std::string::npos) throw std::invalid_argument("box cache header lacks '" + std::string(key) + "'");
    pos += needle.size();
    if (key == "denom") return line.substr(pos);
    return line.substr(pos, line.find(';', pos) - pos);
  };
  h.dim = std::stoul(field("d"));
  h.bound = static_cast<unsigned>(std::stoul(field("N")));
  h.ring = field("ring");
  h.denom = json::parse(field("denom"));
  return h;
}

}  // namespace

template <CoefficientRing R>
void write_box_cache(std::ostream& out, const CoeffBox<R>& box) {
  out << header_line(box.denominator(), box.bound()) << '\n';
  for (unsigned t = 0; t < box.filled_layers(); ++t)
    for (const auto& n : box.layer(t)) {
      for (std::size_t j = 0; j < n.dim(); ++j) out << (j ? "," : "") << n[j];
      out << ':' << coeff_text(box.stored_value(n)) << '\n';
    }
}

template <CoefficientRing R>
CoeffBox<R> read_box_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty box cache");
  Header h = parse_header(line);
  if (h.ring != RingTraits<R>::tag)
    throw std::invalid_argument("box cache ring is " + h.ring + ", expected " + RingTraits<R>::tag);
  auto p = multipoly_from_json<R>(h.denom);
  if (p.dim() != h.dim) throw std::invalid_argument("box cache header: d disagrees with denominator");

  std::vector<std::pair<ExponentVector, R>> entries;
  bool all_sorted = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed box cache line: " + line);
    ExponentVector n;
    std::istringstream idx(line.substr(0, colon));
    std::string part;
    while (std::getline(idx, part, ',')) n.e.push_back(static_cast<unsigned>(std::stoul(part)));
    if (n.dim() != h.dim) throw std::invalid_argument("box cache index has wrong dimension: " + line);
    all_sorted = all_sorted && std::is_sorted(n.e.begin(), n.e.end());
    R v;
    parse_coeff(line.substr(colon + 1), v);
    entries.emplace_back(std::move(n), std::move(v));
  }
  const auto full = box_entry_count(h.dim, h.bound, BoxStorage::full);
  BoxStorage storage = BoxStorage::full;
  if (entries.size() != full && all_sorted &&
      entries.size() == box_entry_count(h.dim, h.bound, BoxStorage::symmetric))
    storage = BoxStorage::symmetric;
  return make_box_from_entries(std::move(p), h.bound, storage, std::move(entries));
}

std::string peek_box_cache_ring(std::istream& in) {
  auto pos = in.tellg();
  std::string line;
  std::getline(in, line);
  in.clear();
  in.seekg(pos);
  return parse_header(line).ring;
}

template <CoefficientRing R>
std::string box_cache_filename(const MultiPoly<R>& p, unsigned bound) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : header_line(p, bound)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream name;
  name << "box-" << std::hex << h << ".txt";
  return name.str();
}

template void write_box_cache(std::ostream&, const CoeffBox<Rational>&);
template void write_box_cache(std::ostream&, const CoeffBox<UniPoly>&);
template CoeffBox<Rational> read_box_cache(std::istream&);
template CoeffBox<UniPoly> read_box_cache(std::istream&);
template std::string box_cache_filename(const MultiPoly<Rational>&, unsigned);
template std::string box_cache_filename(const MultiPoly<UniPoly>&, unsigned);

}  // namespace diagonalis
