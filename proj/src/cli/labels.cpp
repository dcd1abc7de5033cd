#include <charconv>
#include <stdexcept>
#include <string>

#include "hecketree/cli.hpp"

namespace hecketree::cli {

namespace {

unsigned parse_unsigned(std::string_view digits, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed basis label '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::spherical: return "spherical";
    case Family::iwahori: return "iwahori";
    case Family::affine: return "affine";
    case Family::sl2: return "sl2";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "spherical") return Family::spherical;
  if (name == "iwahori") return Family::iwahori;
  if (name == "affine" || name == "affine-end") return Family::affine;
  if (name == "sl2") return Family::sl2;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string spherical_label(SphericalIndex idx, const SphericalParams& p) {
  return "G" + std::to_string(idx.n * static_cast<unsigned>(p.step()));
}

SphericalIndex parse_spherical_label(std::string_view text, const SphericalParams& p) {
  if (text.empty() || text.front() != 'G')
    throw std::invalid_argument("spherical label must look like G<n>, got '" +
                                std::string(text) + "'");
  const unsigned d = parse_unsigned(text.substr(1), text);
  if (d % static_cast<unsigned>(p.step()) != 0)
    throw std::invalid_argument("two-orbit basis only has even distances, got '" +
                                std::string(text) + "'");
  return {d / static_cast<unsigned>(p.step())};
}

std::string m_label(MBasisIndex idx) { return "M" + std::to_string(idx.n); }

MBasisIndex parse_m_label(std::string_view text) {
  if (text.empty() || text.front() != 'M')
    throw std::invalid_argument("end label must look like M<n>, got '" + std::string(text) + "'");
  return {parse_unsigned(text.substr(1), text)};
}

std::string coset_label(const CosetIndex& idx) { return idx.representative.to_string(); }

CosetIndex parse_coset_label(std::string_view text, long p) {
  return coset_of(PruferElement::parse(text, p));
}

std::string csv_terms(const OutputRecord& r) {
  std::string out;
  for (const auto& [label, c] : r.value) {
    if (!out.empty()) out += ' ';
    out += label + ":" + c;
  }
  return out;
}

}  // namespace hecketree::cli
