#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecketree/affine_end.hpp"
#include "hecketree/iwahori.hpp"
#include "hecketree/ktheory.hpp"
#include "hecketree/sl2_nu.hpp"
#include "hecketree/spherical.hpp"

namespace hecketree::cli {

enum class Family { spherical, iwahori, affine, sl2 };

std::string family_name(Family f);
/// Accepts "spherical", "iwahori", "affine" (or "affine-end") and "sl2".
Family parse_family(std::string_view name);

// Basis labels. Spherical labels show tree distance ("G4" is Gamma_4, which
// is index 2 in two-orbit mode); edge labels are words with an optional
// leading i and "1" for the identity; end labels are "M<n>"; SL2 labels are
// orbit representatives "a/p^n" or "0".
std::string spherical_label(SphericalIndex idx, const SphericalParams& p);
SphericalIndex parse_spherical_label(std::string_view text, const SphericalParams& p);
std::string m_label(MBasisIndex idx);
MBasisIndex parse_m_label(std::string_view text);
std::string coset_label(const CosetIndex& idx);
CosetIndex parse_coset_label(std::string_view text, long p);

/// One product: key = (left label, right label), value = (label, "num/den").
struct OutputRecord {
  Family family;
  std::string left;
  std::string right;
  std::vector<std::pair<std::string, std::string>> value;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

template <typename Index, typename LabelFn>
OutputRecord make_record(Family f, std::string left, std::string right,
                         const HeckeElement<Index>& x, LabelFn label) {
  OutputRecord r{f, std::move(left), std::move(right), {}};
  for (const auto& [idx, c] : x) r.value.emplace_back(label(idx), c.to_string());
  return r;
}

/// "label:num/den" items separated by single spaces.
std::string csv_terms(const OutputRecord& r);

/// Parses the JSON Bratteli format {"levels": [[n...]...], "maps": [[[b...]...]...]}.
/// Throws std::invalid_argument on malformed input.
BratteliDiagram parse_bratteli_json(std::string_view text);
std::string bratteli_to_json(const BratteliDiagram& d);

/// A Bratteli file may also carry "alpha" (and optionally "inclusion")
/// matrices for the crossed-product step.
struct KtheoryInput {
  BratteliDiagram diagram;
  std::optional<IntegerMatrix> alpha;
  std::optional<IntegerMatrix> inclusion;
};
KtheoryInput parse_ktheory_json(std::string_view text);

/// Entry point shared by the executable and the tests. Returns the exit
/// code: 0 success, 1 verification mismatch, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for verification: hardware concurrency capped by
/// HECKETREE_THREADS when set; always at least 1.
unsigned worker_count();

}  // namespace hecketree::cli
