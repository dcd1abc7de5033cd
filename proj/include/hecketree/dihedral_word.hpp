#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hecketree {

enum class Letter : std::uint8_t { s = 0, t = 1 };

constexpr Letter other(Letter r) { return r == Letter::s ? Letter::t : Letter::s; }
constexpr char to_char(Letter r) { return r == Letter::s ? 's' : 't'; }

/// Reduced word in the infinite dihedral group <s, t | s^2 = t^2 = 1>.
///
/// A reduced word alternates between s and t, so it is fully determined by
/// its first letter and its length. Storing exactly that makes every
/// representable value reduced. Words are ordered shortlex (length first,
/// then s before t).
class DihedralWord {
 public:
  DihedralWord() = default;
  DihedralWord(Letter first, std::size_t length);

  static DihedralWord single(Letter r) { return DihedralWord(r, 1); }

  /// Parses a string over {s,t}; "" and "1" denote the identity. Throws
  /// std::invalid_argument on other characters or repeated adjacent letters.
  static DihedralWord parse(std::string_view text);

  /// All reduced words with length <= max_length, in shortlex order.
  static std::vector<DihedralWord> all_up_to(std::size_t max_length);

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  Letter first() const { return first_; }
  Letter last() const { return at(length_ - 1); }
  Letter at(std::size_t i) const {
    return (i % 2 == 0) ? first_ : other(first_);
  }

  /// The first n letters.
  DihedralWord prefix(std::size_t n) const;
  /// The last n letters.
  DihedralWord suffix(std::size_t n) const;

  /// Letters as a plain string ("" for the identity).
  std::string letters() const;

  friend bool operator==(const DihedralWord&, const DihedralWord&) = default;
  friend std::strong_ordering operator<=>(const DihedralWord& a,
                                          const DihedralWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.first_ <=> b.first_;
  }

  friend std::ostream& operator<<(std::ostream& os, const DihedralWord& w) {
    return os << (w.empty() ? std::string("1") : w.letters());
  }

 private:
  Letter first_ = Letter::s;  // normalized to s for the identity
  std::uint32_t length_ = 0;
};

/// Group law: concatenate and cancel equal adjacent letters until reduced.
DihedralWord word_concat(const DihedralWord& a, const DihedralWord& b);

/// Letterwise swap s <-> t.
DihedralWord bar(const DihedralWord& w);

/// Group inverse (reversal).
DihedralWord inverse(const DihedralWord& w);

}  // namespace hecketree
