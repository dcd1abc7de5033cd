#include "hecketree/dihedral_word.hpp"

#include <stdexcept>

namespace hecketree {

DihedralWord::DihedralWord(Letter first, std::size_t length)
    : first_(length == 0 ? Letter::s : first),
      length_(static_cast<std::uint32_t>(length)) {}

DihedralWord DihedralWord::parse(std::string_view text) {
  if (text.empty() || text == "1") return {};
  auto letter_of = [&](char c) {
    if (c == 's') return Letter::s;
    if (c == 't') return Letter::t;
    throw std::invalid_argument("invalid letter '" + std::string(1, c) +
                                "' in dihedral word '" + std::string(text) + "'");
  };
  Letter first = letter_of(text.front());
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (letter_of(text[i]) == letter_of(text[i - 1]))
      throw std::invalid_argument("dihedral word '" + std::string(text) +
                                  "' is not reduced");
  }
  return DihedralWord(first, text.size());
}

std::vector<DihedralWord> DihedralWord::all_up_to(std::size_t max_length) {
  std::vector<DihedralWord> out{DihedralWord{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    out.emplace_back(Letter::s, len);
    out.emplace_back(Letter::t, len);
  }
  return out;
}

DihedralWord DihedralWord::prefix(std::size_t n) const {
  if (n > length_) throw std::out_of_range("prefix longer than word");
  return DihedralWord(first_, n);
}

DihedralWord DihedralWord::suffix(std::size_t n) const {
  if (n > length_) throw std::out_of_range("suffix longer than word");
  if (n == 0) return {};
  return DihedralWord(at(length_ - n), n);
}

std::string DihedralWord::letters() const {
  std::string out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) out.push_back(to_char(at(i)));
  return out;
}

DihedralWord word_concat(const DihedralWord& a, const DihedralWord& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.last() != b.first()) return DihedralWord(a.first(), a.length() + b.length());
  // Each cancellation exposes another equal pair, so min(|a|,|b|) pairs go.
  if (a.length() > b.length()) return a.prefix(a.length() - b.length());
  if (b.length() > a.length()) return b.suffix(b.length() - a.length());
  return {};
}

DihedralWord bar(const DihedralWord& w) {
  return DihedralWord(other(w.first()), w.length());
}

DihedralWord inverse(const DihedralWord& w) {
  if (w.empty()) return w;
  return DihedralWord(w.last(), w.length());
}

}  // namespace hecketree
