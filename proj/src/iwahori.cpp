#include "hecketree/iwahori.hpp"

#include <stdexcept>

namespace hecketree {

ExtendedIndex ExtendedIndex::parse(std::string_view text) {
  bool inverted = false;
  if (!text.empty() && text.front() == 'i') {
    inverted = true;
    text.remove_prefix(1);
  }
  return {inverted, DihedralWord::parse(text)};
}

std::string ExtendedIndex::to_string() const {
  if (iflag) return "i" + word.letters();
  return word.empty() ? std::string("1") : word.letters();
}

IwahoriParams::IwahoriParams(int qs, int qt) : qs_(qs), qt_(qt) {
  if (qs < 2 || qt < 2)
    throw std::invalid_argument("edge parameters qs, qt must be >= 2");
}

namespace {

void check_inversion(bool used, const IwahoriParams& p) {
  if (used && !p.admits_inversion())
    throw std::domain_error("the inversion D_i only exists when qs == qt");
}

bool uses_inversion(const IwahoriElement& x) {
  for (const auto& [idx, c] : x)
    if (idx.iflag) return true;
  return false;
}

}  // namespace

Integer q_of_word(const DihedralWord& w, const IwahoriParams& p) {
  Integer out = 1;
  for (std::size_t i = 0; i < w.length(); ++i) out *= p.q(w.at(i));
  return out;
}

Integer r_value(const ExtendedIndex& idx, const IwahoriParams& p) {
  return q_of_word(idx.word, p);
}

IwahoriElement multiply_by_generator(Letter r, const IwahoriElement& x, Side side,
                                     const IwahoriParams& p) {
  check_inversion(uses_inversion(x), p);
  IwahoriElement out;
  for (const auto& [idx, c] : x) {
    const DihedralWord& w = idx.word;
    // D_r D_i = D_i D_{bar r}, so on the left the letter is seen through the flag.
    const Letter eff = (side == Side::left && idx.iflag) ? other(r) : r;
    const DihedralWord g = DihedralWord::single(eff);
    const bool absorbs = !w.empty() && (side == Side::left ? w.first() == eff : w.last() == eff);
    const DihedralWord moved = side == Side::left ? word_concat(g, w) : word_concat(w, g);
    if (absorbs) {
      const int q = p.q(eff);
      out.add_term({idx.iflag, moved}, c * Coefficient(q));
      out.add_term(idx, c * Coefficient(q - 1));
    } else {
      out.add_term({idx.iflag, moved}, c);
    }
  }
  return out;
}

IwahoriElement multiply_by_inversion(const IwahoriElement& x, Side side,
                                     const IwahoriParams& p) {
  check_inversion(true, p);
  IwahoriElement out;
  for (const auto& [idx, c] : x) {
    const DihedralWord w = side == Side::left ? idx.word : bar(idx.word);
    out.add_term({!idx.iflag, w}, c);
  }
  return out;
}

IwahoriElement multiply(const ExtendedIndex& a, const ExtendedIndex& b,
                        const IwahoriParams& p) {
  check_inversion(a.iflag || b.iflag, p);
  IwahoriElement x = IwahoriElement::basis(a);
  if (b.iflag) x = multiply_by_inversion(x, Side::right, p);
  for (std::size_t i = 0; i < b.word.length(); ++i)
    x = multiply_by_generator(b.word.at(i), x, Side::right, p);
  return x;
}

IwahoriElement multiply_closed(const DihedralWord& w, const DihedralWord& w2,
                               const IwahoriParams& p) {
  if (w.empty() || w2.empty() || w.last() != w2.first())
    return IwahoriElement::basis(ExtendedIndex(word_concat(w, w2)));
  const std::size_t m = std::min(w.length(), w2.length());
  IwahoriElement out;
  // Leading term: the full cancellation w_[m] * _[m]w'.
  const DihedralWord head = w.prefix(w.length() - m);
  const DihedralWord tail = w2.suffix(w2.length() - m);
  out.add_term(ExtendedIndex(word_concat(head, tail)), Coefficient(q_of_word(w.suffix(m), p)));
  for (std::size_t i = 0; i < m; ++i) {
    const Letter si = w2.at(i);
    const DihedralWord left = w.prefix(w.length() - i);
    const DihedralWord right = w2.suffix(w2.length() - i);
    const DihedralWord u = word_concat(word_concat(left, DihedralWord::single(si)), right);
    out.add_term(ExtendedIndex(u),
                 Coefficient(q_of_word(w.suffix(i), p) * (p.q(si) - 1)));
  }
  return out;
}

IwahoriElement multiply_closed(const ExtendedIndex& a, const ExtendedIndex& b,
                               const IwahoriParams& p) {
  check_inversion(a.iflag || b.iflag, p);
  const DihedralWord left = b.iflag ? bar(a.word) : a.word;
  const bool flag = a.iflag != b.iflag;
  IwahoriElement out;
  for (const auto& [idx, c] : multiply_closed(left, b.word, p))
    out.add_term({flag, idx.word}, c);
  return out;
}

ExtendedIndex involute(const ExtendedIndex& idx) {
  const DihedralWord inv = inverse(idx.word);
  return {idx.iflag, idx.iflag ? bar(inv) : inv};
}

std::vector<ExtendedIndex> iwahori_indices(std::size_t max_length, bool include_inverted) {
  std::vector<ExtendedIndex> out;
  const auto words = DihedralWord::all_up_to(max_length);
  for (const auto& w : words) out.emplace_back(false, w);
  if (include_inverted)
    for (const auto& w : words) out.emplace_back(true, w);
  return out;
}

}  // namespace hecketree
