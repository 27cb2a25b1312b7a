#pragma once

// Rational tangles carried algebraically by their Conway fraction and a
// continued-fraction word, and untangle surgery on slotted presentations.
// The fraction is a complete invariant of a rational tangle, so equality
// compares fractions; the word is the carried presentation.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

class RationalTangle {
public:
  // Tangle with the given fraction and its canonical word; the infinite
  // fraction yields the 1/0-untangle with word [0,0].
  explicit RationalTangle(const ExtendedRational& fraction)
      : fraction_(fraction),
        word_(fraction.is_infinite() ? ContinuedFraction{{0, 0}} : cf_expand(fraction)) {}

  RationalTangle(ExtendedRational fraction, ContinuedFraction word)
      : fraction_(std::move(fraction)), word_(std::move(word)) {
    if (cf_value(word_) != fraction_)
      throw std::invalid_argument("tangle word does not evaluate to its fraction");
  }

  const ExtendedRational& fraction() const { return fraction_; }
  const ContinuedFraction& word() const { return word_; }

  // The 1/0-untangle.
  bool is_untangle() const { return fraction_.is_infinite(); }

  bool operator==(const RationalTangle& o) const { return fraction_ == o.fraction_; }

private:
  ExtendedRational fraction_;
  ContinuedFraction word_;
};

inline RationalTangle tangle_from_fraction(const ExtendedRational& r) {
  return RationalTangle(r);
}

// Mirror negates the Conway fraction; the 1/0-untangle is fixed.
inline RationalTangle mirror(const RationalTangle& t) {
  ContinuedFraction w = t.word();
  for (Int& a : w.terms) a = -a;
  return RationalTangle(-t.fraction(), std::move(w));
}

// Cyclic list of tangle slots with a subset marked as surgery sites.  Every
// marked slot holds the 1/0-untangle until it is surgered.
class SlottedPresentation {
public:
  SlottedPresentation(std::vector<RationalTangle> slots, const std::vector<std::size_t>& marks)
      : slots_(std::move(slots)), marked_(slots_.size(), false) {
    if (slots_.empty()) throw std::invalid_argument("a presentation needs at least one slot");
    for (std::size_t m : marks) {
      if (m >= slots_.size()) throw std::invalid_argument("mark out of range");
      if (!slots_[m].is_untangle())
        throw std::invalid_argument("marked slots must hold the 1/0-untangle");
      marked_[m] = true;
    }
  }

  // Comma-separated fractions, '*' marking surgery sites: "inf*,inf*,3/1".
  static SlottedPresentation parse(std::string_view text) {
    detail::Cursor c(text);
    std::vector<RationalTangle> slots;
    std::vector<std::size_t> marks;
    for (;;) {
      ExtendedRational r = detail::parse_rational(c);
      c.skip_ws();
      if (c.try_eat('*')) marks.push_back(slots.size());
      slots.push_back(tangle_from_fraction(r));
      c.skip_ws();
      if (!c.try_eat(',')) break;
    }
    c.expect_end();
    return SlottedPresentation(std::move(slots), marks);
  }

  std::size_t size() const { return slots_.size(); }
  const RationalTangle& slot(std::size_t i) const { return slots_.at(i); }
  bool marked(std::size_t i) const { return marked_.at(i); }

  std::size_t mark_count() const {
    std::size_t n = 0;
    for (bool m : marked_)
      if (m) ++n;
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (i) s += ",";
      s += slots_[i].fraction().to_string();
      if (marked_[i]) s += "*";
    }
    return s;
  }

  friend SlottedPresentation untangle_surgery(const SlottedPresentation& p, std::size_t slot,
                                              const ExtendedRational& r);

private:
  std::vector<RationalTangle> slots_;
  std::vector<bool> marked_;
};

// Replace the 1/0-untangle in a marked slot by the r-tangle and consume the
// mark.  r = 1/0 leaves the untangle in place but still consumes the mark.
inline SlottedPresentation untangle_surgery(const SlottedPresentation& p, std::size_t slot,
                                            const ExtendedRational& r) {
  if (slot >= p.size()) throw std::invalid_argument("slot out of range");
  if (!p.marked(slot))
    throw std::invalid_argument("untangle surgery on an unmarked or already-surgered slot");
  SlottedPresentation out = p;
  out.slots_[slot] = tangle_from_fraction(r);
  out.marked_[slot] = false;
  return out;
}

// Slots whose fraction is neither an integer nor infinite.
inline std::size_t nontrivial_slot_count(const SlottedPresentation& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ExtendedRational& f = p.slot(i).fraction();
    if (!f.is_integer() && !f.is_infinite()) ++n;
  }
  return n;
}

}  // namespace dehn
