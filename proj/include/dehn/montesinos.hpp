#pragma once

// Montesinos links as an ordered list of finite tangle fractions beta_i/alpha_i
// plus an integral twist, their normal form, mirrors, equivalence, and the
// passage to the double branched cover.
//
// The cover of M(f_1, ..., f_k; e) is the Seifert manifold (e; (alpha_i,
// beta_i)): the obstruction is the twist and each fraction becomes a fiber,
// so the total slope e + sum(f_i) is carried over exactly.  Links with at
// least three branches are classified by their normal form up to dihedral
// symmetry of the fraction list; links with at most two branches are
// two-bridge and are compared through the lens spaces they cover.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/rational.hpp"
#include "dehn/seifert.hpp"

namespace dehn {

class MontesinosLink {
public:
  MontesinosLink() : twist_(0) {}

  MontesinosLink(std::vector<ExtendedRational> fractions, Int twist)
      : fractions_(std::move(fractions)), twist_(std::move(twist)) {
    for (const ExtendedRational& f : fractions_)
      if (f.is_infinite())
        throw std::invalid_argument("Montesinos fractions must be finite");
  }

  static MontesinosLink make(std::vector<ExtendedRational> fractions) {
    return MontesinosLink(std::move(fractions), Int(0));
  }

  const std::vector<ExtendedRational>& fractions() const { return fractions_; }
  const Int& twist() const { return twist_; }

  bool operator==(const MontesinosLink& o) const {
    return fractions_ == o.fractions_ && twist_ == o.twist_;
  }

  std::string to_string() const {
    std::string s = "M(";
    for (std::size_t i = 0; i < fractions_.size(); ++i) {
      if (i) s += ",";
      s += fractions_[i].to_string();
    }
    if (twist_ != 0) s += ";" + twist_.str();
    return s + ")";
  }

private:
  std::vector<ExtendedRational> fractions_;
  Int twist_;
};

// Each fraction replaced by its value mod 1 in (0,1), integer parts summed
// into the twist, integral fractions absorbed entirely.  The total
// twist + sum(fractions) is preserved.
inline MontesinosLink normalize(const MontesinosLink& m) {
  Int twist = m.twist();
  std::vector<ExtendedRational> fractions;
  for (const ExtendedRational& f : m.fractions()) {
    Int whole = f.floor();
    twist += whole;
    ExtendedRational frac = f - ExtendedRational(whole);
    if (!frac.is_zero()) fractions.push_back(std::move(frac));
  }
  return MontesinosLink(std::move(fractions), std::move(twist));
}

inline MontesinosLink mirror(const MontesinosLink& m) {
  std::vector<ExtendedRational> fractions;
  for (const ExtendedRational& f : m.fractions()) fractions.push_back(-f);
  return MontesinosLink(std::move(fractions), -m.twist());
}

inline SeifertManifold double_branched_cover(const MontesinosLink& m) {
  std::vector<SeifertFiber> fibers;
  for (const ExtendedRational& f : m.fractions()) fibers.push_back({f.den(), f.num()});
  return SeifertManifold(m.twist(), std::move(fibers));
}

namespace detail {

inline bool cyclic_dihedral_equal(const std::vector<ExtendedRational>& a,
                                  const std::vector<ExtendedRational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;
  for (std::size_t rot = 0; rot < n; ++rot) {
    bool fwd = true;
    bool rev = true;
    for (std::size_t i = 0; i < n && (fwd || rev); ++i) {
      if (a[(rot + i) % n] != b[i]) fwd = false;
      if (a[(rot + n - i) % n] != b[i]) rev = false;
    }
    if (fwd || rev) return true;
  }
  return false;
}

}  // namespace detail

// Normal forms compared up to cyclic permutation and reversal of the
// fraction list (global mirror also allowed when oriented = false).  With at
// most two branches both links are two-bridge and the comparison delegates
// to lens-space equality of the double branched covers.
inline bool equivalent(const MontesinosLink& a, const MontesinosLink& b, bool oriented) {
  MontesinosLink na = normalize(a);
  MontesinosLink nb = normalize(b);
  const bool small_a = na.fractions().size() <= 2;
  const bool small_b = nb.fractions().size() <= 2;
  if (small_a != small_b) return false;
  if (small_a) {
    auto la = as_lens(double_branched_cover(na));
    auto lb = as_lens(double_branched_cover(nb));
    return la->equal(*lb, oriented);
  }
  if (na.twist() == nb.twist() &&
      detail::cyclic_dihedral_equal(na.fractions(), nb.fractions()))
    return true;
  if (oriented) return false;
  MontesinosLink mb = normalize(mirror(nb));
  return na.twist() == mb.twist() &&
         detail::cyclic_dihedral_equal(na.fractions(), mb.fractions());
}

// "M(2/5,-2/3,3/11)" with an optional ";e" twist suffix before the closing
// parenthesis.
inline MontesinosLink parse_montesinos(std::string_view text) {
  detail::Cursor c(text);
  c.skip_ws();
  if (!c.try_eat_word("M")) c.fail("expected 'M'");
  c.skip_ws();
  c.expect('(');
  std::vector<ExtendedRational> fractions;
  Int twist = 0;
  c.skip_ws();
  if (!c.try_eat(')')) {
    bool expect_fraction = c.peek() != ';';
    while (expect_fraction) {
      ExtendedRational f = detail::parse_rational(c);
      if (f.is_infinite()) c.fail("Montesinos fractions must be finite");
      fractions.push_back(std::move(f));
      c.skip_ws();
      if (c.try_eat(',')) continue;
      break;
    }
    c.skip_ws();
    if (c.try_eat(';')) twist = detail::parse_int(c);
    c.skip_ws();
    c.expect(')');
  }
  c.expect_end();
  return MontesinosLink(std::move(fractions), std::move(twist));
}

inline std::string to_string(const MontesinosLink& m) { return m.to_string(); }

}  // namespace dehn
