#pragma once

// Seifert fibered spaces over S^2 in the invariant form
//   (b; (alpha_1, beta_1), ..., (alpha_k, beta_k)),
// with normal form 0 < beta_i < alpha_i, alpha_i >= 2, integer quotients
// absorbed into the obstruction b.  The total slope b + sum(beta_i/alpha_i)
// is preserved by normalization; the Euler number is its negative.
//
// Lens spaces are recognized for <= 2 exceptional fibers by reducing the
// associated chain description (arms alpha_i/beta_i around a central -b
// unknot) with slam-dunk moves: each rational arm is first expanded into an
// integer chain through a1 - 1/(a2 - 1/(...)), then the chain folds into a
// single rational surgery coefficient p/q, read as L(p, q) (negative p is
// canonicalized to L(-p, -q)).

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/homology.hpp"
#include "dehn/rational.hpp"

namespace dehn {

struct SeifertFiber {
  Int alpha;  // multiplicity, >= 1
  Int beta;

  bool operator==(const SeifertFiber&) const = default;
};

class SeifertManifold {
public:
  SeifertManifold(Int obstruction, std::vector<SeifertFiber> fibers, bool orientation = true)
      : b_(std::move(obstruction)), fibers_(std::move(fibers)), orientation_(orientation) {
    for (const SeifertFiber& f : fibers_) {
      if (f.alpha < 1) throw std::invalid_argument("fiber multiplicity must be >= 1");
      if (boost::multiprecision::gcd(f.alpha, boost::multiprecision::abs(f.beta)) != 1)
        throw std::invalid_argument("fiber invariants must be coprime");
    }
  }

  const Int& obstruction() const { return b_; }
  const std::vector<SeifertFiber>& fibers() const { return fibers_; }

  // Bookkeeping label flipped by mirror(); comparisons never consult it.
  bool orientation() const { return orientation_; }

  bool operator==(const SeifertManifold& o) const {
    return b_ == o.b_ && fibers_ == o.fibers_;
  }

  std::string to_string() const {
    std::string s = "SFS(" + b_.str() + ";";
    for (std::size_t i = 0; i < fibers_.size(); ++i) {
      s += i ? ", " : " ";
      s += ExtendedRational(fibers_[i].beta, fibers_[i].alpha).to_string();
    }
    return s + ")";
  }

private:
  Int b_;
  std::vector<SeifertFiber> fibers_;
  bool orientation_;
};

// beta_i reduced mod alpha_i into (0, alpha_i), quotients absorbed into the
// obstruction, multiplicity-1 fibers deleted.  b + sum(beta_i/alpha_i) is
// unchanged.
inline SeifertManifold normalize(const SeifertManifold& s) {
  Int b = s.obstruction();
  std::vector<SeifertFiber> fibers;
  for (const SeifertFiber& f : s.fibers()) {
    if (f.alpha == 1) {
      b += f.beta;
      continue;
    }
    Int q = detail::floor_div(f.beta, f.alpha);
    fibers.push_back({f.alpha, f.beta - q * f.alpha});
    b += q;
  }
  return SeifertManifold(std::move(b), std::move(fibers), s.orientation());
}

inline ExtendedRational euler_number(const SeifertManifold& s) {
  ExtendedRational total(s.obstruction());
  for (const SeifertFiber& f : s.fibers()) total = total + ExtendedRational(f.beta, f.alpha);
  return -total;
}

// |det| of the (k+1)x(k+1) presentation with rows (alpha_i e_i | beta_i) and
// (1 ... 1 | -b); determinant zero means infinite first homology.
inline H1Order h1_order(const SeifertManifold& s) {
  const std::size_t k = s.fibers().size();
  IntMatrix m(k + 1, std::vector<Int>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = s.fibers()[i].alpha;
    m[i][k] = s.fibers()[i].beta;
  }
  for (std::size_t j = 0; j < k; ++j) m[k][j] = 1;
  m[k][k] = -s.obstruction();
  return H1Order::from_determinant(determinant(std::move(m)));
}

// Sorted multiset of the exceptional multiplicities (alpha_i >= 2 in normal
// form).
inline std::vector<Int> exceptional_indices(const SeifertManifold& s) {
  std::vector<Int> out;
  for (const SeifertFiber& f : normalize(s).fibers()) out.push_back(f.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<std::array<Int, 3>> small_seifert_type(const SeifertManifold& s) {
  std::vector<Int> idx = exceptional_indices(s);
  if (idx.size() != 3) return std::nullopt;
  return std::array<Int, 3>{idx[0], idx[1], idx[2]};
}

inline SeifertManifold mirror(const SeifertManifold& s) {
  std::vector<SeifertFiber> fibers;
  for (const SeifertFiber& f : s.fibers()) fibers.push_back({f.alpha, -f.beta});
  return SeifertManifold(-s.obstruction(), std::move(fibers), !s.orientation());
}

// Lens space L(p, q), with S^3 (p = 1) and S^2 x S^1 (p = 0) included.
// Canonical form: p >= 0 and q reduced mod p (q = 0 for S^3, q = 1 for
// S^2 x S^1); a coefficient p/q with p < 0 denotes L(-p, -q).
class LensSpace {
public:
  LensSpace(Int p, Int q) {
    if (p < 0) {
      p = -p;
      q = -q;
    }
    if (boost::multiprecision::gcd(p, boost::multiprecision::abs(q)) != 1)
      throw std::invalid_argument("lens parameters must be coprime");
    if (p == 0) {
      q = 1;
    } else {
      q %= p;
      if (q < 0) q += p;  // p = 1 leaves q = 0
    }
    p_ = std::move(p);
    q_ = std::move(q);
  }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  // Oriented: q' = q or qq' = 1 (mod p).  Unoriented additionally allows the
  // mirror, q' = -q or qq' = -1 (mod p).
  bool equal(const LensSpace& o, bool oriented) const {
    if (p_ != o.p_) return false;
    if (p_ <= 1) return true;
    if (q_ == o.q_ || (q_ * o.q_) % p_ == 1) return true;
    if (oriented) return false;
    return (q_ + o.q_) % p_ == 0 || (q_ * o.q_ + 1) % p_ == 0;
  }

  bool operator==(const LensSpace& o) const { return p_ == o.p_ && q_ == o.q_; }

  std::string to_string() const { return "L(" + p_.str() + "," + q_.str() + ")"; }

private:
  Int p_;
  Int q_;
};

namespace detail {

// r = a1 - 1/(a2 - 1/(... - 1/am)) with integer terms; the term carrying a1
// is the component attached to the rest of the chain.
inline std::vector<Int> minus_continued_fraction(ExtendedRational r) {
  std::vector<Int> terms;
  for (;;) {
    Int a = r.ceil();
    ExtendedRational frac = ExtendedRational(a) - r;  // in [0, 1)
    terms.push_back(std::move(a));
    if (frac.is_zero()) break;
    r = frac.reciprocal();
  }
  return terms;
}

// Folds a chain of unknots whose coefficients are integers except possibly
// at the growing end: repeatedly slam-dunk the end component into its
// integer neighbor, n -> n - 1/end.
inline ExtendedRational fold_chain(const std::vector<Int>& chain) {
  ExtendedRational acc(chain.front());
  for (std::size_t i = 1; i < chain.size(); ++i)
    acc = ExtendedRational(chain[i]) - acc.reciprocal();
  return acc;
}

}  // namespace detail

// Slam-dunk reduction of the chain description for <= 2 exceptional fibers;
// NONE when three or more remain after normalization.
inline std::optional<LensSpace> as_lens(const SeifertManifold& s0) {
  SeifertManifold s = normalize(s0);
  if (s.fibers().size() > 2) return std::nullopt;

  std::vector<Int> chain;
  if (!s.fibers().empty()) {
    const SeifertFiber& f = s.fibers().front();
    std::vector<Int> arm =
        detail::minus_continued_fraction(ExtendedRational(f.alpha, f.beta));
    chain.assign(arm.rbegin(), arm.rend());  // outermost end first
  }
  chain.push_back(-s.obstruction());
  if (s.fibers().size() == 2) {
    const SeifertFiber& f = s.fibers().back();
    std::vector<Int> arm =
        detail::minus_continued_fraction(ExtendedRational(f.alpha, f.beta));
    chain.insert(chain.end(), arm.begin(), arm.end());
  }

  ExtendedRational r = detail::fold_chain(chain);
  if (r.is_infinite()) return LensSpace(1, 0);
  return LensSpace(r.num(), r.den());
}

// Normal forms compared up to fiber permutation; up to a global mirror as
// well when oriented = false.  Manifolds with at most two exceptional fibers
// are lens spaces and are compared as such.
inline bool same_up_to_homeo(const SeifertManifold& a, const SeifertManifold& b, bool oriented) {
  SeifertManifold na = normalize(a);
  SeifertManifold nb = normalize(b);
  const bool lens_a = na.fibers().size() <= 2;
  const bool lens_b = nb.fibers().size() <= 2;
  if (lens_a != lens_b) return false;
  if (lens_a) return as_lens(na)->equal(*as_lens(nb), oriented);

  auto sorted_fibers = [](const SeifertManifold& s) {
    std::vector<SeifertFiber> f = s.fibers();
    std::sort(f.begin(), f.end(), [](const SeifertFiber& x, const SeifertFiber& y) {
      return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
    });
    return f;
  };

  if (na.obstruction() == nb.obstruction() && sorted_fibers(na) == sorted_fibers(nb))
    return true;
  if (oriented) return false;
  SeifertManifold mb = normalize(mirror(nb));
  return na.obstruction() == mb.obstruction() && sorted_fibers(na) == sorted_fibers(mb);
}

// "SFS(b; b1/a1, b2/a2, ...)" with fractions beta_i/alpha_i.
inline SeifertManifold parse_seifert(std::string_view text) {
  detail::Cursor c(text);
  c.skip_ws();
  if (!c.try_eat_word("SFS")) c.fail("expected 'SFS'");
  c.skip_ws();
  c.expect('(');
  Int b = detail::parse_int(c);
  c.skip_ws();
  std::vector<SeifertFiber> fibers;
  if (!c.try_eat(')')) {
    c.expect(';');
    c.skip_ws();
    if (!c.try_eat(')')) {
      for (;;) {
        ExtendedRational f = detail::parse_rational(c);
        if (f.is_infinite()) c.fail("fiber invariants must be finite");
        fibers.push_back({f.den(), f.num()});
        c.skip_ws();
        if (c.try_eat(')')) break;
        c.expect(',');
      }
    }
  }
  c.expect_end();
  return SeifertManifold(std::move(b), std::move(fibers));
}

inline std::string to_string(const SeifertManifold& s) { return s.to_string(); }
inline std::string to_string(const LensSpace& l) { return l.to_string(); }

}  // namespace dehn
