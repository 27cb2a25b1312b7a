#pragma once

// Framed-link surgery descriptions: rational coefficients over a symmetric
// integer linking matrix, slope transport under twisting, Rolfsen twists,
// and first homology via the generalized linking matrix (row i is scaled by
// the coefficient denominator: M_ii = p_i, M_ij = q_i * lk_ij).
//
// Sign convention: 1/m-surgery on a circle equals a (-m)-twist of the
// strands passing through it.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dehn/homology.hpp"
#include "dehn/rational.hpp"

namespace dehn {

class FramedLink {
public:
  FramedLink(std::vector<std::string> labels, std::vector<ExtendedRational> coefficients,
             std::vector<std::vector<Int>> linking)
      : labels_(std::move(labels)),
        coefficients_(std::move(coefficients)),
        linking_(std::move(linking)) {
    const std::size_t n = labels_.size();
    if (coefficients_.size() != n)
      throw std::invalid_argument("one coefficient per component required");
    if (linking_.size() != n)
      throw std::invalid_argument("linking matrix size must match component count");
    for (std::size_t i = 0; i < n; ++i) {
      if (linking_[i].size() != n)
        throw std::invalid_argument("linking matrix must be square");
      if (linking_[i][i] != 0)
        throw std::invalid_argument("linking matrix must have zero diagonal");
      for (std::size_t j = 0; j < i; ++j)
        if (linking_[i][j] != linking_[j][i])
          throw std::invalid_argument("linking matrix must be symmetric");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const ExtendedRational& coefficient(std::size_t i) const { return coefficients_.at(i); }
  const Int& linking(std::size_t i, std::size_t j) const { return linking_.at(i).at(j); }
  const std::vector<std::vector<Int>>& linking_matrix() const { return linking_; }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw std::invalid_argument("no component labeled '" + label + "'");
  }

private:
  std::vector<std::string> labels_;
  std::vector<ExtendedRational> coefficients_;
  std::vector<std::vector<Int>> linking_;
};

// Slope transport under m-fold twisting along a circle of winding number w:
// the slope r on the twisted knot corresponds to r - m*w^2 on the original.
inline ExtendedRational twist_slope(const ExtendedRational& r, const Int& m, const Int& w) {
  if (r.is_infinite()) throw std::domain_error("twist_slope needs a finite slope");
  return r - ExtendedRational(m * w * w);
}

// A knot twisted along an unknotted circle: base slope r on the twisted
// knot, twist count m, winding number w >= 0 (the sign of w is absorbed
// into an orientation choice).
struct TwistFamily {
  ExtendedRational base_slope;
  Int twist_count;
  Int winding;

  TwistFamily(ExtendedRational r, Int m, Int w)
      : base_slope(std::move(r)), twist_count(std::move(m)),
        winding(boost::multiprecision::abs(w)) {}

  ExtendedRational transported_slope() const {
    return twist_slope(base_slope, twist_count, winding);
  }
};

// Two-component description of (twisted knot; r): the original knot with the
// transported slope r - m*w^2 and the twisting circle with -1/m, linked w
// times.  m = 0 leaves the circle unfilled.
inline FramedLink twist_description(const TwistFamily& t, std::string knot_label = "k",
                                    std::string circle_label = "c") {
  return FramedLink({std::move(knot_label), std::move(circle_label)},
                    {t.transported_slope(), ExtendedRational(Int(-1), t.twist_count)},
                    {{0, t.winding}, {t.winding, 0}});
}

// |det M| with M_ii = p_i and M_ij = q_i * lk_ij; zero determinant is
// infinite first homology.  Unfilled components must be deleted first.
inline H1Order h1_from_link(const FramedLink& link) {
  const std::size_t n = link.size();
  IntMatrix m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const ExtendedRational& c = link.coefficient(i);
    if (c.is_infinite())
      throw std::invalid_argument("unfilled component '" + link.label(i) +
                                  "'; delete unfilled components first");
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? c.num() : c.den() * link.linking(i, j);
  }
  return H1Order::from_determinant(determinant(std::move(m)));
}

// Rolfsen twist along an unknotted component u (unknottedness is asserted by
// the caller): p/q -> p/(q + t*p) on u, r_i -> r_i + t*lk(i,u)^2 elsewhere,
// lk(i,j) -> lk(i,j) + t*lk(i,u)*lk(j,u).
inline FramedLink rolfsen_twist(const FramedLink& link, std::size_t u, const Int& t) {
  if (u >= link.size()) throw std::invalid_argument("component out of range");
  if (link.coefficient(u).is_infinite())
    throw std::invalid_argument("cannot twist along an unfilled component");

  const std::size_t n = link.size();
  std::vector<std::string> labels;
  std::vector<ExtendedRational> coefficients;
  std::vector<std::vector<Int>> linking = link.linking_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(link.label(i));
    const ExtendedRational& r = link.coefficient(i);
    if (i == u) {
      coefficients.push_back(ExtendedRational(r.num(), r.den() + t * r.num()));
    } else if (r.is_infinite()) {
      coefficients.push_back(r);
    } else {
      const Int& w = link.linking(i, u);
      coefficients.push_back(r + ExtendedRational(t * w * w));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && i != u && j != u)
        linking[i][j] += t * link.linking(i, u) * link.linking(j, u);
  return FramedLink(std::move(labels), std::move(coefficients), std::move(linking));
}

// Removes every component with infinite coefficient (a filled-back
// meridian), restricting the linking matrix.  The empty result describes
// S^3.
inline FramedLink delete_unfilled(const FramedLink& link) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < link.size(); ++i)
    if (!link.coefficient(i).is_infinite()) keep.push_back(i);

  std::vector<std::string> labels;
  std::vector<ExtendedRational> coefficients;
  std::vector<std::vector<Int>> linking(keep.size(), std::vector<Int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(link.label(keep[a]));
    coefficients.push_back(link.coefficient(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) linking[a][b] = link.linking(keep[a], keep[b]);
  }
  return FramedLink(std::move(labels), std::move(coefficients), std::move(linking));
}

}  // namespace dehn
