#ifndef QSOS_STURM_HPP
#define QSOS_STURM_HPP

#include <vector>

#include "qsos/unipoly.hpp"

namespace qsos {

/// Sturm sequence p, p', -rem(p, p'), ...
std::vector<UniPolyQ> sturm_chain(const UniPolyQ& p);

/// Sign variations of the chain at x.
int sign_variations(const std::vector<UniPolyQ>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<UniPolyQ>& chain, bool positive);

/// Number of distinct real roots.
int sturm_real_roots(const UniPolyQ& p);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<UniPolyQ>& chain, const Rational& a, const Rational& b);

/// A power of two strictly bounding the absolute value of every root.
Rational root_bound(const UniPolyQ& p);

struct RealInterval {
  Rational lo, hi;  // the root lies in (lo, hi]
};

/// Disjoint isolating intervals for the distinct real roots, in increasing
/// order. Each interval has width at most max_width when that is positive.
std::vector<RealInterval> isolate_real_roots(const UniPolyQ& p, const Rational& max_width = Rational(0));

/// Halves the interval until its width is at most max_width.
RealInterval refine_root(const std::vector<UniPolyQ>& chain, RealInterval iv, const Rational& max_width);

}  // namespace qsos

#endif  // QSOS_STURM_HPP
