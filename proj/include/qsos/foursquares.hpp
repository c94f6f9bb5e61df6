#ifndef QSOS_FOURSQUARES_HPP
#define QSOS_FOURSQUARES_HPP

#include <array>

#include "qsos/rational.hpp"

namespace qsos {

/// Lagrange decomposition of a nonnegative integer, components descending.
std::array<Integer, 4> four_squares(const Integer& n);

/// r = a^2 + b^2 + c^2 + d^2 over the rationals. Throws NonPositive for r <= 0.
std::array<Rational, 4> four_squares(const Rational& r);

}  // namespace qsos

#endif  // QSOS_FOURSQUARES_HPP
