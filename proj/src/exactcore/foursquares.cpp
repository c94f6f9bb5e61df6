#include "qsos/foursquares.hpp"

#include "qsos/errors.hpp"

namespace qsos {

namespace {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

// Largest-first search for n = sum of k squares, each at most cap.
bool descend(const Integer& n, int k, const Integer& cap, Integer* out) {
  if (k == 1) {
    Integer r;
    return is_square(n, r) && r <= cap && (out[0] = r, true);
  }
  Integer top = isqrt(n);
  if (top > cap) top = cap;
  for (Integer a = top; a >= 0; --a) {
    Integer rest = n - a * a;
    // k-1 squares each at most a sum to at most (k-1) a^2.
    if (rest > (k - 1) * a * a) break;
    out[0] = a;
    if (descend(rest, k - 1, a, out + 1)) return true;
  }
  return false;
}

}  // namespace

std::array<Integer, 4> four_squares(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::NonPositive, "negative integer has no four-square decomposition");
  std::array<Integer, 4> out{0, 0, 0, 0};
  if (n == 0) return out;
  Integer buf[4];
  if (!descend(n, 4, isqrt(n), buf))
    throw Error(ErrorKind::InvalidArgument, "four-square search failed for " + n.get_str());
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = buf[i];
  return out;
}

std::array<Rational, 4> four_squares(const Rational& r) {
  if (r.sign() <= 0) throw Error(ErrorKind::NonPositive, "four_squares needs a positive rational, got " + r.str());
  const Integer p = r.numerator(), q = r.denominator();
  auto s = four_squares(Integer(p * q));
  std::array<Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = Rational(s[i], q);
  return out;
}

}  // namespace qsos
