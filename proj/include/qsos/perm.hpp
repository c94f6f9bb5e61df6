#ifndef QSOS_PERM_HPP
#define QSOS_PERM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qsos {

/// Permutation of {0..n-1}; printed and parsed 1-based in cycle notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  /// Parses "(1 2 3)(4 5)" or "()"; the degree is max(n, largest point).
  static Perm parse(std::string_view cycles, int n = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_involution() const;  // t^2 = 1 and t != 1
  bool is_fixed_point_free() const;
  /// Same permutation on a larger point set.
  Perm extended(int n) const;

  std::string str() const;

  /// (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

inline Perm conjugate(const Perm& g, const Perm& t) { return g * t * g.inverse(); }

/// Splits "(1 2 3 4),(1 3)" into generators of a common degree n.
std::vector<Perm> parse_generators(std::string_view text, int n = 0);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace qsos

#endif  // QSOS_PERM_HPP
