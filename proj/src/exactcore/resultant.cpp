#include "qsos/resultant.hpp"

#include <algorithm>

namespace qsos {

Poly resultant(const UniPolyQ& a, const UniPoly<Poly>& b) {
  unsigned n = 0;
  for (const auto& c : b.coeffs()) n = std::max(n, c.nvars());
  std::vector<Poly> lifted;
  for (const auto& c : a.coeffs()) lifted.emplace_back(n, c);
  Poly r = resultant(UniPoly<Poly>(std::move(lifted)), b);
  r.widen(n);
  return r;
}

}  // namespace qsos
