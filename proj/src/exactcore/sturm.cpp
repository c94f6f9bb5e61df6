#include "qsos/sturm.hpp"

#include <algorithm>

namespace qsos {

std::vector<UniPolyQ> sturm_chain(const UniPolyQ& p) {
  std::vector<UniPolyQ> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPolyQ d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    UniPolyQ r = divmod(chain[chain.size() - 2], d).second;
    d = -r;
  }
  return chain;
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int sign_variations(const std::vector<UniPolyQ>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& q : chain) s.push_back(q.evaluate(x).sign());
  return count_changes(s);
}

int sign_variations_at_infinity(const std::vector<UniPolyQ>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& q : chain) {
    int sg = q.lead().sign();
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return count_changes(s);
}

int sturm_real_roots(const UniPolyQ& p) {
  auto chain = sturm_chain(p);
  if (chain.empty()) return 0;
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

int sturm_count(const std::vector<UniPolyQ>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_bound(const UniPolyQ& p) {
  // Cauchy: 1 + max |c_k / c_n|, rounded up to a power of two.
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeff(static_cast<std::size_t>(k)) / p.lead()));
  Rational b = m + 1;
  Rational pw(1);
  while (pw <= b) pw *= 2;
  return pw;
}

RealInterval refine_root(const std::vector<UniPolyQ>& chain, RealInterval iv, const Rational& max_width) {
  while (iv.hi - iv.lo > max_width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sturm_count(chain, iv.lo, mid) > 0) iv.hi = mid;
    else iv.lo = mid;
  }
  return iv;
}

std::vector<RealInterval> isolate_real_roots(const UniPolyQ& p, const Rational& max_width) {
  std::vector<RealInterval> out;
  if (p.degree() < 1) return out;
  UniPolyQ sq = divmod(p, gcd(p, p.derivative())).first;
  auto chain = sturm_chain(sq);
  Rational b = root_bound(sq);
  std::vector<RealInterval> stack{{-b, b}};
  while (!stack.empty()) {
    RealInterval iv = stack.back();
    stack.pop_back();
    int c = sturm_count(chain, iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back(max_width.sign() > 0 ? refine_root(chain, iv, max_width) : iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace qsos
