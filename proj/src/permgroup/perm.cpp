#include "qsos/perm.hpp"

#include <algorithm>
#include <cctype>

#include "qsos/errors.hpp"

namespace qsos {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidArgument, "image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  Perm p;
  p.img_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm Perm::parse(std::string_view s, int n) {
  std::vector<std::vector<int>> cycles;
  int top = n;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == s.size()) throw Error(ErrorKind::Parse, "empty permutation");
  while (i < s.size()) {
    if (s[i] != '(') throw Error(ErrorKind::Parse, "expected '(' in '" + std::string(s) + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
      if (i == s.size()) throw Error(ErrorKind::Parse, "unterminated cycle in '" + std::string(s) + "'");
      if (s[i] == ')') {
        ++i;
        break;
      }
      std::size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (b == i || i - b > 6) throw Error(ErrorKind::Parse, "bad point in '" + std::string(s) + "'");
      int v = std::stoi(std::string(s.substr(b, i - b)));
      if (v < 1) throw Error(ErrorKind::Parse, "points are numbered from 1");
      if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end())
        throw Error(ErrorKind::Parse, "repeated point in a cycle of '" + std::string(s) + "'");
      cyc.push_back(v - 1);
      top = std::max(top, v);
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  Perm p = identity(top);
  // Cycles compose right to left, like the product of permutations.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Perm c = identity(top);
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      c.img_[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    p = c * p;
  }
  return p;
}

Perm Perm::inverse() const {
  Perm q = *this;
  for (int i = 0; i < degree(); ++i) q.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  return q;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  if (is_identity()) return false;
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] != i) return false;
  return true;
}

bool Perm::is_fixed_point_free() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] == i) return false;
  return true;
}

Perm Perm::extended(int n) const {
  Perm q = identity(std::max(n, degree()));
  std::copy(img_.begin(), img_.end(), q.img_.begin());
  return q;
}

std::string Perm::str() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    s += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) s += ' ';
      s += std::to_string(j + 1);
      first = false;
      j = img_[static_cast<std::size_t>(j)];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    int n = std::max(a.degree(), b.degree());
    return a.extended(n) * b.extended(n);
  }
  Perm c = a;
  for (int i = 0; i < a.degree(); ++i) c.img_[static_cast<std::size_t>(i)] = a(b(i));
  return c;
}

std::vector<Perm> parse_generators(std::string_view text, int n) {
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      pieces.push_back(text.substr(b, i - b));
      b = i + 1;
    }
    if (depth < 0 || depth > 1) throw Error(ErrorKind::Parse, "unbalanced parentheses in '" + std::string(text) + "'");
  }
  if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in '" + std::string(text) + "'");
  pieces.push_back(text.substr(b));
  std::vector<Perm> gens;
  int top = n;
  for (auto piece : pieces) {
    gens.push_back(Perm::parse(piece, n));
    top = std::max(top, gens.back().degree());
  }
  for (auto& g : gens) g = g.extended(top);
  return gens;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qsos
