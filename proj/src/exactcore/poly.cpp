#include "qsos/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qsos {

namespace {

void fill_basis(unsigned n, unsigned d, unsigned pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[pos] = e;
    fill_basis(n, d - e, pos + 1, cur, out);
  }
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class Parser {
 public:
  Parser(std::string_view s, std::string_view uvar) : s_(s), uvar_(uvar) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::string_view uvar_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Poly expr() {
    Poly acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (d.degree() > 0 || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.terms().begin()->second;
      } else {
        return acc;
      }
    }
  }
  Poly unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      std::string e = digits();
      if (e.empty() || e.size() > 6) fail("bad exponent");
      return pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }
  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = digits();
      return Poly(0, Rational(Integer(d)));
    }
    if (!uvar_.empty() && s_.substr(pos_, uvar_.size()) == uvar_) {
      std::size_t after = pos_ + uvar_.size();
      if (after >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[after]))) {
        pos_ = after;
        return Poly::variable(1, 0);
      }
    }
    if (c == 'x') {
      ++pos_;
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string idx(s_.substr(b, pos_ - b));
      if (idx.empty() || idx.size() > 4) fail("expected variable index after 'x'");
      unsigned i = static_cast<unsigned>(std::stoul(idx));
      if (i == 0) fail("variables are numbered from 1");
      return Poly::variable(i, i - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

std::vector<Monomial> monomial_basis(unsigned n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  out.reserve(binom(n - 1 + d, d));
  Monomial cur(n, 0);
  fill_basis(n, d, 0, cur, out);
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  // Count monomials of the same degree that come strictly before m.
  std::size_t n = m.size();
  unsigned rest = total_degree(m);
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (unsigned e = rest; e > m[i]; --e) idx += binom(n - i - 2 + rest - e, rest - e);
    rest -= m[i];
  }
  return idx;
}

std::string monomial_str(const Monomial& m, std::string_view var) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var;
    if (var == "x") s += std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.sign() < 0;
    Rational a = abs(c);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::string mono = monomial_str(m, var);
    if (mono.empty()) out += a.str();
    else if (a == 1) out += mono;
    else out += a.str() + "*" + mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

Poly parse_poly(std::string_view text, unsigned min_vars, std::string_view univariate_var) {
  Poly p = Parser(text, univariate_var).run();
  p.widen(min_vars);
  return p;
}

std::vector<Poly> parse_poly_list(std::string_view text, unsigned min_vars) {
  std::vector<Poly> out;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find(';', b);
    if (e == std::string_view::npos) e = text.size();
    std::string_view piece = text.substr(b, e - b);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos)
      out.push_back(parse_poly(piece, min_vars));
    b = e + 1;
  }
  unsigned n = min_vars;
  for (const auto& p : out) n = std::max(n, p.nvars());
  for (auto& p : out) p.widen(n);
  return out;
}

VectorQ coefficient_vector(const Poly& p, unsigned n, unsigned d) {
  auto basis = monomial_basis(n, d);
  Poly w = p;
  w.widen(n);
  VectorQ v;
  if (w.nvars() != n || !w.coefficients_on(basis, v))
    throw Error(ErrorKind::DimensionMismatch,
                "'" + to_string(p) + "' is not a form of degree " + std::to_string(d) + " in " +
                    std::to_string(n) + " variables");
  return v;
}

Poly poly_from_vector(const VectorQ& v, unsigned n, unsigned d) {
  auto basis = monomial_basis(n, d);
  if (static_cast<std::size_t>(v.size()) != basis.size())
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector has the wrong length");
  Poly p(n);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v(static_cast<Eigen::Index>(i)));
  return p;
}

}  // namespace qsos
