#include "qsos/rational.hpp"

#include <ostream>

#include "qsos/errors.hpp"

namespace qsos {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::HasFixedPoint: return "HasFixedPoint";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotTotallyImaginary: return "NotTotallyImaginary";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::GaloisDataMissing: return "GaloisDataMissing";
    case ErrorKind::HeterogeneousDegrees: return "HeterogeneousDegrees";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotQuadraticallyIndependent: return "NotQuadraticallyIndependent";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::SpansDiffer: return "SpansDiffer";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::NotCayleyBacharach: return "NotCayleyBacharach";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::NotASumOverU: return "NotASumOverU";
    case ErrorKind::MissingGramWitness: return "MissingGramWitness";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    auto b = x.find_first_not_of(" \t\r\n");
    auto e = x.find_last_not_of(" \t\r\n");
    x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  return Rational(Integer(num), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out(1);
  Rational base = r;
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

bool is_square(const Rational& r) {
  if (r.sign() < 0) return false;
  Integer n = r.numerator(), d = r.denominator();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace qsos
