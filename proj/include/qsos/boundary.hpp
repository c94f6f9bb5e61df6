#ifndef QSOS_BOUNDARY_HPP
#define QSOS_BOUNDARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsos/gram.hpp"
#include "qsos/linalg.hpp"
#include "qsos/poly.hpp"

namespace qsos {

using PointQ = std::vector<Rational>;

/// Affine representatives of projective points.
struct PointConfig {
  std::vector<PointQ> points;

  unsigned nvars() const { return points.empty() ? 0 : static_cast<unsigned>(points.front().size()); }
  /// One point per line, coordinates "p/q,p/q,p/q".
  static PointConfig parse(std::string_view text);
  std::string str() const;
};

/// The nine intersection points of x1(x1^2-x3^2) and x2(x2^2-x3^2).
PointConfig demo_points();
/// (1,1,1,1,4,4,4,4,-2).
std::vector<Rational> demo_tuple();
/// x1(x1^2-x3^2), x2(x2^2-x3^2), (3x1^2+3x2^2-4x3^2)x3.
std::vector<Poly> demo_cubics();

/// Comma separated rationals.
std::vector<Rational> parse_tuple(std::string_view text);

/// Values of every degree-d monomial at every point (rows are points).
MatrixQ evaluation_matrix(const PointConfig& cfg, unsigned d);

/// Unique linear relation among the values of a cubic at nine points,
/// integral with content 1 and first nonzero entry positive.
/// Throws DuplicatePoint, NotCayleyBacharach.
std::vector<Rational> cb_relation(const PointConfig& cfg);

struct TupleCheck {
  bool nonzero = false;
  bool one_negative = false;
  Rational relation;  // sum u_i^2 / a_i, over the nonzero a_i
  bool ok() const { return nonzero && one_negative && relation.is_zero(); }
};

TupleCheck check_tuple(const std::vector<Rational>& u, const std::vector<Rational>& a);

/// A linear form on A_degree, stored as its values on the monomial basis.
struct LinearFunctional {
  unsigned n = 0;
  unsigned degree = 0;
  VectorQ coeffs;

  Rational operator()(const Poly& f) const;
  LinearFunctional scaled(const Rational& c) const { return {n, degree, coeffs * c}; }
  /// Lines "<monomial> <rational>".
  std::string str() const;
  static LinearFunctional parse(std::string_view text, unsigned n, unsigned degree);
};

/// alpha(f) = sum a_i f(xi_i). Zero weights are allowed here.
LinearFunctional functional_from_tuple(const PointConfig& cfg, const std::vector<Rational>& a, unsigned degree = 6);

/// b(p, q) = alpha(p q) on the half-degree monomial basis.
SymMatrix moment_matrix(const LinearFunctional& alpha);

/// Radical of the psd form b as forms of degree d in n variables: the
/// echelon basis, each row scaled to integers with content 1. Throws NotPsd.
std::vector<Poly> kernel_U(const SymMatrix& b, unsigned n, unsigned d);

/// sum q_i^2. Throws LinearlyDependent.
Poly assemble_sextic(const std::vector<Poly>& qs);

/// Echelon rows spanning the degree-k part of the ideal (U).
MatrixQ ideal_part(const std::vector<Poly>& u, unsigned n, unsigned k);
/// Echelon rows spanning ker(alpha) inside A_degree.
MatrixQ functional_kernel(const LinearFunctional& alpha);

/// dim (A/I)_k for k = 0..max_k with I = (U).
std::vector<std::size_t> hilbert_function(const std::vector<Poly>& u, unsigned n, unsigned max_k = 7);

enum class ZeroSet { Empty, NonEmpty };
const char* to_string(ZeroSet z);

/// Projective zero set of U, decided by I_k = A_k at k = n(d-1)+1.
ZeroSet empty_zero_check(const std::vector<Poly>& u, unsigned n);

enum class Positivity { StrictlyPositive, Inconclusive };
const char* to_string(Positivity p);

struct PositivityCert {
  Positivity verdict = Positivity::Inconclusive;
  ZeroSet zero_set = ZeroSet::NonEmpty;
  std::vector<std::size_t> hilbert;
  std::vector<Poly> squares;  // f = sum squares, each in span(U)
};

/// f = sum of squares from span(U) and V(U) empty. Throws NotASumOverU.
PositivityCert strict_positivity_cert(const Poly& f, const std::vector<Poly>& u);

struct BoundaryCert {
  bool psd = false;
  std::size_t psd_rank = 0;
  Rational alpha_f;
  std::size_t kernel_dim = 0;
  bool certified = false;
  std::string reason;  // why the pair was rejected
  std::optional<GramPoint> witness;
  std::string witness_source;  // "supplied" or "derived"

  std::string str() const;
};

/// alpha in the dual cone (b psd), not a point evaluation (rank >= 2) and
/// alpha(f) = 0, with f in the sos cone by an exact Gram witness.
/// Throws MissingGramWitness.
BoundaryCert boundary_cert(const Poly& f, const LinearFunctional& alpha,
                           const std::optional<GramPoint>& witness = std::nullopt);

enum class Uniqueness { Singleton, Inconclusive, Contradiction };
const char* to_string(Uniqueness u);

struct UniquenessCert {
  Uniqueness verdict = Uniqueness::Inconclusive;
  std::vector<Poly> kernel;
  bool quadratically_independent = false;
  MatrixQ q;  // the only Gram matrix, in kernel coordinates
  bool psd = false;
  std::vector<Poly> representation;  // f = sum representation_j^2
  std::string note;

  std::string str() const;
};

/// Gram(f) is a single point: every Gram matrix has column space inside
/// ker b_alpha, and f has a unique coefficient matrix on that kernel.
/// Throws InvalidArgument when boundary_cert is not certified.
UniquenessCert uniqueness_cert(const Poly& f, const LinearFunctional& alpha);

struct InteriorEvidence {
  bool same_form = false;
  bool spans_differ = false;
  std::vector<Poly> span1, span2;
};

/// Two sos representations of one form with different spans.
InteriorEvidence interior_evidence(const std::vector<Poly>& rep1, const std::vector<Poly>& rep2);

}  // namespace qsos

#endif  // QSOS_BOUNDARY_HPP
