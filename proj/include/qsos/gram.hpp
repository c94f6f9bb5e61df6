#ifndef QSOS_GRAM_HPP
#define QSOS_GRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsos/linalg.hpp"
#include "qsos/poly.hpp"
#include "qsos/sturm.hpp"
#include "qsos/unipoly.hpp"

namespace qsos {

/// Symmetric G with X^T G X = f, indexed by monomial_basis(n, d).
struct GramPoint {
  unsigned n = 0;
  unsigned d = 0;
  SymMatrix matrix;

  std::vector<Monomial> basis() const { return monomial_basis(n, d); }
  /// Header "# gram n=.. d=..", a basis comment line, then one row per line.
  std::string str() const;
  static GramPoint parse(std::string_view text);
};

/// sum of u_i u_i^T over the coefficient vectors. Throws EmptyInput,
/// HeterogeneousDegrees.
GramPoint gram_from_squares(const std::vector<Poly>& squares);

/// X^T G X.
Poly mu(const GramPoint& g);

struct GramCheck {
  bool identity = false;  // mu(G) = f
  PsdVerdict psd;
  bool ok() const { return identity && psd.psd; }
};

GramCheck is_gram_point(const GramPoint& g, const Poly& f);

/// Echelon basis of the column space, read back as degree-d forms. Throws NotPsd.
std::vector<Poly> span_basis(const GramPoint& g);

struct FaceDimension {
  std::size_t r = 0;              // dim span(p_i)
  std::size_t products_rank = 0;  // dim span(p_i p_j)
  std::size_t dim = 0;            // C(r+1, 2) - products_rank
  bool quadratically_independent() const { return dim == 0; }
};

FaceDimension face_dimension(const std::vector<Poly>& squares);

struct QSosWitness {
  MatrixQ a;  // f = sum a_ij u_i u_j
  std::vector<Rational> weights;
  std::vector<Poly> polys;     // f = sum weights_k polys_k^2
  std::vector<Poly> expanded;  // f = sum expanded_j^2
  /// "f = (q1)^2 + (q2)^2 + ..." in the polynomial grammar.
  std::string str() const;
};

/// The unique sos representation of f supported on span(u). Throws
/// LinearlyDependent, NotQuadraticallyIndependent, NoSolution, NotPsd.
QSosWitness extract_qsos(const Poly& f, const std::vector<Poly>& u);

struct ShrinkResult {
  UniPolyQ det;              // det Q(s) on the common span
  RealInterval s_interval;   // isolates s*
  std::optional<Rational> s_exact;
  std::optional<GramPoint> g;  // absent when the kernel is deferred
  bool deferred_kernel = false;
  std::size_t rank_before = 0, rank_after = 0;
  MatrixQ kernel;  // certified kernel of Q(s*) in span coordinates
};

/// Walks G1 + s (G2 - G1) past s = 1 to the first boundary point of the face.
/// Throws NotPsd, SpansDiffer, EqualPoints, InvalidArgument.
ShrinkResult shrink_span(const GramPoint& g1, const GramPoint& g2);

struct WalkResult {
  GramPoint g;
  std::vector<std::size_t> ranks;
  bool extreme = false;
  bool deferred_kernel = false;
};

/// Repeats line walks inside the supporting face until the span is
/// quadratically independent. Each step lowers the rank.
WalkResult walk_to_extreme(const GramPoint& g);

}  // namespace qsos

#endif  // QSOS_GRAM_HPP
