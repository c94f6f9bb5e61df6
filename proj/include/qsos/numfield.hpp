#ifndef QSOS_NUMFIELD_HPP
#define QSOS_NUMFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsos/group.hpp"
#include "qsos/poly.hpp"
#include "qsos/roots.hpp"
#include "qsos/unipoly.hpp"

namespace qsos {

/// Linear form sum_j l_j(alpha) x_j, one polynomial in alpha per coordinate.
using LinearForm = std::vector<UniPolyQ>;

/// x1 + alpha x2 + ... + alpha^(n-1) xn.
LinearForm canonical_linear_form(unsigned n = 3);
bool is_canonical(const LinearForm& l);
/// Parses "1; t; t^2".
LinearForm parse_linear_form(std::string_view text);

/// N_{K/Q}(l) = Res_t(m(t), l(t; x)). Throws NotMonic or NotSquarefree.
Poly norm_form(const UniPolyQ& m, const LinearForm& l);

struct SosTwoWitness {
  BasicPoly<mpf_class> g_re, g_im;
  mpf_class residual;
  unsigned precision_bits = 0;
};

/// f = g_re^2 + g_im^2 numerically, with g the product of the conjugates of l
/// at the roots in the upper half plane. Throws NotTotallyImaginary.
SosTwoWitness real_sos2_witness(const UniPolyQ& m, const LinearForm& l, unsigned precision_bits = 256);

enum class GeneralPosition { ExactVandermonde, NumericCertified, Inconclusive };
const char* to_string(GeneralPosition g);

struct GeneralPositionResult {
  GeneralPosition verdict = GeneralPosition::Inconclusive;
  unsigned precision_bits = 0;
  std::size_t triples = 0;
  std::string note;
};

/// No three conjugates of l share a nontrivial zero.
GeneralPositionResult general_position(const UniPolyQ& m, const LinearForm& l, unsigned precision_bits = 128,
                                       unsigned max_bits = 1024);

struct GaloisData {
  std::string label;
  GroupDesc group;  // acts on root indices of isolate_roots
  Perm tau;
};

struct QuarticGalois {
  std::string label;  // S4, A4, D4, C4 or V4
  GroupDesc group;
  UniPolyQ resolvent;
  Rational discriminant;
  RootSystem roots;
};

/// Galois group of an irreducible quartic. Throws Reducible.
QuarticGalois quartic_galois(const UniPolyQ& m, unsigned precision_bits = 128);

enum class Conclusion { NotQSos, NoObstruction };
const char* to_string(Conclusion c);

struct ObstructionCert {
  std::string minpoly;
  int d = 0;
  std::optional<int> c;
  std::string galois_label;
  std::string tau;
  int sturm_real_roots = 0;
  bool totally_imaginary = false;
  bool squarefree = false;
  GeneralPositionResult general_position;
  bool tau_membership_verified = false;
  Conclusion conclusion = Conclusion::NoObstruction;
  std::string failing_check;  // empty for NotQSos
  std::vector<std::string> narrative;
  std::string norm_form;

  std::string str() const;
};

/// Condition (**) obstruction for l over Q[t]/(m). Galois data is derived
/// automatically for quartics. Throws DegreeTooSmall, GaloisDataMissing.
ObstructionCert obstruction_check(const UniPolyQ& m, const LinearForm& l,
                                  const std::optional<GaloisData>& galois = std::nullopt,
                                  unsigned precision_bits = 128, std::size_t bound = 1000000);

}  // namespace qsos

#endif  // QSOS_NUMFIELD_HPP
