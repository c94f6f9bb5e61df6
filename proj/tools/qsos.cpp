// qsos: command-line front end for the sum-of-squares certificate tools.
//
// Exit codes
//   0  success, or a certificate was produced (a NotQSos certificate counts)
//   1  negative verdict about the input (not psd, rejected functional, ...)
//   2  inconclusive (no obstruction found, deferred kernel, precision)
//   3  input error

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsos/boundary.hpp"
#include "qsos/errors.hpp"
#include "qsos/gram.hpp"
#include "qsos/group.hpp"
#include "qsos/numfield.hpp"

#ifndef QSOS_DATA_DIR
#define QSOS_DATA_DIR "data"
#endif

using namespace qsos;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

struct Globals {
  unsigned precision_bits = 128;
  std::size_t enum_bound = 1000000;
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPsd:
    case ErrorKind::NoSolution:
    case ErrorKind::NotASumOverU:
    case ErrorKind::Reducible:
      return kNegative;
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::OrderExceeded:
    case ErrorKind::NotQuadraticallyIndependent:
    case ErrorKind::MissingGramWitness:
      return kInconclusive;
    default:
      return kInputError;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec);
}

// Non-comment lines of a file, or the argument itself.
std::vector<std::string> content_lines(const std::string& arg) {
  if (!is_file(arg)) return {arg};
  std::vector<std::string> out;
  std::istringstream in(slurp(arg));
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(line);
  }
  return out;
}

Poly read_form(const std::string& arg) {
  std::string text;
  for (const auto& l : content_lines(arg)) text += l + " ";
  return parse_poly(text);
}

// List items are separated by ';' or ',' (polynomials never contain commas).
std::string semicolons(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

std::vector<Poly> read_forms(const std::string& arg) {
  std::string text;
  for (const auto& l : content_lines(arg)) {
    if (!text.empty() && text.back() != ';') text += ";";
    text += l;
  }
  while (!text.empty() && (text.back() == ';' || text.back() == ' ')) text.pop_back();
  return parse_poly_list(semicolons(text));
}

std::string read_text(const std::string& arg) { return is_file(arg) ? slurp(arg) : arg; }

std::string resolve_catalog(const std::string& arg) {
  if (is_file(arg)) return arg;
  std::string bundled = std::string(QSOS_DATA_DIR) + "/catalogs/" + arg;
  if (is_file(bundled)) return bundled;
  throw Error(ErrorKind::InvalidArgument, "catalog '" + arg + "' not found");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string join_q(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return "(" + join(s) + ")";
}

template <class T>
std::string join_n(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return "(" + join(s) + ")";
}

void print_matrix(std::ostream& os, const MatrixQ& m, const char* indent = "  ") {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent;
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
}

std::string sum_of_squares(const std::vector<Poly>& ps) {
  std::string s;
  for (std::size_t j = 0; j < ps.size(); ++j) s += (j ? " + (" : "(") + to_string(ps[j]) + ")^2";
  return ps.empty() ? "0" : s;
}

// ---------------------------------------------------------------- groups

void print_analysis(const GroupAnalysis& a) {
  std::cout << "group: " << (a.label.empty() ? "-" : a.label) << "\n"
            << "degree: " << a.degree << "\n";
  if (a.order) std::cout << "order: " << *a.order << "\n";
  std::cout << "transitive: " << yes_no(a.is_transitive) << "\n"
            << "two_transitive: " << yes_no(a.is_two_transitive) << "\n"
            << "fpf_involution_classes: " << a.fpf_classes.size() << "\n";
  for (const auto& c : a.fpf_classes)
    std::cout << "  t=" << c.representative.str() << " c=" << c.c << " (*) " << yes_no(c.satisfies_star) << " (**) "
              << yes_no(c.satisfies_starstar) << "\n";
  auto col = a.columns();
  std::cout << "columns: " << col[0] << " " << col[1] << " " << col[2] << " " << col[3] << "\n";
}

int groups_classify(const Globals& g, const std::string& gens, int degree, const std::string& label) {
  auto grp = make_group(gens, label, degree);
  print_analysis(classify(grp, g.enum_bound));
  return kOk;
}

int groups_char_number(const Globals& g, const std::string& gens, const std::string& inv, int degree) {
  Perm t = Perm::parse(inv, degree);
  if (!t.is_involution()) throw Error(ErrorKind::NotInvolution, t.str() + " is not an involution");
  GroupDesc grp = gens.empty() ? make_group(inv, "", std::max(degree, t.degree())) : make_group(gens, "", degree);
  const int n = std::max(grp.degree, t.degree());
  grp = make_group(gens.empty() ? inv : gens, "", n);
  t = t.extended(n);
  std::string membership;
  try {
    auto el = enumerate(grp, g.enum_bound);
    if (std::find(el.begin(), el.end(), t) == el.end())
      throw Error(ErrorKind::InvalidArgument, t.str() + " is not an element of the group");
    membership = "verified";
  } catch (const OrderExceeded&) {
    membership = "unverified";
  }
  const int c = char_number(grp, t);
  std::cout << "c=" << c << ", (*) " << yes_no(c == n - 1) << ", (**) " << yes_no(2 * c > n) << "\n"
            << "degree: " << n << "\n"
            << "membership: " << membership << "\n";
  return kOk;
}

int groups_table(const Globals& g, const std::vector<std::string>& catalogs, int degree, bool json) {
  nlohmann::json rows = nlohmann::json::array();
  int code = kOk;
  for (const auto& name : catalogs) {
    auto cat = load_catalog(resolve_catalog(name));
    int deg = degree;
    if (deg == 0 && !cat.empty()) deg = cat.front().degree;
    TableRow row = classify_catalog(cat, deg, g.enum_bound);
    if (!row.failures.empty()) code = kInconclusive;
    if (json) {
      nlohmann::json r;
      r["degree"] = row.degree;
      r["groups"] = row.groups;
      r["counts"] = row.counts;
      r["labels"] = row.labels;
      r["failures"] = row.failures;
      rows.push_back(r);
      continue;
    }
    std::cout << row.degree << "  " << row.counts[0] << "  " << row.counts[1] << "  " << row.counts[2] << "  "
              << row.counts[3] << "\n";
    std::cout << "row: (" << row.degree << ", " << row.counts[0] << ", " << row.counts[1] << ", " << row.counts[2] << ", "
              << row.counts[3] << ")\n";
    for (int k = 1; k < 4; ++k)
      std::cout << "column (" << k + 1 << "): " << (row.labels[static_cast<std::size_t>(k)].empty() ? "-" : join(row.labels[static_cast<std::size_t>(k)])) << "\n";
    if (row.counts[0] != row.groups)
      std::cout << "without fpf involution: " << row.groups - row.counts[0] << "\n";
    for (const auto& f : row.failures) std::cout << "failure: " << f << "\n";
  }
  if (json) std::cout << rows.dump(2) << "\n";
  return code;
}

// ----------------------------------------------------------------- field

LinearForm read_linform(const std::string& arg) {
  return arg.empty() ? canonical_linear_form() : parse_linear_form(semicolons(read_text(arg)));
}

int field_normform(const std::string& minpoly, const std::string& linform) {
  std::cout << to_string(norm_form(parse_unipoly(read_text(minpoly)), read_linform(linform))) << "\n";
  return kOk;
}

int field_obstruct(const Globals& g, const std::string& minpoly, const std::string& linform,
                   const std::string& gens, const std::string& label) {
  UniPolyQ m = parse_unipoly(read_text(minpoly));
  std::optional<GaloisData> data;
  if (!gens.empty()) {
    GaloisData d;
    d.group = make_group(gens, label, m.degree());
    d.label = label.empty() ? "user" : label;
    data = d;
  }
  auto cert = obstruction_check(m, read_linform(linform), data, g.precision_bits, g.enum_bound);
  std::cout << cert.str();
  return cert.conclusion == Conclusion::NotQSos ? kOk : kInconclusive;
}

int field_galois(const Globals& g, const std::string& minpoly) {
  auto q = quartic_galois(parse_unipoly(read_text(minpoly)), g.precision_bits);
  std::vector<std::string> gens;
  for (const auto& p : q.group.generators) gens.push_back(p.str());
  std::cout << "galois_group: " << q.label << "\n"
            << "order: " << enumerate(q.group, g.enum_bound).size() << "\n"
            << "generators: " << join(gens, ",") << "\n"
            << "resolvent: " << to_string(q.resolvent, "y") << "\n"
            << "resolvent_discriminant: " << q.discriminant.str() << "\n"
            << "tau: " << q.roots.tau.str() << "\n"
            << "real_roots: " << q.roots.real_roots << "\n";
  return kOk;
}

// -------------------------------------------------------------- boundary

struct StageLog {
  int failures = 0;
  int inconclusive = 0;
  void check(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
  }
  void unsure(const std::string& name, const std::string& detail) {
    std::cout << "[??]   " << name << ": " << detail << "\n";
    ++inconclusive;
  }
  int code() const { return failures ? kNegative : inconclusive ? kInconclusive : kOk; }
};

void pipeline(StageLog& log, const PointConfig& pts, const std::vector<Rational>& a,
              const std::optional<std::vector<Poly>>& cubics, bool demo) {
  auto u = cb_relation(pts);
  log.check("cb_relation", !demo || u == std::vector<Rational>{1, 1, 1, -1, -2, 2, -2, 2, 4}, "u = " + join_q(u));
  if (demo) {
    std::vector<Rational> mag;
    for (const auto& x : u) mag.push_back(abs(x));
    log.check("cb_magnitudes", mag == std::vector<Rational>{1, 1, 1, 1, 2, 2, 2, 2, 4}, join_q(mag));
  }
  auto t = check_tuple(u, a);
  log.check("tuple", t.ok(), "a = " + join_q(a) + ", sum u_i^2/a_i = " + t.relation.str() + ", one negative entry: " +
                                 yes_no(t.one_negative));
  auto alpha = functional_from_tuple(pts, a);
  auto b = moment_matrix(alpha);
  auto pv = psd_check(b);
  log.check("moment_matrix", pv.psd && (!demo || pv.rank == 7),
            std::string("psd ") + yes_no(pv.psd) + ", rank " + std::to_string(pv.psd ? pv.rank : rank(b.matrix())));
  if (!pv.psd) return;
  auto ker = kernel_U(b, 3, 3);
  std::vector<std::string> ks;
  for (const auto& p : ker) ks.push_back(to_string(p));
  log.check("kernel_U", !demo || ker == std::vector<Poly>{demo_cubics()[0], demo_cubics()[2], demo_cubics()[1]},
            "dim " + std::to_string(ker.size()) + ": " + join(ks, "; "));
  std::vector<Poly> qs = cubics ? *cubics : ker;
  if (cubics) {
    std::vector<Poly> both = ker;
    both.insert(both.end(), qs.begin(), qs.end());
    log.check("cubics_in_kernel", face_dimension(both).r == ker.size(), "given cubics lie in U_alpha");
  }
  if (qs.size() != 3) {
    log.unsure("sextic", "U_alpha has dimension " + std::to_string(ker.size()) + ", expected 3");
    return;
  }
  Poly f = assemble_sextic(qs);
  const Poly printed = parse_poly(
      "x1^6 + x2^6 + 7*(x1^4 + x2^4)*x3^2 + 18*x1^2*x2^2*x3^2 - 23*(x1^2 + x2^2)*x3^4 + 16*x3^6", 3);
  log.check("sextic", !demo || f == printed, "f = " + to_string(f));
  auto h = hilbert_function(qs, 3);
  log.check("hilbert_function", !demo || h == std::vector<std::size_t>{1, 3, 6, 7, 6, 3, 1, 0}, join_n(h));
  MatrixQ kalpha = functional_kernel(alpha), ua3 = ideal_part(qs, 3, 6);
  log.check("ker_alpha", kalpha == ua3 && ua3.rows() == 27,
            "dim U*A3 = " + std::to_string(ua3.rows()) + ", dim ker alpha = " + std::to_string(kalpha.rows()) +
                ", equal: " + yes_no(kalpha == ua3));
  auto pos = strict_positivity_cert(f, qs);
  if (pos.verdict == Positivity::StrictlyPositive)
    log.check("strict_positivity", true, std::string("V(U) ") + to_string(pos.zero_set));
  else
    log.unsure("strict_positivity", std::string("V(U) ") + to_string(pos.zero_set));
  auto bc = boundary_cert(f, alpha);
  log.check("boundary_cert", bc.certified,
            bc.certified ? "alpha(f) = 0, rank " + std::to_string(bc.psd_rank) + ", witness " + bc.witness_source
                         : bc.reason);
  if (!bc.certified) return;
  auto uc = uniqueness_cert(f, alpha);
  const bool ident = uc.q.rows() == 3 && uc.q == MatrixQ::Identity(3, 3);
  if (uc.verdict == Uniqueness::Singleton)
    log.check("uniqueness_cert", !demo || ident,
              std::string("Gram(f) is a single point, restricted Gram matrix ") + (ident ? "= identity" : "below"));
  else if (uc.verdict == Uniqueness::Inconclusive)
    log.unsure("uniqueness_cert", uc.note);
  else
    log.check("uniqueness_cert", false, uc.note);
  std::cout << bc.str() << uc.str();
}

int boundary_demo() {
  StageLog log;
  pipeline(log, demo_points(), demo_tuple(), demo_cubics(), true);
  // x1^6 + x2^6 + x3^6 lies in the interior.
  Poly f0 = parse_poly("x1^6 + x2^6 + x3^6", 3);
  auto alpha = functional_from_tuple(demo_points(), demo_tuple());
  auto r0 = boundary_cert(f0, alpha);
  log.check("interior_alpha", !r0.certified && r0.alpha_f == 42, "alpha(f0) = " + r0.alpha_f.str());
  auto rep1 = parse_poly_list("x1^3 - 2*x1*x2^2; 2*x1^2*x2 - x2^3; x3^3", 3);
  auto rep2 = parse_poly_list("x1^3; x2^3; x3^3", 3);
  auto ev = interior_evidence(rep1, rep2);
  const bool grams = is_gram_point(gram_from_squares(rep1), f0).ok() && is_gram_point(gram_from_squares(rep2), f0).ok();
  log.check("interior_spans", ev.same_form && ev.spans_differ && grams,
            std::string("two Gram points of f0 with different spans: ") + yes_no(ev.spans_differ));
  std::cout << "result: " << (log.code() == kOk ? "all stages match" : "mismatch") << "\n";
  return log.code();
}

int boundary_construct(const std::string& points, const std::string& tuple, const std::string& cubics) {
  StageLog log;
  std::optional<std::vector<Poly>> qs;
  if (!cubics.empty()) qs = read_forms(cubics);
  pipeline(log, PointConfig::parse(read_text(points)), parse_tuple(read_text(tuple)), qs, false);
  return log.code();
}

int boundary_certify(const std::string& form, const std::string& functional, const std::string& points,
                     const std::string& tuple, const std::string& gram) {
  Poly f = read_form(form);
  LinearFunctional alpha;
  if (!functional.empty()) {
    alpha = LinearFunctional::parse(read_text(functional), std::max(3u, f.nvars()),
                                    f.is_zero() ? 6u : static_cast<unsigned>(f.degree()));
  } else if (!points.empty() && !tuple.empty()) {
    alpha = functional_from_tuple(PointConfig::parse(read_text(points)), parse_tuple(read_text(tuple)),
                                  static_cast<unsigned>(f.degree()));
  } else {
    throw Error(ErrorKind::InvalidArgument, "give --functional, or --points with --tuple");
  }
  std::optional<GramPoint> witness;
  if (!gram.empty()) witness = GramPoint::parse(read_text(gram));
  auto bc = boundary_cert(f, alpha, witness);
  std::cout << bc.str();
  if (!bc.certified) return kNegative;
  auto uc = uniqueness_cert(f, alpha);
  std::cout << uc.str();
  return kOk;
}

int boundary_functional(const std::string& points, const std::string& tuple, unsigned degree) {
  auto alpha = functional_from_tuple(PointConfig::parse(read_text(points)), parse_tuple(read_text(tuple)), degree);
  std::cout << alpha.str();
  return kOk;
}

// ------------------------------------------------------------------ gram

int gram_verify(const std::string& form, const std::string& squares) {
  Poly f = read_form(form);
  auto sq = read_forms(squares);
  auto g = gram_from_squares(sq);
  auto check = is_gram_point(g, f);
  auto fd = face_dimension(sq);
  std::cout << g.str() << "mu(G) = f: " << yes_no(check.identity) << "\n"
            << "psd: " << yes_no(check.psd.psd) << "\n"
            << "rank: " << (check.psd.psd ? check.psd.rank : rank(g.matrix.matrix())) << "\n"
            << "face_dimension: " << fd.dim << "\n"
            << "extreme: " << yes_no(fd.quadratically_independent()) << "\n"
            << "verdict: " << (check.ok() ? "valid Gram point" : "not a Gram point of f") << "\n";
  return check.ok() ? kOk : kNegative;
}

int gram_extract(const std::string& form, const std::string& basis) {
  auto w = extract_qsos(read_form(form), read_forms(basis));
  std::cout << "coefficient_matrix:\n";
  print_matrix(std::cout, w.a);
  for (std::size_t k = 0; k < w.polys.size(); ++k)
    std::cout << "weighted: " << w.weights[k].str() << " * (" << to_string(w.polys[k]) << ")^2\n";
  std::cout << "reconstruction: exact\n" << w.str() << "\n";
  return kOk;
}

GramPoint read_gram_or_squares(const std::string& gram, const std::string& squares) {
  if (!gram.empty()) return GramPoint::parse(read_text(gram));
  if (!squares.empty()) return gram_from_squares(read_forms(squares));
  throw Error(ErrorKind::InvalidArgument, "each Gram point needs --gramK or --squaresK");
}

int gram_shrink(const std::string& g1s, const std::string& s1, const std::string& g2s, const std::string& s2) {
  auto g1 = read_gram_or_squares(g1s, s1), g2 = read_gram_or_squares(g2s, s2);
  auto r = shrink_span(g1, g2);
  std::cout << "det_polynomial: " << to_string(r.det, "s") << "\n"
            << "s_interval: (" << r.s_interval.lo.str() << ", " << r.s_interval.hi.str() << "]\n";
  if (r.deferred_kernel) {
    std::cout << "s_exact: irrational\nstatus: DeferredKernel\n";
    return kInconclusive;
  }
  std::cout << "s_exact: " << r.s_exact->str() << "\n"
            << "rank: " << r.rank_before << " -> " << r.rank_after << "\n"
            << r.g->str();
  std::vector<Poly> squares;
  for (const auto& sq : ldl_sos(r.g->matrix)) {
    Poly p = poly_from_vector(sq.vec, r.g->n, r.g->d);
    std::cout << "weighted: " << sq.weight.str() << " * (" << to_string(p) << ")^2\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for sums of squares over the rationals.\n"
               "Exit codes: 0 success or certificate produced (including NotQSos), 1 negative verdict,\n"
               "2 inconclusive, 3 input error."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--precision-bits", g.precision_bits, "Working precision for numeric root isolation")
      ->capture_default_str();
  app.add_option("--enum-bound", g.enum_bound, "Largest group order that is enumerated")->capture_default_str();

  std::function<int()> run;

  // groups
  auto* groups = app.add_subcommand("groups", "Permutation groups and characteristic numbers");
  groups->require_subcommand(1);
  std::string gens, inv, label;
  int degree = 0;
  auto* gc = groups->add_subcommand("classify", "Table columns for one group");
  gc->add_option("--gens", gens, "Generators in cycle notation, e.g. \"(1 2 3 4),(1 3)\"")->required();
  gc->add_option("--degree", degree, "Degree (default: largest moved point)");
  gc->add_option("--label", label, "Label to print");
  gc->callback([&] { run = [&] { return groups_classify(g, gens, degree, label); }; });
  auto* gn = groups->add_subcommand("char-number", "c(G, X, t) for an involution t");
  gn->add_option("--gens", gens, "Generators (default: the group generated by t)");
  gn->add_option("--inv", inv, "The involution t")->required();
  gn->add_option("--degree", degree, "Degree");
  gn->callback([&] { run = [&] { return groups_char_number(g, gens, inv, degree); }; });
  std::vector<std::string> catalogs;
  bool json = false;
  auto* gt = groups->add_subcommand("table", "Counts for the four table columns");
  gt->add_option("--catalog", catalogs, "Catalog file, or the name of a bundled catalog")->required();
  gt->add_option("--degree", degree, "Only entries of this degree");
  gt->add_flag("--json", json, "Structured output");
  gt->callback([&] { run = [&] { return groups_table(g, catalogs, degree, json); }; });

  // field
  auto* field = app.add_subcommand("field", "Number fields, norm forms and the Galois obstruction");
  field->require_subcommand(1);
  std::string minpoly, linform, galois_gens, galois_label;
  auto* fn = field->add_subcommand("normform", "N(l) as a form in x1..xn");
  fn->add_option("--minpoly", minpoly, "Monic minimal polynomial in t")->required();
  fn->add_option("--linform", linform, "Coordinates of l as polynomials in t, e.g. \"1;t;t^2\" (',' also separates)");
  fn->callback([&] { run = [&] { return field_normform(minpoly, linform); }; });
  auto* fo = field->add_subcommand("obstruct", "Certificate that N(l) is not a sum of squares over Q");
  fo->add_option("--minpoly", minpoly, "Monic minimal polynomial in t")->required();
  fo->add_option("--linform", linform, "Coordinates of l (default 1;t;t^2)");
  fo->add_option("--galois-gens", galois_gens, "Galois group on root indices (needed above degree 4)");
  fo->add_option("--galois-label", galois_label, "Label for the supplied group");
  fo->callback([&] { run = [&] { return field_obstruct(g, minpoly, linform, galois_gens, galois_label); }; });
  auto* fg = field->add_subcommand("galois", "Galois group of an irreducible quartic");
  fg->add_option("--minpoly", minpoly, "Monic quartic in t")->required();
  fg->callback([&] { run = [&] { return field_galois(g, minpoly); }; });

  // boundary
  auto* boundary = app.add_subcommand("boundary", "Strictly positive sextics on the boundary of the sos cone");
  boundary->require_subcommand(1);
  std::string points, tuple, cubics, form, functional, gram;
  auto* bd = boundary->add_subcommand("demo", "The nine-point example with every stage checked");
  bd->callback([&] { run = [&] { return boundary_demo(); }; });
  auto* bc = boundary->add_subcommand("construct", "Boundary sextic from nine points and a weight tuple");
  bc->add_option("--points", points, "File with 9 lines p/q,p/q,p/q")->required();
  bc->add_option("--tuple", tuple, "Weights a_1,...,a_9")->required();
  bc->add_option("--cubics", cubics, "Cubics from U_alpha to square (default: kernel basis)");
  bc->callback([&] { run = [&] { return boundary_construct(points, tuple, cubics); }; });
  unsigned fdeg = 6;
  auto* bf = boundary->add_subcommand("functional", "Print alpha = sum a_i ev(xi_i) in the --functional format");
  bf->add_option("--points", points, "File with the points")->required();
  bf->add_option("--tuple", tuple, "Weights a_1,...,a_k")->required();
  bf->add_option("--degree", fdeg, "Degree of the forms alpha acts on")->capture_default_str();
  bf->callback([&] { run = [&] { return boundary_functional(points, tuple, fdeg); }; });
  auto* bcert = boundary->add_subcommand("certify", "Check that alpha certifies f on the boundary");
  bcert->add_option("--form", form, "The form f (file or inline)")->required();
  bcert->add_option("--functional", functional, "File of '<monomial> <rational>' lines");
  bcert->add_option("--points", points, "Points, with --tuple, instead of --functional");
  bcert->add_option("--tuple", tuple, "Weights for --points");
  bcert->add_option("--gram", gram, "Gram matrix witness for f");
  bcert->callback([&] { run = [&] { return boundary_certify(form, functional, points, tuple, gram); }; });

  // gram
  auto* gramc = app.add_subcommand("gram", "Gram spectrahedron tools");
  gramc->require_subcommand(1);
  std::string squares, basis, gram1, gram2, squares1, squares2;
  auto* gv = gramc->add_subcommand("verify", "Gram point of a list of squares");
  gv->add_option("--form", form, "The form f (file or inline)")->required();
  gv->add_option("--squares", squares, "Squares p1;p2;... (file, one per line, or inline; ',' also separates)")->required();
  gv->callback([&] { run = [&] { return gram_verify(form, squares); }; });
  auto* ge = gramc->add_subcommand("extract-q", "Rational sos representation supported on a subspace");
  ge->add_option("--form", form, "The form f (file or inline)")->required();
  ge->add_option("--basis", basis, "Rational basis u1;u2;... of the subspace")->required();
  ge->callback([&] { run = [&] { return gram_extract(form, basis); }; });
  auto* gs = gramc->add_subcommand("shrink", "Walk from G1 through G2 to a Gram point of smaller rank");
  gs->add_option("--gram1", gram1, "Gram file for G1");
  gs->add_option("--gram2", gram2, "Gram file for G2");
  gs->add_option("--squares1", squares1, "Squares giving G1");
  gs->add_option("--squares2", squares2, "Squares giving G2");
  gs->callback([&] { run = [&] { return gram_shrink(gram1, squares1, gram2, squares2); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  try {
    return run ? run() : kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
