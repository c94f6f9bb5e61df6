#include "qsos/group.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qsos/errors.hpp"

namespace qsos {

void GroupDesc::validate() const {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "group degree must be positive");
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "group needs at least one generator");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::InvalidArgument, "generator " + g.str() + " does not act on " + std::to_string(degree) + " points");
}

GroupDesc make_group(std::string_view gens, std::string label, int degree) {
  GroupDesc g;
  g.generators = parse_generators(gens, degree);
  g.degree = g.generators.front().degree();
  g.label = std::move(label);
  g.validate();
  return g;
}

std::vector<int> point_orbit(const std::vector<Perm>& gens, int x) {
  return orbit_closure(gens, std::vector<int>{x}, [](const Perm& g, int p) { return g(p); });
}

std::vector<PointPair> ordered_pair_orbit(const std::vector<Perm>& gens, PointPair seed) {
  return orbit_closure(gens, std::vector<PointPair>{seed},
                       [](const Perm& g, const PointPair& p) { return PointPair{g(p.first), g(p.second)}; });
}

std::vector<PointPair> unordered_pair_orbit(const std::vector<Perm>& gens, const std::vector<PointPair>& seeds) {
  std::vector<PointPair> norm;
  for (auto [a, b] : seeds) norm.push_back({std::min(a, b), std::max(a, b)});
  return orbit_closure(gens, norm, [](const Perm& g, const PointPair& p) {
    int a = g(p.first), b = g(p.second);
    return PointPair{std::min(a, b), std::max(a, b)};
  });
}

bool is_transitive(const GroupDesc& g) {
  return static_cast<int>(point_orbit(g.generators, 0).size()) == g.degree;
}

bool is_two_transitive(const GroupDesc& g) {
  if (g.degree < 2) return false;
  const auto n = static_cast<std::size_t>(g.degree);
  return ordered_pair_orbit(g.generators, {0, 1}).size() == n * (n - 1);
}

std::vector<Perm> enumerate(const GroupDesc& g, std::size_t bound) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out{Perm::identity(g.degree)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators) {
      Perm h = s * out[i];
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > bound) throw OrderExceeded(out.size(), bound);
      }
    }
  return out;
}

std::vector<Perm> fpf_involution_classes(const GroupDesc& g, std::size_t bound) {
  auto elements = enumerate(g, bound);
  std::vector<Perm> inv;
  for (const auto& e : elements)
    if (e.is_involution() && e.is_fixed_point_free()) inv.push_back(e);
  std::sort(inv.begin(), inv.end());
  std::set<Perm> done;
  std::vector<Perm> reps;
  for (const auto& t : inv) {
    if (done.count(t)) continue;
    auto cls = orbit_closure(g.generators, std::vector<Perm>{t}, [](const Perm& h, const Perm& x) { return conjugate(h, x); });
    done.insert(cls.begin(), cls.end());
    reps.push_back(*std::min_element(cls.begin(), cls.end()));
  }
  return reps;
}

int char_number(const GroupDesc& g, const Perm& t) {
  if (!t.is_involution()) throw Error(ErrorKind::NotInvolution, t.str() + " is not an involution");
  if (!t.is_fixed_point_free()) throw Error(ErrorKind::HasFixedPoint, t.str() + " has a fixed point");
  if (t.degree() != g.degree)
    throw Error(ErrorKind::DimensionMismatch, t.str() + " does not act on " + std::to_string(g.degree) + " points");
  std::vector<PointPair> seeds;
  for (int z = 0; z < g.degree; ++z) seeds.push_back({z, t(z)});
  auto pairs = unordered_pair_orbit(g.generators, seeds);
  std::vector<int> count(static_cast<std::size_t>(g.degree), 0);
  for (auto [a, b] : pairs) {
    ++count[static_cast<std::size_t>(a)];
    ++count[static_cast<std::size_t>(b)];
  }
  for (int x : count)
    if (x != count.front())
      throw std::logic_error("characteristic number depends on the base point for " + t.str());
  return count.front();
}

int char_number_bruteforce(const std::vector<Perm>& elements, const Perm& t, int x) {
  std::set<int> m;
  for (const auto& g : elements) m.insert(conjugate(g, t)(x));
  return static_cast<int>(m.size());
}

bool GroupAnalysis::any_star() const {
  return std::any_of(fpf_classes.begin(), fpf_classes.end(), [](const FpfClass& c) { return c.satisfies_star; });
}

bool GroupAnalysis::any_starstar() const {
  return std::any_of(fpf_classes.begin(), fpf_classes.end(), [](const FpfClass& c) { return c.satisfies_starstar; });
}

std::array<bool, 4> GroupAnalysis::columns() const {
  return {has_fpf_involution, has_fpf_involution && is_two_transitive, !is_two_transitive && any_star(),
          any_starstar() && !any_star()};
}

GroupAnalysis classify(const GroupDesc& g, std::size_t bound) {
  g.validate();
  GroupAnalysis a;
  a.label = g.label;
  a.degree = g.degree;
  a.is_transitive = is_transitive(g);
  a.is_two_transitive = is_two_transitive(g);
  a.order = enumerate(g, bound).size();
  for (const auto& t : fpf_involution_classes(g, bound)) {
    FpfClass c;
    c.representative = t;
    c.c = char_number(g, t);
    c.satisfies_star = c.c == g.degree - 1;
    c.satisfies_starstar = 2 * c.c > g.degree;
    a.fpf_classes.push_back(c);
  }
  a.has_fpf_involution = !a.fpf_classes.empty();
  if (a.has_fpf_involution && a.is_two_transitive && !a.any_star())
    throw std::logic_error("2-transitive group without (*) involution: " + g.label);
  return a;
}

TableRow classify_catalog(const std::vector<GroupDesc>& catalog, int degree, std::size_t bound, bool parallel) {
  std::vector<const GroupDesc*> entries;
  for (const auto& g : catalog)
    if (degree == 0 || g.degree == degree) entries.push_back(&g);
  TableRow row;
  row.degree = degree;
  if (degree == 0 && !entries.empty()) row.degree = entries.front()->degree;

  std::vector<std::future<GroupAnalysis>> jobs;
  for (const auto* g : entries)
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [g, bound] { return classify(*g, bound); }));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      GroupAnalysis a = jobs[i].get();
      if (a.degree != row.degree) row.failures.push_back(a.label + ": mixed degrees in one row");
      ++row.groups;
      auto cols = a.columns();
      for (std::size_t k = 0; k < 4; ++k)
        if (cols[k]) {
          ++row.counts[k];
          row.labels[k].push_back(a.label);
        }
      row.analyses.push_back(std::move(a));
    } catch (const std::exception& e) {
      row.failures.push_back(entries[i]->label + ": " + e.what());
    }
  }
  return row;
}

std::vector<GroupDesc> parse_catalog(std::string_view text) {
  std::vector<GroupDesc> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto s1 = line.find(';');
    auto s2 = s1 == std::string::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string::npos)
      throw Error(ErrorKind::Parse, "catalog line " + std::to_string(lineno) + ": expected degree;label;generators");
    int deg = 0;
    try {
      deg = std::stoi(line.substr(0, s1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "catalog line " + std::to_string(lineno) + ": bad degree");
    }
    std::string label = line.substr(s1 + 1, s2 - s1 - 1);
    label.erase(0, label.find_first_not_of(' '));
    label.erase(label.find_last_not_of(' ') + 1);
    GroupDesc g = make_group(line.substr(s2 + 1), label, deg);
    if (g.degree != deg)
      throw Error(ErrorKind::Parse, "catalog line " + std::to_string(lineno) + ": generators move points beyond the degree");
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GroupDesc> load_catalog(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot open catalog " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_catalog(ss.str());
}

}  // namespace qsos
