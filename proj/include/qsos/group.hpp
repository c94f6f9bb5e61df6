#ifndef QSOS_GROUP_HPP
#define QSOS_GROUP_HPP

#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsos/perm.hpp"

namespace qsos {

struct GroupDesc {
  int degree = 0;
  std::vector<Perm> generators;
  std::string label;

  /// Throws InvalidArgument when a generator has the wrong degree.
  void validate() const;
};

GroupDesc make_group(std::string_view gens, std::string label = "", int degree = 0);

/// Breadth-first closure of the seeds under every generator. The result lists
/// objects in discovery order.
template <class T, class Action>
std::vector<T> orbit_closure(const std::vector<Perm>& gens, const std::vector<T>& seeds, Action act) {
  std::set<T> seen;
  std::vector<T> order;
  for (const auto& s : seeds)
    if (seen.insert(s).second) order.push_back(s);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& g : gens) {
      T img = act(g, order[i]);
      if (seen.insert(img).second) order.push_back(std::move(img));
    }
  return order;
}

using PointPair = std::pair<int, int>;

std::vector<int> point_orbit(const std::vector<Perm>& gens, int x);
std::vector<PointPair> ordered_pair_orbit(const std::vector<Perm>& gens, PointPair seed);
/// Unordered pairs are stored with first < second.
std::vector<PointPair> unordered_pair_orbit(const std::vector<Perm>& gens, const std::vector<PointPair>& seeds);

bool is_transitive(const GroupDesc& g);
bool is_two_transitive(const GroupDesc& g);

/// All elements (identity first), or OrderExceeded once more than bound are found.
std::vector<Perm> enumerate(const GroupDesc& g, std::size_t bound);

/// One representative per conjugacy class of fixed-point-free involutions:
/// the lexicographically smallest image array in the class. Classes are
/// ordered by representative.
std::vector<Perm> fpf_involution_classes(const GroupDesc& g, std::size_t bound);

/// c(G, X, t) by pair-orbit closure of {z, t z}; recomputed at every base
/// point. Throws NotInvolution or HasFixedPoint.
int char_number(const GroupDesc& g, const Perm& t);

/// |{g t g^-1 (x) : g in G}| straight from the definition.
int char_number_bruteforce(const std::vector<Perm>& elements, const Perm& t, int x = 0);

struct FpfClass {
  Perm representative;
  int c = 0;
  bool satisfies_star = false;      // c = n - 1
  bool satisfies_starstar = false;  // c > n / 2
};

struct GroupAnalysis {
  std::string label;
  int degree = 0;
  bool is_transitive = false;
  bool is_two_transitive = false;
  bool has_fpf_involution = false;
  std::vector<FpfClass> fpf_classes;
  std::optional<std::size_t> order;

  bool any_star() const;
  bool any_starstar() const;
  /// Membership in the four table columns.
  std::array<bool, 4> columns() const;
};

GroupAnalysis classify(const GroupDesc& g, std::size_t bound);

struct TableRow {
  int degree = 0;
  std::size_t groups = 0;
  std::array<std::size_t, 4> counts{};
  std::array<std::vector<std::string>, 4> labels;
  std::vector<std::string> failures;
  std::vector<GroupAnalysis> analyses;
};

/// Classifies every entry of the given degree (all entries when degree is 0).
TableRow classify_catalog(const std::vector<GroupDesc>& catalog, int degree, std::size_t bound,
                          bool parallel = true);

/// Reads `degree;label;gen1,gen2,...` lines; '#' starts a comment line.
std::vector<GroupDesc> parse_catalog(std::string_view text);
std::vector<GroupDesc> load_catalog(const std::string& path);

}  // namespace qsos

#endif  // QSOS_GROUP_HPP
