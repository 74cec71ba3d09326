// Independent reference computations for the test suites. Nothing here uses
// the library's reachability bitsets or its backtracking search; only the raw
// cover lists of a PolytopePoset are read.
#ifndef POLYTOPE_TESTS_ORACLE_HPP
#define POLYTOPE_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "polytope/poset.hpp"

namespace oracle {

using polytope::ElementIndex;
using polytope::PolytopePoset;

/// Face counts by rank, index 0 holding rank -1.
using FVector = std::vector<std::uint64_t>;

inline FVector f_vector(const PolytopePoset& p) {
  FVector f(static_cast<std::size_t>(p.rank() + 2), 0);
  for (ElementIndex e = 0; e < p.size(); ++e)
    ++f[static_cast<std::size_t>(p.rank_of(e) + 1)];
  return f;
}

/// Face counts of P * Q from those of P and Q: pairs whose ranks sum to r - 1.
inline FVector join_f_vector(const FVector& p, const FVector& q) {
  FVector f(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      f[i + j] += p[i] * q[j];
  return f;
}

/// Face counts of P x Q: pairs of non-bottom faces whose ranks sum to r, plus one bottom.
inline FVector cartesian_f_vector(const FVector& p, const FVector& q) {
  FVector f(p.size() + q.size() - 2, 0);
  f[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i)
    for (std::size_t j = 1; j < q.size(); ++j)
      f[i + j - 1] += p[i] * q[j];
  return f;
}

/// a <= b by breadth-first search over up-covers.
inline bool reachable(const PolytopePoset& p, ElementIndex a, ElementIndex b) {
  std::vector<bool> seen(p.size(), false);
  std::deque<ElementIndex> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    ElementIndex x = queue.front();
    queue.pop_front();
    if (x == b)
      return true;
    for (ElementIndex u : p.up_covers(x))
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
  }
  return false;
}

/// Vertex set of every face, by depth-first descent over down-covers.
inline std::vector<std::set<ElementIndex>> vertex_sets(const PolytopePoset& p) {
  std::vector<std::set<ElementIndex>> out(p.size());
  for (ElementIndex e = 0; e < p.size(); ++e) {
    std::vector<ElementIndex> stack{e};
    std::set<ElementIndex> seen;
    while (!stack.empty()) {
      ElementIndex x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second)
        continue;
      if (p.rank_of(x) == 0)
        out[e].insert(x);
      for (ElementIndex d : p.down_covers(x))
        stack.push_back(d);
    }
  }
  return out;
}

/// |Aut| as the number of vertex permutations preserving the family of face
/// vertex sets. Valid for atomistic lattices (all face lattices built here);
/// exponential in the number of vertices.
inline std::uint64_t aut_order_by_vertex_permutations(const PolytopePoset& p) {
  const auto sets = vertex_sets(p);
  std::vector<ElementIndex> vertices = p.elements_of_rank(0);
  std::map<ElementIndex, std::size_t> slot;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    slot[vertices[i]] = i;
  std::set<std::vector<std::size_t>> faces;
  for (const auto& s : sets) {
    std::vector<std::size_t> face;
    for (ElementIndex v : s)
      face.push_back(slot[v]);
    faces.insert(face);
  }
  std::vector<std::size_t> perm(vertices.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& face : faces) {
      std::vector<std::size_t> image;
      for (std::size_t v : face)
        image.push_back(perm[v]);
      std::sort(image.begin(), image.end());
      if (!faces.count(image)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::vector<std::vector<ElementIndex>> all_flags(const PolytopePoset& p) {
  std::vector<std::vector<ElementIndex>> out;
  std::vector<std::vector<ElementIndex>> stack{{p.bottom()}};
  while (!stack.empty()) {
    auto chain = stack.back();
    stack.pop_back();
    if (chain.back() == p.top()) {
      out.push_back(chain);
      continue;
    }
    for (ElementIndex u : p.up_covers(chain.back())) {
      auto longer = chain;
      longer.push_back(u);
      stack.push_back(std::move(longer));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |Aut| of a polytope through flag propagation: an automorphism is fixed by
/// the image of one base flag and commutes with i-adjacency, so every target
/// flag is tried and the induced map checked on the cover relation.
inline std::uint64_t aut_order_by_flags(const PolytopePoset& p) {
  const auto fl = all_flags(p);
  std::map<std::vector<ElementIndex>, std::size_t> index;
  for (std::size_t i = 0; i < fl.size(); ++i)
    index[fl[i]] = i;
  const std::size_t len = fl.front().size();

  auto adjacent = [&](const std::vector<ElementIndex>& flag, std::size_t pos) {
    auto other = flag;
    for (ElementIndex u : p.up_covers(flag[pos - 1]))
      if (u != flag[pos] && p.covers(u, flag[pos + 1]))
        other[pos] = u;
    return other;
  };
  std::set<std::pair<ElementIndex, ElementIndex>> cover_set;
  for (ElementIndex e = 0; e < p.size(); ++e)
    for (ElementIndex u : p.up_covers(e))
      cover_set.emplace(e, u);

  std::uint64_t count = 0;
  for (const auto& target : fl) {
    std::vector<long> map(p.size(), -1);
    std::vector<long> flag_image(fl.size(), -1);
    std::deque<std::size_t> queue{0};
    flag_image[0] = static_cast<long>(index[target]);
    bool ok = true;
    while (ok && !queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      const auto& src = fl[f];
      const auto& dst = fl[static_cast<std::size_t>(flag_image[f])];
      for (std::size_t i = 0; i < len && ok; ++i) {
        if (map[src[i]] == -1)
          map[src[i]] = dst[i];
        else if (map[src[i]] != static_cast<long>(dst[i]))
          ok = false;
      }
      for (std::size_t pos = 1; pos + 1 < len && ok; ++pos) {
        const auto a = adjacent(src, pos);
        const auto b = adjacent(dst, pos);
        const std::size_t ai = index.at(a);
        const long bi = static_cast<long>(index.at(b));
        if (flag_image[ai] == -1) {
          flag_image[ai] = bi;
          queue.push_back(ai);
        } else if (flag_image[ai] != bi) {
          ok = false;
        }
      }
    }
    if (!ok || std::count(map.begin(), map.end(), -1) != 0)
      continue;
    std::set<long> distinct(map.begin(), map.end());
    if (distinct.size() != p.size())
      continue;
    for (const auto& [a, b] : cover_set)
      if (!cover_set.count({static_cast<ElementIndex>(map[a]), static_cast<ElementIndex>(map[b])})) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

/// Face lattice of the n-gon, built directly from vertex and edge labels.
inline PolytopePoset polygon(int n) {
  std::vector<polytope::ElementSpec> elements{{"0", -1}, {"F", 2}};
  std::vector<polytope::CoverSpec> covers;
  for (int i = 0; i < n; ++i) {
    const std::string v = "v" + std::to_string(i);
    const std::string e = "e" + std::to_string(i);
    elements.push_back({v, 0});
    elements.push_back({e, 1});
    covers.emplace_back("0", v);
    covers.emplace_back(e, "F");
    covers.emplace_back(v, e);
    covers.emplace_back("v" + std::to_string((i + 1) % n), e);
  }
  return PolytopePoset::from_components(std::move(elements), covers);
}

} // namespace oracle

#endif // POLYTOPE_TESTS_ORACLE_HPP
