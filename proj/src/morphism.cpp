#include "polytope/morphism.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "polytope/error.hpp"

namespace polytope {

namespace {

constexpr ElementIndex kUnassigned = std::numeric_limits<ElementIndex>::max();

struct Signature {
  int rank;
  std::size_t down_set;
  std::size_t up_set;
  std::size_t down_covers;
  std::size_t up_covers;

  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const PolytopePoset& p) {
  std::vector<Signature> out;
  out.reserve(p.size());
  for (ElementIndex e = 0; e < p.size(); ++e)
    out.push_back({p.rank_of(e), p.down_set(e).count(), p.up_set(e).count(), p.down_covers(e).size(),
                   p.up_covers(e).size()});
  return out;
}

struct Step {
  ElementIndex element;
  ElementIndex anchor = kUnassigned;
  bool anchor_below = false; // anchor is covered by element
};

std::vector<Step> plan_order(const PolytopePoset& p, const std::vector<Signature>& sig) {
  const std::size_t n = p.size();
  std::vector<std::size_t> class_size(n);
  {
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    for (ElementIndex e = 0; e < n; ++e) {
      auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), sig[e]);
      class_size[e] = static_cast<std::size_t>(hi - lo);
    }
  }
  auto degree = [&](ElementIndex e) { return p.up_covers(e).size() + p.down_covers(e).size(); };

  std::vector<bool> placed(n, false);
  std::vector<std::size_t> anchor_degree(n, std::numeric_limits<std::size_t>::max());
  std::vector<Step> best(n);
  std::vector<Step> order;
  order.reserve(n);

  for (std::size_t round = 0; round < n; ++round) {
    ElementIndex pick = kUnassigned;
    for (ElementIndex e = 0; e < n; ++e) {
      if (placed[e] || best[e].anchor == kUnassigned)
        continue;
      if (pick == kUnassigned || anchor_degree[e] < anchor_degree[pick])
        pick = e;
    }
    Step step;
    if (pick != kUnassigned) {
      step = best[pick];
      step.element = pick;
    } else {
      for (ElementIndex e = 0; e < n; ++e) {
        if (placed[e])
          continue;
        if (pick == kUnassigned || std::tie(class_size[e], sig[e]) < std::tie(class_size[pick], sig[pick]))
          pick = e;
      }
      step.element = pick;
    }
    placed[pick] = true;
    order.push_back(step);

    const std::size_t d = degree(pick);
    for (ElementIndex u : p.up_covers(pick))
      if (!placed[u] && d < anchor_degree[u]) {
        anchor_degree[u] = d;
        best[u] = {u, pick, true};
      }
    for (ElementIndex u : p.down_covers(pick))
      if (!placed[u] && d < anchor_degree[u]) {
        anchor_degree[u] = d;
        best[u] = {u, pick, false};
      }
  }
  return order;
}

class Search {
public:
  Search(const PolytopePoset& from, const PolytopePoset& to, const MappingVisitor& visit)
      : from_(from), to_(to), visit_(visit), from_sig_(signatures(from)), to_sig_(signatures(to)),
        image_(from.size(), kUnassigned), preimage_(to.size(), kUnassigned) {}

  std::size_t run() {
    auto a = from_sig_;
    auto b = to_sig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return 0;
    for (ElementIndex c = 0; c < to_.size(); ++c)
      by_signature_.emplace_back(to_sig_[c], c);
    std::sort(by_signature_.begin(), by_signature_.end());
    plan_ = plan_order(from_, from_sig_);
    extend(0);
    return visited_;
  }

private:
  bool extend(std::size_t pos) {
    if (pos == plan_.size()) {
      ++visited_;
      return visit_(image_);
    }
    const Step& step = plan_[pos];
    const ElementIndex e = step.element;
    auto try_candidate = [&](ElementIndex c) {
      if (preimage_[c] != kUnassigned || to_sig_[c] != from_sig_[e] || !consistent(e, c))
        return true;
      image_[e] = c;
      preimage_[c] = e;
      const bool more = extend(pos + 1);
      image_[e] = kUnassigned;
      preimage_[c] = kUnassigned;
      return more;
    };

    if (step.anchor != kUnassigned) {
      const ElementIndex anchor_image = image_[step.anchor];
      auto candidates = step.anchor_below ? to_.up_covers(anchor_image) : to_.down_covers(anchor_image);
      for (ElementIndex c : candidates)
        if (!try_candidate(c))
          return false;
      return true;
    }
    auto lo = std::lower_bound(by_signature_.begin(), by_signature_.end(),
                               std::make_pair(from_sig_[e], ElementIndex{0}));
    for (auto it = lo; it != by_signature_.end() && it->first == from_sig_[e]; ++it)
      if (!try_candidate(it->second))
        return false;
    return true;
  }

  bool consistent(ElementIndex e, ElementIndex c) const {
    std::size_t assigned = 0;
    for (ElementIndex d : from_.down_covers(e)) {
      if (image_[d] == kUnassigned)
        continue;
      if (!to_.covers(image_[d], c))
        return false;
      ++assigned;
    }
    for (ElementIndex u : from_.up_covers(e)) {
      if (image_[u] == kUnassigned)
        continue;
      if (!to_.covers(c, image_[u]))
        return false;
      ++assigned;
    }
    std::size_t assigned_at_target = 0;
    for (ElementIndex d : to_.down_covers(c))
      assigned_at_target += preimage_[d] != kUnassigned;
    for (ElementIndex u : to_.up_covers(c))
      assigned_at_target += preimage_[u] != kUnassigned;
    return assigned == assigned_at_target;
  }

  const PolytopePoset& from_;
  const PolytopePoset& to_;
  const MappingVisitor& visit_;
  std::vector<Signature> from_sig_;
  std::vector<Signature> to_sig_;
  std::vector<std::pair<Signature, ElementIndex>> by_signature_;
  std::vector<Step> plan_;
  Mapping image_;
  Mapping preimage_;
  std::size_t visited_ = 0;
};

} // namespace

std::size_t for_each_isomorphism(const PolytopePoset& from, const PolytopePoset& to,
                                 const MappingVisitor& visit, const SearchLimits& limits) {
  if (from.size() > limits.max_elements || to.size() > limits.max_elements)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "poset has " + std::to_string(std::max(from.size(), to.size())) + " elements, cap is " +
                    std::to_string(limits.max_elements));
  if (from.size() != to.size() || from.rank() != to.rank() || from.cover_count() != to.cover_count())
    return 0;
  Search search(from, to, visit);
  return search.run();
}

std::optional<Mapping> is_isomorphic(const PolytopePoset& p, const PolytopePoset& q, const SearchLimits& limits) {
  std::optional<Mapping> found;
  for_each_isomorphism(
      p, q,
      [&](std::span<const ElementIndex> m) {
        found.emplace(m.begin(), m.end());
        return false;
      },
      limits);
  return found;
}

std::map<std::string, std::string> mapping_ids(const PolytopePoset& from, const PolytopePoset& to,
                                               std::span<const ElementIndex> mapping) {
  std::map<std::string, std::string> out;
  for (ElementIndex e = 0; e < mapping.size(); ++e)
    out.emplace(from.id(e), to.id(mapping[e]));
  return out;
}

bool is_order_isomorphism(const PolytopePoset& from, const PolytopePoset& to,
                          std::span<const ElementIndex> mapping) {
  if (from.size() != to.size() || mapping.size() != from.size())
    return false;
  std::vector<bool> hit(to.size(), false);
  for (ElementIndex e = 0; e < mapping.size(); ++e) {
    if (mapping[e] >= to.size() || hit[mapping[e]])
      return false;
    hit[mapping[e]] = true;
    if (from.rank_of(e) != to.rank_of(mapping[e]))
      return false;
  }
  for (ElementIndex a = 0; a < from.size(); ++a)
    for (ElementIndex b = 0; b < from.size(); ++b)
      if (from.less_eq(a, b) != to.less_eq(mapping[a], mapping[b]))
        return false;
  return true;
}

} // namespace polytope
