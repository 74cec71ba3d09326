#include "polytope/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polytope/error.hpp"

namespace polytope {

const char* to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DuplicateId: return "DuplicateId";
  case ErrorCode::DanglingCover: return "DanglingCover";
  case ErrorCode::NotGraded: return "NotGraded";
  case ErrorCode::NotBounded: return "NotBounded";
  case ErrorCode::UnknownId: return "UnknownId";
  case ErrorCode::NotComparable: return "NotComparable";
  case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
  case ErrorCode::MissingProvenance: return "MissingProvenance";
  case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::InvalidPolytope: return "InvalidPolytope";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::MixedOperatorsWithoutParens: return "MixedOperatorsWithoutParens";
  case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

std::string pair_id(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(left.size() + right.size() + 3);
  out += '(';
  out += left;
  out += '|';
  out += right;
  out += ')';
  return out;
}

PolytopePoset PolytopePoset::from_components(std::vector<ElementSpec> elements,
                                             const std::vector<CoverSpec>& covers,
                                             std::vector<std::optional<Origin>> provenance) {
  std::unordered_map<std::string, ElementIndex> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i].id, static_cast<ElementIndex>(i)).second)
      throw Error(ErrorCode::DuplicateId, "element id '" + elements[i].id + "' repeated");
  }
  std::vector<IndexCover> indexed;
  indexed.reserve(covers.size());
  for (const auto& [lower, upper] : covers) {
    auto lo = index.find(lower);
    auto hi = index.find(upper);
    if (lo == index.end() || hi == index.end())
      throw Error(ErrorCode::DanglingCover, "cover (" + lower + ", " + upper + ") names an unknown element");
    indexed.emplace_back(lo->second, hi->second);
  }
  return from_indexed(std::move(elements), std::move(indexed), std::move(provenance));
}

PolytopePoset PolytopePoset::from_indexed(std::vector<ElementSpec> elements,
                                          std::vector<IndexCover> covers,
                                          std::vector<std::optional<Origin>> provenance) {
  PolytopePoset p;
  const std::size_t n = elements.size();
  if (n == 0)
    throw Error(ErrorCode::NotBounded, "empty poset");
  if (!provenance.empty() && provenance.size() != n)
    throw Error(ErrorCode::MissingProvenance, "provenance size does not match element count");

  p.ids_.reserve(n);
  p.ranks_.reserve(n);
  p.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].rank < -1)
      throw Error(ErrorCode::NotGraded, "element '" + elements[i].id + "' has rank below -1");
    if (!p.index_.emplace(elements[i].id, static_cast<ElementIndex>(i)).second)
      throw Error(ErrorCode::DuplicateId, "element id '" + elements[i].id + "' repeated");
    p.ids_.push_back(std::move(elements[i].id));
    p.ranks_.push_back(elements[i].rank);
  }
  p.rank_ = *std::max_element(p.ranks_.begin(), p.ranks_.end());

  const auto bottoms = std::count(p.ranks_.begin(), p.ranks_.end(), -1);
  const auto tops = std::count(p.ranks_.begin(), p.ranks_.end(), p.rank_);
  if (bottoms != 1 || (p.rank_ != -1 && tops != 1))
    throw Error(ErrorCode::NotBounded, "need exactly one element of rank -1 and one of rank " +
                                           std::to_string(p.rank_));
  p.bottom_ = static_cast<ElementIndex>(std::find(p.ranks_.begin(), p.ranks_.end(), -1) - p.ranks_.begin());
  p.top_ = static_cast<ElementIndex>(std::find(p.ranks_.begin(), p.ranks_.end(), p.rank_) - p.ranks_.begin());

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  p.up_.resize(n);
  p.down_.resize(n);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::DanglingCover, "cover index out of range");
    if (p.ranks_[hi] != p.ranks_[lo] + 1)
      throw Error(ErrorCode::NotGraded, "cover (" + p.ids_[lo] + ", " + p.ids_[hi] + ") does not raise rank by one");
    p.up_[lo].push_back(hi);
    p.down_[hi].push_back(lo);
  }
  for (auto& d : p.down_)
    std::sort(d.begin(), d.end());
  p.cover_count_ = covers.size();

  // Covers strictly raise the rank, so rank order is a topological order.
  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), ElementIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementIndex a, ElementIndex b) { return p.ranks_[a] < p.ranks_[b]; });
  p.down_set_.assign(n, Bitset(n));
  p.up_set_.assign(n, Bitset(n));
  for (ElementIndex e : order) {
    p.down_set_[e].set(e);
    for (ElementIndex c : p.down_[e])
      p.down_set_[e] |= p.down_set_[c];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    p.up_set_[*it].set(*it);
    for (ElementIndex c : p.up_[*it])
      p.up_set_[*it] |= p.up_set_[c];
  }

  p.provenance_ = provenance.empty() ? std::vector<std::optional<Origin>>(n) : std::move(provenance);
  return p;
}

std::optional<ElementIndex> PolytopePoset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementIndex PolytopePoset::index_of(std::string_view id) const {
  if (auto e = find(id))
    return *e;
  throw Error(ErrorCode::UnknownId, "no element '" + std::string(id) + "'");
}

bool PolytopePoset::covers(ElementIndex lower, ElementIndex upper) const {
  const auto& d = down_[upper];
  return std::binary_search(d.begin(), d.end(), lower);
}

bool PolytopePoset::less_eq(std::string_view a, std::string_view b) const {
  return less_eq(index_of(a), index_of(b));
}

std::vector<ElementIndex> PolytopePoset::elements_of_rank(int r) const {
  std::vector<ElementIndex> out;
  for (ElementIndex e = 0; e < size(); ++e)
    if (ranks_[e] == r)
      out.push_back(e);
  return out;
}

bool PolytopePoset::has_provenance() const noexcept {
  return std::all_of(provenance_.begin(), provenance_.end(), [](const auto& o) { return o.has_value(); });
}

std::vector<IndexCover> PolytopePoset::index_covers() const {
  std::vector<IndexCover> out;
  out.reserve(cover_count_);
  for (ElementIndex e = 0; e < size(); ++e)
    for (ElementIndex u : up_[e])
      out.emplace_back(e, u);
  return out;
}

std::vector<CoverSpec> PolytopePoset::cover_list() const {
  std::vector<CoverSpec> out;
  out.reserve(cover_count_);
  for (const auto& [lo, hi] : index_covers())
    out.emplace_back(ids_[lo], ids_[hi]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSpec> PolytopePoset::element_specs() const {
  std::vector<ElementSpec> out;
  out.reserve(size());
  for (ElementIndex e = 0; e < size(); ++e)
    out.push_back({ids_[e], ranks_[e]});
  return out;
}

Section section(const PolytopePoset& p, ElementIndex lower, ElementIndex upper) {
  if (!p.less_eq(lower, upper))
    throw Error(ErrorCode::NotComparable, p.id(lower) + " is not below " + p.id(upper));
  const Bitset members = p.up_set(lower) & p.down_set(upper);
  const int shift = p.rank_of(lower) + 1;

  std::vector<ElementIndex> local(p.size(), 0);
  std::vector<ElementSpec> elements;
  std::vector<std::optional<Origin>> provenance;
  for (ElementIndex e = 0; e < p.size(); ++e) {
    if (!members.test(e))
      continue;
    local[e] = static_cast<ElementIndex>(elements.size());
    elements.push_back({p.id(e), p.rank_of(e) - shift});
    provenance.push_back(p.origin(e));
  }
  std::vector<IndexCover> covers;
  for (ElementIndex e = 0; e < p.size(); ++e) {
    if (!members.test(e))
      continue;
    for (ElementIndex u : p.up_covers(e))
      if (members.test(u))
        covers.emplace_back(local[e], local[u]);
  }
  return Section{PolytopePoset::from_indexed(std::move(elements), std::move(covers), std::move(provenance))};
}

Section section(const PolytopePoset& p, std::string_view lower, std::string_view upper) {
  return section(p, p.index_of(lower), p.index_of(upper));
}

namespace {

std::vector<std::vector<ElementIndex>> up_covers_by_id(const PolytopePoset& p) {
  std::vector<std::vector<ElementIndex>> up(p.size());
  for (ElementIndex e = 0; e < p.size(); ++e) {
    auto span = p.up_covers(e);
    up[e].assign(span.begin(), span.end());
    std::sort(up[e].begin(), up[e].end(), [&](ElementIndex a, ElementIndex b) { return p.id(a) < p.id(b); });
  }
  return up;
}

} // namespace

std::vector<Flag> flags(const PolytopePoset& p) {
  const auto up = up_covers_by_id(p);
  std::vector<Flag> out;
  Flag chain{p.bottom()};
  std::function<void(ElementIndex)> walk = [&](ElementIndex e) {
    if (up[e].empty()) {
      if (e == p.top())
        out.push_back(chain);
      return;
    }
    for (ElementIndex u : up[e]) {
      chain.push_back(u);
      walk(u);
      chain.pop_back();
    }
  };
  walk(p.bottom());
  return out;
}

std::size_t flag_count(const PolytopePoset& p) {
  // Chains from bottom, counted in rank order.
  std::vector<ElementIndex> order(p.size());
  std::iota(order.begin(), order.end(), ElementIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementIndex a, ElementIndex b) { return p.rank_of(a) < p.rank_of(b); });
  std::vector<std::size_t> count(p.size(), 0);
  count[p.bottom()] = 1;
  for (ElementIndex e : order)
    for (ElementIndex u : p.up_covers(e))
      count[u] += count[e];
  return count[p.top()];
}

const PolytopePoset& point() {
  static const PolytopePoset pt = PolytopePoset::from_components({{"0", -1}, {"1", 0}}, {{"0", "1"}});
  return pt;
}

const PolytopePoset& edge() {
  static const PolytopePoset i = PolytopePoset::from_components(
      {{"0", -1}, {"v", 0}, {"w", 0}, {"1", 1}}, {{"0", "v"}, {"0", "w"}, {"v", "1"}, {"w", "1"}});
  return i;
}

} // namespace polytope
