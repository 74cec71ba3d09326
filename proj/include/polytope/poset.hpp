#ifndef POLYTOPE_POSET_HPP
#define POLYTOPE_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace polytope {

using ElementIndex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct ElementSpec {
  std::string id;
  int rank = 0;
};

/// Parent ids of a face built by a product: the face is the pair (left, right).
struct Origin {
  std::string left;
  std::string right;

  bool operator==(const Origin&) const = default;
};

using CoverSpec = std::pair<std::string, std::string>;
using IndexCover = std::pair<ElementIndex, ElementIndex>;

/// Element id of the product face (left, right): "(left|right)".
std::string pair_id(std::string_view left, std::string_view right);

/// Caps on the brute-force searches.
struct SearchLimits {
  std::size_t max_elements = 1000;
  std::size_t max_closure = 1000000;
};

/**
 * A finite ranked poset given by its cover relation (Hasse diagram).
 *
 * Construction checks ids, cover endpoints, unique bottom/top rank labels and
 * that every cover raises the rank by exactly one. The remaining polytope
 * axioms are checked by verify_polytope(), so a PolytopePoset need not be an
 * abstract polytope.
 *
 * Reachability is precomputed as bitsets in both directions. Immutable after
 * construction.
 */
class PolytopePoset {
public:
  static PolytopePoset from_components(std::vector<ElementSpec> elements,
                                       const std::vector<CoverSpec>& covers,
                                       std::vector<std::optional<Origin>> provenance = {});

  /// Same as from_components() with covers given by element position.
  static PolytopePoset from_indexed(std::vector<ElementSpec> elements,
                                    std::vector<IndexCover> covers,
                                    std::vector<std::optional<Origin>> provenance = {});

  std::size_t size() const noexcept { return ids_.size(); }
  int rank() const noexcept { return rank_; }

  ElementIndex bottom() const noexcept { return bottom_; }
  ElementIndex top() const noexcept { return top_; }

  const std::string& id(ElementIndex e) const { return ids_[e]; }
  int rank_of(ElementIndex e) const { return ranks_[e]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<ElementIndex> find(std::string_view id) const;
  /// Throws UnknownId.
  ElementIndex index_of(std::string_view id) const;

  std::span<const ElementIndex> up_covers(ElementIndex e) const { return up_[e]; }
  std::span<const ElementIndex> down_covers(ElementIndex e) const { return down_[e]; }
  bool covers(ElementIndex lower, ElementIndex upper) const;

  /// Elements x with x <= e.
  const Bitset& down_set(ElementIndex e) const { return down_set_[e]; }
  /// Elements x with e <= x.
  const Bitset& up_set(ElementIndex e) const { return up_set_[e]; }

  bool less_eq(ElementIndex a, ElementIndex b) const { return down_set_[b].test(a); }
  bool less_eq(std::string_view a, std::string_view b) const;

  std::vector<ElementIndex> elements_of_rank(int r) const;

  const std::optional<Origin>& origin(ElementIndex e) const { return provenance_[e]; }
  bool has_provenance() const noexcept;

  std::size_t cover_count() const noexcept { return cover_count_; }
  /// All covers as id pairs, sorted lexicographically.
  std::vector<CoverSpec> cover_list() const;
  std::vector<IndexCover> index_covers() const;

  std::vector<ElementSpec> element_specs() const;

private:
  PolytopePoset() = default;

  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::vector<std::vector<ElementIndex>> up_;
  std::vector<std::vector<ElementIndex>> down_;
  std::vector<Bitset> down_set_;
  std::vector<Bitset> up_set_;
  std::vector<std::optional<Origin>> provenance_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::size_t cover_count_ = 0;
  int rank_ = -1;
  ElementIndex bottom_ = 0;
  ElementIndex top_ = 0;
};

/// The interval G/F re-ranked so that F has rank -1.
struct Section {
  PolytopePoset carrier;
};

Section section(const PolytopePoset& p, ElementIndex lower, ElementIndex upper);
Section section(const PolytopePoset& p, std::string_view lower, std::string_view upper);

using Flag = std::vector<ElementIndex>;

/// Maximal chains from bottom to top, in lexicographic order of their id sequences.
std::vector<Flag> flags(const PolytopePoset& p);
std::size_t flag_count(const PolytopePoset& p);

/// Canonical rank-0 and rank-1 polytopes. Ids: pt = {0, 1}; I = {0, v, w, 1}.
const PolytopePoset& point();
const PolytopePoset& edge();

} // namespace polytope

#endif // POLYTOPE_POSET_HPP
