#ifndef POLYTOPE_AUTOM_HPP
#define POLYTOPE_AUTOM_HPP

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytope/family.hpp"
#include "polytope/poset.hpp"

namespace polytope {

/// A permutation of the elements of one fixed poset, by element index.
struct FacePermutation {
  std::vector<ElementIndex> image;

  static FacePermutation identity(std::size_t n);

  std::size_t degree() const noexcept { return image.size(); }
  ElementIndex operator()(ElementIndex e) const { return image[e]; }

  auto operator<=>(const FacePermutation&) const = default;
};

/// (a * b)(x) = a(b(x)).
FacePermutation compose(const FacePermutation& a, const FacePermutation& b);
FacePermutation inverse(const FacePermutation& p);

/// Bijective, rank-preserving and order-preserving in both directions.
bool is_automorphism(const PolytopePoset& p, const FacePermutation& f);

/// The full automorphism group, sorted by image vector. Throws SearchBudgetExceeded.
std::vector<FacePermutation> automorphisms(const PolytopePoset& p, const SearchLimits& limits = {});

std::uint64_t aut_order(const PolytopePoset& p, const SearchLimits& limits = {});

/**
 * Generators for the automorphism group of a family node, built along its
 * construction history:
 *  - the edge I: the vertex swap;
 *  - x I after x I: lift, plus swapping the last two cube coordinates;
 *  - x I after * pt: lift, plus swapping the two copies of the base;
 *  - * pt after x I: lift only;
 *  - * pt after * pt: lift, plus swapping the last two cone points
 *    (the first * pt treats I as pt * pt).
 * Lifting acts on the left coordinate of the pair-encoded face ids.
 * Throws MissingProvenance if the node's lattice is not materialized.
 */
std::vector<FacePermutation> described_generators(const FamilyNode& node);

/// Order of the group generated by `generators` on `degree` points.
/// Throws ClosureBudgetExceeded once more than `max_size` elements are found.
std::uint64_t closure(const std::vector<FacePermutation>& generators, std::size_t degree,
                      std::size_t max_size = SearchLimits{}.max_closure);

/// {id: image-id}
nlohmann::json to_json(const PolytopePoset& p, const FacePermutation& f);

} // namespace polytope

#endif // POLYTOPE_AUTOM_HPP
