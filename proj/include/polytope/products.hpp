#ifndef POLYTOPE_PRODUCTS_HPP
#define POLYTOPE_PRODUCTS_HPP

#include <cstdint>

#include "polytope/poset.hpp"

namespace polytope {

enum class Product { Cartesian, Join };

const char* to_string(Product op);

/// P * Q: all pairs (F, G), rank(F) + rank(G) + 1, componentwise order.
PolytopePoset join(const PolytopePoset& p, const PolytopePoset& q);

/// P x Q: pairs of proper-or-top faces plus the joint bottom (0_P, 0_Q), rank(F) + rank(G).
PolytopePoset cartesian(const PolytopePoset& p, const PolytopePoset& q);

PolytopePoset apply(Product op, const PolytopePoset& p, const PolytopePoset& q);

/// Left-associated k-fold product; throws NonPositiveExponent for k < 1.
PolytopePoset power(const PolytopePoset& p, Product op, int k);

/// Element counts of the products without building them (saturating at UINT64_MAX).
std::uint64_t product_size(Product op, std::uint64_t p_size, std::uint64_t q_size);

} // namespace polytope

#endif // POLYTOPE_PRODUCTS_HPP
