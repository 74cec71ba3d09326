#include "polytope/products.hpp"

#include <limits>

#include "polytope/error.hpp"

namespace polytope {

const char* to_string(Product op) {
  return op == Product::Join ? "join" : "cartesian";
}

PolytopePoset join(const PolytopePoset& p, const PolytopePoset& q) {
  const std::size_t m = q.size();
  auto at = [m](ElementIndex f, ElementIndex g) { return static_cast<ElementIndex>(f * m + g); };

  std::vector<ElementSpec> elements;
  std::vector<std::optional<Origin>> provenance;
  elements.reserve(p.size() * m);
  provenance.reserve(p.size() * m);
  for (ElementIndex f = 0; f < p.size(); ++f)
    for (ElementIndex g = 0; g < m; ++g) {
      elements.push_back({pair_id(p.id(f), q.id(g)), p.rank_of(f) + q.rank_of(g) + 1});
      provenance.push_back(Origin{p.id(f), q.id(g)});
    }

  std::vector<IndexCover> covers;
  covers.reserve(p.cover_count() * m + q.cover_count() * p.size());
  for (ElementIndex f = 0; f < p.size(); ++f)
    for (ElementIndex g = 0; g < m; ++g) {
      for (ElementIndex f2 : p.up_covers(f))
        covers.emplace_back(at(f, g), at(f2, g));
      for (ElementIndex g2 : q.up_covers(g))
        covers.emplace_back(at(f, g), at(f, g2));
    }
  return PolytopePoset::from_indexed(std::move(elements), std::move(covers), std::move(provenance));
}

PolytopePoset cartesian(const PolytopePoset& p, const PolytopePoset& q) {
  constexpr ElementIndex kNone = std::numeric_limits<ElementIndex>::max();
  std::vector<ElementIndex> local(p.size() * q.size(), kNone);
  auto slot = [&](ElementIndex f, ElementIndex g) -> ElementIndex& { return local[f * q.size() + g]; };

  std::vector<ElementSpec> elements;
  std::vector<std::optional<Origin>> provenance;
  elements.push_back({pair_id(p.id(p.bottom()), q.id(q.bottom())), -1});
  provenance.push_back(Origin{p.id(p.bottom()), q.id(q.bottom())});
  for (ElementIndex f = 0; f < p.size(); ++f) {
    if (f == p.bottom())
      continue;
    for (ElementIndex g = 0; g < q.size(); ++g) {
      if (g == q.bottom())
        continue;
      slot(f, g) = static_cast<ElementIndex>(elements.size());
      elements.push_back({pair_id(p.id(f), q.id(g)), p.rank_of(f) + q.rank_of(g)});
      provenance.push_back(Origin{p.id(f), q.id(g)});
    }
  }

  std::vector<IndexCover> covers;
  for (ElementIndex f = 0; f < p.size(); ++f) {
    if (f == p.bottom())
      continue;
    for (ElementIndex g = 0; g < q.size(); ++g) {
      if (g == q.bottom())
        continue;
      const ElementIndex here = slot(f, g);
      if (p.rank_of(f) == 0 && q.rank_of(g) == 0)
        covers.emplace_back(0, here);
      for (ElementIndex f2 : p.up_covers(f))
        covers.emplace_back(here, slot(f2, g));
      for (ElementIndex g2 : q.up_covers(g))
        covers.emplace_back(here, slot(f, g2));
    }
  }
  return PolytopePoset::from_indexed(std::move(elements), std::move(covers), std::move(provenance));
}

PolytopePoset apply(Product op, const PolytopePoset& p, const PolytopePoset& q) {
  return op == Product::Join ? join(p, q) : cartesian(p, q);
}

PolytopePoset power(const PolytopePoset& p, Product op, int k) {
  if (k < 1)
    throw Error(ErrorCode::NonPositiveExponent, "exponent " + std::to_string(k) + " is below 1");
  PolytopePoset out = p;
  for (int i = 1; i < k; ++i)
    out = apply(op, out, p);
  return out;
}

std::uint64_t product_size(Product op, std::uint64_t p_size, std::uint64_t q_size) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (op == Product::Cartesian) {
    if (p_size == 0 || q_size == 0)
      return 1;
    --p_size;
    --q_size;
  }
  if (q_size != 0 && p_size > kMax / q_size)
    return kMax;
  const std::uint64_t prod = p_size * q_size;
  if (op == Product::Cartesian)
    return prod == kMax ? kMax : prod + 1;
  return prod;
}

} // namespace polytope
