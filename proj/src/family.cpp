#include "naads/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "naads/errors.hpp"

namespace naads {

MapFamily::MapFamily(std::string name, SpaceKind space, Rule rule, FamilyTraits traits,
                     std::shared_ptr<const exact::RationalRotationFamily> exact_view)
    : name_(std::move(name)),
      space_(space),
      rule_(std::move(rule)),
      traits_(traits),
      exact_(std::move(exact_view)),
      table_(std::make_shared<Table>()) {
  if (!rule_) throw ConstructionError("family '" + name_ + "' has no rule");
  if (exact_ && space_ != SpaceKind::Circle) {
    throw ConstructionError("exact rotation view on a non-circle family");
  }
}

const Homeomorphism& MapFamily::materialize_locked(Table& t, std::int64_t n) const {
  while (static_cast<std::int64_t>(t.maps.size()) < n) {
    const auto index = static_cast<std::int64_t>(t.maps.size()) + 1;
    Homeomorphism h = rule_(index);
    if (h.space() != space_) {
      throw ConstructionError("family '" + name_ + "': f_" + std::to_string(index) +
                              " acts on the wrong space");
    }
    t.maps.push_back(std::move(h));
  }
  return t.maps[static_cast<std::size_t>(n - 1)];
}

const Homeomorphism& MapFamily::map(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("map index must be >= 1");
  std::lock_guard lock(table_->mutex);
  return materialize_locked(*table_, n);
}

std::vector<const Homeomorphism*> MapFamily::maps_upto(std::int64_t n) const {
  std::vector<const Homeomorphism*> out;
  if (n < 1) return out;
  out.reserve(static_cast<std::size_t>(n));
  std::lock_guard lock(table_->mutex);
  materialize_locked(*table_, n);
  for (std::int64_t i = 0; i < n; ++i) out.push_back(&table_->maps[static_cast<std::size_t>(i)]);
  return out;
}

MapFamily rotation_family(std::string name, exact::RationalRotationFamily exact, FamilyTraits traits) {
  auto view = std::make_shared<const exact::RationalRotationFamily>(std::move(exact));
  auto rule = [view](std::int64_t n) { return Homeomorphism::rotation(view->step(n)); };
  return MapFamily(std::move(name), SpaceKind::Circle, rule, traits, view);
}

MapFamily cyclic_family(std::string name, SpaceKind space, std::vector<Homeomorphism> maps,
                        FamilyTraits traits) {
  if (maps.empty()) throw ConstructionError("cyclic family needs at least one map");
  for (const auto& m : maps) {
    if (m.space() != space) throw ConstructionError("cyclic family mixes spaces");
  }
  std::shared_ptr<const exact::RationalRotationFamily> view;
  const bool all_exact = std::all_of(maps.begin(), maps.end(),
                                     [](const Homeomorphism& h) { return h.exact_rotation().has_value(); });
  if (space == SpaceKind::Circle && all_exact) {
    std::vector<mpq_class> angles;
    for (const auto& m : maps) angles.push_back(m.exact_rotation()->value());
    view = std::make_shared<const exact::RationalRotationFamily>(
        name, [angles](std::int64_t n) { return angles[static_cast<std::size_t>((n - 1) % static_cast<std::int64_t>(angles.size()))]; });
  }
  auto rule = [maps = std::move(maps)](std::int64_t n) {
    return maps[static_cast<std::size_t>((n - 1) % static_cast<std::int64_t>(maps.size()))];
  };
  return MapFamily(std::move(name), space, rule, traits, view);
}

MapFamily block_family(const MapFamily& family, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("block length must be >= 1");
  if (r == 1) return family;
  auto rule = [family, r](std::int64_t k) {
    std::vector<Homeomorphism> parts;
    parts.reserve(static_cast<std::size_t>(r));
    for (std::int64_t i = (k - 1) * r + 1; i <= k * r; ++i) parts.push_back(family.map(i));
    return Homeomorphism::composite(std::move(parts));
  };
  std::shared_ptr<const exact::RationalRotationFamily> view;
  if (const auto* ex = family.exact_view()) {
    view = std::make_shared<const exact::RationalRotationFamily>(exact::block_family(*ex, r));
  }
  return MapFamily(family.name() + "/block" + std::to_string(r), family.space(), rule, family.traits(), view);
}

}  // namespace naads
