#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "naads/exact_circle.hpp"
#include "naads/homeomorphism.hpp"
#include "naads/space.hpp"

namespace naads {

/// Structural claims about a family. They are declarations; the audits in
/// flow.hpp check them on samples.
struct FamilyTraits {
  bool commutative = false;
  bool isometric = false;
};

/// The sequence n -> f_n (n >= 1) generating a non-autonomous system.
///
/// Maps are materialized lazily and memoized; copies share the memo, which
/// is internally synchronized, so a family can be read from several threads.
class MapFamily {
 public:
  using Rule = std::function<Homeomorphism(std::int64_t)>;

  MapFamily(std::string name, SpaceKind space, Rule rule, FamilyTraits traits = {},
            std::shared_ptr<const exact::RationalRotationFamily> exact_view = nullptr);

  const std::string& name() const { return name_; }
  SpaceKind space() const { return space_; }
  const FamilyTraits& traits() const { return traits_; }
  bool declared_commutative() const { return traits_.commutative; }
  bool declared_isometric() const { return traits_.isometric; }

  /// f_n for n >= 1. The reference stays valid for the family's lifetime.
  const Homeomorphism& map(std::int64_t n) const;

  /// f_1 .. f_n, in index order.
  std::vector<const Homeomorphism*> maps_upto(std::int64_t n) const;

  /// Exact rotation view, present for rational rotation families.
  const exact::RationalRotationFamily* exact_view() const { return exact_.get(); }
  std::shared_ptr<const exact::RationalRotationFamily> exact_view_ptr() const { return exact_; }

 private:
  struct Table {
    std::mutex mutex;
    std::deque<Homeomorphism> maps;
  };

  const Homeomorphism& materialize_locked(Table& t, std::int64_t n) const;

  std::string name_;
  SpaceKind space_;
  Rule rule_;
  FamilyTraits traits_;
  std::shared_ptr<const exact::RationalRotationFamily> exact_;
  std::shared_ptr<Table> table_;
};

/// Rotation family whose float maps derive from the exact angles.
MapFamily rotation_family(std::string name, exact::RationalRotationFamily exact,
                          FamilyTraits traits = {true, true});

/// Family repeating `maps` cyclically: f_n = maps[(n-1) mod size].
MapFamily cyclic_family(std::string name, SpaceKind space, std::vector<Homeomorphism> maps,
                        FamilyTraits traits = {});

/// The block family whose k-th map is f_{kr} o ... o f_{(k-1)r+1}.
/// block_family(f, 1) evaluates identically to f.
MapFamily block_family(const MapFamily& family, std::int64_t r);

}  // namespace naads
