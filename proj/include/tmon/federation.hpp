// Finite unions of zones.

#ifndef TMON_FEDERATION_HPP
#define TMON_FEDERATION_HPP

#include "tmon/zone.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tmon {

/// A union of non-empty canonical zones of one dimension. No member is included
/// in another member. The empty list is the empty set.
class Federation {
public:
  explicit Federation(std::size_t dim) : dim_(dim) {}
  explicit Federation(const Zone& z);

  static Federation universal(std::size_t dim) { return Federation(Zone::universal(dim)); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return zones_.size(); }
  bool is_empty() const noexcept { return zones_.empty(); }
  std::span<const Zone> zones() const noexcept { return zones_; }
  auto begin() const noexcept { return zones_.begin(); }
  auto end() const noexcept { return zones_.end(); }

  /// Adds z unless it is already covered by a single member; drops members covered by z.
  /// Returns false when z was subsumed (or empty).
  bool add(const Zone& z);

  [[nodiscard]] Federation unite(const Federation& other) const;
  [[nodiscard]] Federation intersect(const Federation& other) const;
  [[nodiscard]] Federation intersect(const Zone& z) const;
  /// Set difference; the zones produced for each member are pairwise disjoint.
  [[nodiscard]] Federation subtract(const Federation& other) const;
  [[nodiscard]] Federation subtract(const Zone& z) const;
  /// Universal zone minus this federation.
  [[nodiscard]] Federation complement() const;

  /// Applies a zone operation to every member. The results have dimension `new_dim`.
  [[nodiscard]] Federation map(const std::function<Zone(const Zone&)>& op, std::size_t new_dim) const;

  /// Semantic inclusion of `other` in this set.
  bool includes(const Federation& other) const;
  bool includes(const Zone& z) const;
  bool intersects(const Zone& z) const;
  bool intersects(const Federation& other) const;

  /// Set equality by mutual inclusion.
  bool same_set(const Federation& other) const { return includes(other) && other.includes(*this); }

  std::string to_string(std::span<const std::string> clock_names) const;

private:
  std::size_t dim_;
  std::vector<Zone> zones_;
};

/// z \ cut as a list of pairwise disjoint non-empty zones. Negated constraints of
/// `cut` are split off in row-major order.
std::vector<Zone> subtract(const Zone& z, const Zone& cut);

} // namespace tmon

#endif // TMON_FEDERATION_HPP
