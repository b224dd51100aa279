#pragma once

#include <vector>

#include "rnametric/structure.hpp"

namespace rnametric {

/// The permutation of [n] swapping the two ends of every contact.
class Involution {
public:
  explicit Involution(const SecondaryStructure& s);

  Index size() const noexcept { return static_cast<Index>(map_.size()); }
  /// Image of j (1-based); j itself when j is isolated.
  Index operator()(Index j) const { return map_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<Index>& images() const noexcept { return map_; }

private:
  std::vector<Index> map_;
};

Involution involution_of(const SecondaryStructure& s);

enum class OrbitKind { Linear, Cyclic };
enum class Origin { Q1, Q2, Both };

struct OrbitEdge {
  Contact contact;
  Origin origin;
};

/// An orbit of the group generated by two structure involutions, listed as
/// the contact path it traces. Linear orbits start at their smaller
/// endpoint; cyclic ones start at their smallest member and step along the
/// first structure's contact first. A cyclic orbit lists its closing edge.
struct Orbit {
  std::vector<Index> members;
  OrbitKind kind = OrbitKind::Linear;
  std::vector<OrbitEdge> edges;

  std::size_t size() const noexcept { return members.size(); }
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // ordered by smallest member
  std::size_t omega = 0;      // cyclic orbits with more than two members
};

OrbitDecomposition decompose_orbits(const SecondaryStructure& s1, const SecondaryStructure& s2);

}  // namespace rnametric
