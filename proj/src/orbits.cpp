#include "rnametric/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>


namespace rnametric {

Involution::Involution(const SecondaryStructure& s) : map_(static_cast<std::size_t>(s.length())) {
  std::iota(map_.begin(), map_.end(), Index{1});
  for (const auto& c : s.contacts()) {
    map_[static_cast<std::size_t>(c.i - 1)] = c.j;
    map_[static_cast<std::size_t>(c.j - 1)] = c.i;
  }
}

Involution involution_of(const SecondaryStructure& s) { return Involution(s); }

namespace {

// Each node has at most one Q1-edge and one Q2-edge; an edge present in both
// structures is a single Both edge.
struct Walker {
  const Involution& p1;
  const Involution& p2;

  bool shared(Index j) const { return p1(j) != j && p1(j) == p2(j); }

  int degree(Index j) const {
    if (shared(j)) return 1;
    return (p1(j) != j ? 1 : 0) + (p2(j) != j ? 1 : 0);
  }

  // Next node from j along the edge of the given structure, or 0.
  Index step(Index j, Origin along) const {
    const Index k = along == Origin::Q1 ? p1(j) : p2(j);
    return k == j ? 0 : k;
  }

  Origin origin_of(Index a, Index b) const {
    if (p1(a) == b && p2(a) == b) return Origin::Both;
    return p1(a) == b ? Origin::Q1 : Origin::Q2;
  }
};

Origin other(Origin o) { return o == Origin::Q1 ? Origin::Q2 : Origin::Q1; }

}  // namespace

OrbitDecomposition decompose_orbits(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  require_equal_length(s1, s2);
  const Involution p1(s1), p2(s2);
  const Walker w{p1, p2};
  const Index n = s1.length();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  OrbitDecomposition out;

  auto add_edge = [&](Orbit& o, Index a, Index b) {
    o.edges.push_back({Contact::of(a, b), w.origin_of(a, b)});
  };

  // Paths, including singletons and shared contacts, start at endpoints.
  for (Index start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)] || w.degree(start) > 1) continue;
    Orbit o;
    o.members.push_back(start);
    visited[static_cast<std::size_t>(start)] = 1;
    if (w.shared(start)) {
      const Index k = p1(start);
      o.members.push_back(k);
      visited[static_cast<std::size_t>(k)] = 1;
      add_edge(o, start, k);
      o.kind = OrbitKind::Cyclic;
      out.orbits.push_back(std::move(o));
      continue;
    }
    Origin along = p1(start) != start ? Origin::Q1 : Origin::Q2;
    Index cur = start;
    while (Index next = w.step(cur, along)) {
      assert(!visited[static_cast<std::size_t>(next)]);
      add_edge(o, cur, next);
      o.members.push_back(next);
      visited[static_cast<std::size_t>(next)] = 1;
      cur = next;
      along = other(along);
    }
    out.orbits.push_back(std::move(o));
  }

  // Whatever is left has degree two everywhere and closes into cycles.
  for (Index start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Orbit o;
    o.kind = OrbitKind::Cyclic;
    Origin along = Origin::Q1;
    Index cur = start;
    do {
      o.members.push_back(cur);
      visited[static_cast<std::size_t>(cur)] = 1;
      const Index next = w.step(cur, along);
      assert(next != 0);
      add_edge(o, cur, next);
      cur = next;
      along = other(along);
    } while (cur != start);
    assert(o.members.size() % 2 == 0);
    ++out.omega;
    out.orbits.push_back(std::move(o));
  }

  std::vector<std::pair<Index, std::size_t>> order;
  order.reserve(out.orbits.size());
  for (std::size_t k = 0; k < out.orbits.size(); ++k) {
    const auto& m = out.orbits[k].members;
    order.emplace_back(*std::min_element(m.begin(), m.end()), k);
  }
  std::sort(order.begin(), order.end());
  std::vector<Orbit> sorted;
  sorted.reserve(order.size());
  for (auto [_, k] : order) sorted.push_back(std::move(out.orbits[k]));
  out.orbits = std::move(sorted);
  return out;
}

}  // namespace rnametric
