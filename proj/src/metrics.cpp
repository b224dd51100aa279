#include "rnametric/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "rnametric/error.hpp"
#include "rnametric/linalg.hpp"
#include "rnametric/orbits.hpp"

namespace rnametric {

std::size_t d_inv(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  const auto orbits = decompose_orbits(s1, s2);
  return symmetric_difference_size(s1, s2) - 2 * orbits.omega;
}

std::size_t d_inv_cycles(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  require_equal_length(s1, s2);
  const Involution p1(s1), p2(s2);
  const Index n = s1.length();
  // σ(j) = π1(π2(j)): π2 acts first.
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::size_t cycles = 0;
  for (Index j = 1; j <= n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++cycles;
    for (Index k = j; !seen[static_cast<std::size_t>(k)]; k = p1(p2(k))) {
      seen[static_cast<std::size_t>(k)] = 1;
    }
  }
  return static_cast<std::size_t>(n) - cycles;
}

SubgroupOrders subgroup_orders(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  SubgroupOrders o;
  o.log2_g1 = s1.num_contacts();
  o.log2_g2 = s2.num_contacts();
  o.log2_intersection = intersection_size(s1, s2);
  o.log2_product = o.log2_g1 + o.log2_g2 - o.log2_intersection;
  return o;
}

std::size_t d_sgr_log2(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  const auto o = subgroup_orders(s1, s2);
  // log2(|G1·G2| / |G1∩G2|)
  return o.log2_product - o.log2_intersection;
}

double d_sgr(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  return std::numbers::ln2 * static_cast<double>(d_sgr_log2(s1, s2));
}

std::size_t d_mag(const SecondaryStructure& s1, const SecondaryStructure& s2) {
  require_equal_length(s1, s2);
  const auto transfer = mat_mul(structure_matrix(s2), structure_matrix(s1));
  return exact_rank(transfer.minus_identity());
}

Metric parse_metric(std::string_view name) {
  if (name == "inv") return Metric::Inv;
  if (name == "sgr") return Metric::Sgr;
  if (name == "sgr2") return Metric::Sgr2;
  if (name == "mag") return Metric::Mag;
  throw Error(ErrorKind::SyntaxError, "unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Inv: return "inv";
    case Metric::Sgr: return "sgr";
    case Metric::Sgr2: return "sgr2";
    case Metric::Mag: return "mag";
  }
  return "?";
}

double distance(Metric m, const SecondaryStructure& s1, const SecondaryStructure& s2) {
  switch (m) {
    case Metric::Inv: return static_cast<double>(d_inv(s1, s2));
    case Metric::Sgr: return d_sgr(s1, s2);
    case Metric::Sgr2: return static_cast<double>(d_sgr_log2(s1, s2));
    case Metric::Mag: return static_cast<double>(d_mag(s1, s2));
  }
  return 0.0;
}

std::string format_distance(Metric m, double value) {
  char buf[64];
  if (m == Metric::Sgr) {
    std::snprintf(buf, sizeof buf, "%.9f", value);
  } else {
    std::snprintf(buf, sizeof buf, "%.0f", value);
  }
  return buf;
}

}  // namespace rnametric
