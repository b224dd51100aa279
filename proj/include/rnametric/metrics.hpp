#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rnametric/structure.hpp"

namespace rnametric {

/// Orders of the transposition subgroups G(Γ1), G(Γ2), their intersection
/// and their product, as base-2 exponents. |G(Γ)| = 2^|Q| because the
/// generating transpositions are disjoint.
struct SubgroupOrders {
  std::size_t log2_g1 = 0;
  std::size_t log2_g2 = 0;
  std::size_t log2_intersection = 0;
  std::size_t log2_product = 0;

  friend bool operator==(const SubgroupOrders&, const SubgroupOrders&) = default;
};

/// Involution metric from the orbit decomposition: |Q1 Δ Q2| − 2Ω.
std::size_t d_inv(const SecondaryStructure& s1, const SecondaryStructure& s2);

/// Involution metric by composing the two involutions: n minus the number
/// of cycles (fixed points included) of π(Γ1)∘π(Γ2).
std::size_t d_inv_cycles(const SecondaryStructure& s1, const SecondaryStructure& s2);

/// Subgroup metric, ln 2 · |Q1 Δ Q2|.
double d_sgr(const SecondaryStructure& s1, const SecondaryStructure& s2);

/// Subgroup metric in base 2; equal to the base-pair distance |Q1 Δ Q2|.
std::size_t d_sgr_log2(const SecondaryStructure& s1, const SecondaryStructure& s2);

SubgroupOrders subgroup_orders(const SecondaryStructure& s1, const SecondaryStructure& s2);

/// rank(S_Γ2 · S_Γ1 − Id) computed exactly.
std::size_t d_mag(const SecondaryStructure& s1, const SecondaryStructure& s2);

enum class Metric { Inv, Sgr, Sgr2, Mag };

/// "inv", "sgr", "sgr2" or "mag".
Metric parse_metric(std::string_view name);
std::string_view to_string(Metric m);

double distance(Metric m, const SecondaryStructure& s1, const SecondaryStructure& s2);
/// Integers for inv/sgr2/mag; sgr with 9 decimal places.
std::string format_distance(Metric m, double value);

}  // namespace rnametric
