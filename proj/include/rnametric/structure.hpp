#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rnametric {

/// 1-based base index.
using Index = std::int64_t;

/// An unordered base pair, stored with i < j.
struct Contact {
  Index i = 0;
  Index j = 0;

  static Contact of(Index a, Index b) { return a < b ? Contact{a, b} : Contact{b, a}; }

  bool crosses(const Contact& o) const {
    return (i < o.i && o.i < j && j < o.j) || (o.i < i && i < o.j && o.j < j);
  }

  friend auto operator<=>(const Contact&, const Contact&) = default;
};

/// A length-n contact structure with unique bonds and no contact between
/// consecutive bases. Pseudoknots (crossing contacts) are allowed.
/// Immutable once constructed.
class SecondaryStructure {
public:
  /// Validates and normalizes. Identical pairs collapse; see ErrorKind for
  /// the rejected cases.
  SecondaryStructure(Index n, std::span<const std::pair<Index, Index>> pairs);
  explicit SecondaryStructure(Index n) : SecondaryStructure(n, {}) {}

  Index length() const noexcept { return n_; }
  /// Sorted by left endpoint.
  std::span<const Contact> contacts() const noexcept { return contacts_; }
  std::size_t num_contacts() const noexcept { return contacts_.size(); }

  std::optional<Index> partner(Index j) const;
  bool has_contact(const Contact& c) const noexcept;

  friend bool operator==(const SecondaryStructure& a, const SecondaryStructure& b) {
    return a.n_ == b.n_ && a.contacts_ == b.contacts_;
  }

private:
  Index n_;
  std::vector<Contact> contacts_;
  // partner_[j-1] == 0 when j is isolated
  std::vector<Index> partner_;
};

SecondaryStructure new_structure(Index n, std::span<const std::pair<Index, Index>> pairs);
SecondaryStructure new_structure(Index n, std::initializer_list<std::pair<Index, Index>> pairs);

/// (Q1 ∪ Q2) − (Q1 ∩ Q2), sorted.
std::vector<Contact> symmetric_difference(const SecondaryStructure& a, const SecondaryStructure& b);
std::size_t symmetric_difference_size(const SecondaryStructure& a, const SecondaryStructure& b);
std::size_t intersection_size(const SecondaryStructure& a, const SecondaryStructure& b);

void require_equal_length(const SecondaryStructure& a, const SecondaryStructure& b);

}  // namespace rnametric
