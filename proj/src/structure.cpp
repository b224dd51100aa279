#include "rnametric/structure.hpp"

#include <algorithm>
#include <string>

#include "rnametric/error.hpp"

namespace rnametric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AdjacentContact: return "AdjacentContact";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateBond: return "DuplicateBond";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnbalancedBracket: return "UnbalancedBracket";
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::TooManyFamilies: return "TooManyFamilies";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string pair_str(Index a, Index b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

SecondaryStructure::SecondaryStructure(Index n, std::span<const std::pair<Index, Index>> pairs)
    : n_(n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidLength, "structure length must be positive, got " + std::to_string(n));
  }
  contacts_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "contact " + pair_str(a, b) + " outside [1," + std::to_string(n) + "]");
    }
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "contact " + pair_str(a, b) + " is a self-loop");
    }
    auto c = Contact::of(a, b);
    if (c.j - c.i == 1) {
      throw Error(ErrorKind::AdjacentContact,
                  "contact " + pair_str(a, b) + " joins consecutive bases");
    }
    contacts_.push_back(c);
  }
  std::sort(contacts_.begin(), contacts_.end());
  contacts_.erase(std::unique(contacts_.begin(), contacts_.end()), contacts_.end());

  partner_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& c : contacts_) {
    for (auto [x, y] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
      auto& slot = partner_[static_cast<std::size_t>(x - 1)];
      if (slot != 0) {
        throw Error(ErrorKind::DuplicateBond,
                    "base " + std::to_string(x) + " bonds to both " + std::to_string(slot) +
                        " and " + std::to_string(y));
      }
      slot = y;
    }
  }
}

std::optional<Index> SecondaryStructure::partner(Index j) const {
  if (j < 1 || j > n_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(j) + " outside [1," + std::to_string(n_) + "]");
  }
  auto k = partner_[static_cast<std::size_t>(j - 1)];
  if (k == 0) return std::nullopt;
  return k;
}

bool SecondaryStructure::has_contact(const Contact& c) const noexcept {
  if (c.i < 1 || c.j > n_ || c.i >= c.j) return false;
  return partner_[static_cast<std::size_t>(c.i - 1)] == c.j;
}

SecondaryStructure new_structure(Index n, std::span<const std::pair<Index, Index>> pairs) {
  return SecondaryStructure(n, pairs);
}

SecondaryStructure new_structure(Index n, std::initializer_list<std::pair<Index, Index>> pairs) {
  return SecondaryStructure(n, std::span<const std::pair<Index, Index>>(pairs.begin(), pairs.size()));
}

void require_equal_length(const SecondaryStructure& a, const SecondaryStructure& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorKind::LengthMismatch, "structures have lengths " + std::to_string(a.length()) +
                                               " and " + std::to_string(b.length()));
  }
}

std::vector<Contact> symmetric_difference(const SecondaryStructure& a, const SecondaryStructure& b) {
  require_equal_length(a, b);
  std::vector<Contact> out;
  std::set_symmetric_difference(a.contacts().begin(), a.contacts().end(), b.contacts().begin(),
                                b.contacts().end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const SecondaryStructure& a, const SecondaryStructure& b) {
  require_equal_length(a, b);
  std::size_t shared = 0;
  for (const auto& c : a.contacts()) {
    if (b.has_contact(c)) ++shared;
  }
  return shared;
}

std::size_t symmetric_difference_size(const SecondaryStructure& a, const SecondaryStructure& b) {
  return a.num_contacts() + b.num_contacts() - 2 * intersection_size(a, b);
}

}  // namespace rnametric
