#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "permsym/permutation.hpp"

namespace permsym {

/// An n-bit string I = i_1 i_2 ... i_n with position 1 leftmost. As a basis
/// label, i_1 is the most significant bit: index() is the value of I read as
/// a binary integer, so |0011> has index 3 for n = 4.
class BitString {
 public:
  explicit BitString(int n);  // all zeros
  static BitString from_string(const std::string& s);
  static BitString from_index(int n, std::uint64_t index);

  int n() const { return static_cast<int>(bits_.size()); }
  /// Bit at 1-based position j.
  int bit(int j) const { return bits_[static_cast<std::size_t>(j) - 1]; }
  void set_bit(int j, int value);

  std::uint64_t index() const;
  int weight() const;
  std::string str() const;
  BitString complemented() const;

  bool operator==(const BitString&) const = default;
  auto operator<=>(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// The action (g.I)_k = i_{g^{-1}(k)}: g moves the bit in position j to
/// position g(j). Satisfies (g*h).I = g.(h.I).
BitString act_on_bits(const Permutation& g, const BitString& I);

/// Same action on the packed basis index of an n-bit string.
std::uint64_t act_on_index(const Permutation& g, std::uint64_t index);

}  // namespace permsym
