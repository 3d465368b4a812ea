#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace permsym {

/// A bijection of {1..n} stored in one-line notation: images()[j-1] is the
/// image of position j. Cycle notation ("(1,3,2)", "e") is a parse/print
/// surface only; composition and application work on the one-line form.
///
/// Composition convention: (g*h)(x) = g(h(x)), matching the right-to-left
/// reading of cycle products.
class Permutation {
 public:
  explicit Permutation(int n = 1);
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> images);
  static Permutation from_cycle(int n, const std::vector<int>& cycle);
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-based position j.
  int operator()(int j) const { return images_[static_cast<std::size_t>(j) - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  std::int64_t order() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, smallest element first

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Parses a whitespace-free product of parenthesized cycles over 1..n.
/// "e" and "()" denote the identity. Cycles compose right to left. For
/// n <= 9 juxtaposed single digits are accepted as well as commas; for
/// n >= 10 commas are required.
Permutation parse_cycles(const std::string& text, int n);

/// Canonical printer: disjoint cycles, each starting at its smallest element,
/// cycles ordered by first element, fixed points omitted, commas always used.
/// The identity prints as "e". parse_cycles(to_cycle_string(g), n) == g.
std::string to_cycle_string(const Permutation& g);

std::ostream& operator<<(std::ostream& os, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const;
};

}  // namespace permsym
