#include "permsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "permsym/errors.hpp"

namespace permsym {

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidInputError("permutation arity must be >= 1");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw InvalidInputError("permutation arity must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw InvalidInputError("image list is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
  Permutation g(n);
  g.images_ = std::move(images);
  return g;
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
  Permutation g(n);
  if (cycle.empty()) return g;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : cycle) {
    if (v < 1 || v > n) throw InvalidInputError("cycle entry out of range 1..n");
    if (seen[static_cast<std::size_t>(v) - 1]) throw InvalidInputError("repeated index inside one cycle");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i];
    const int to = cycle[(i + 1) % cycle.size()];
    g.images_[static_cast<std::size_t>(from) - 1] = to;
  }
  return g;
}

Permutation Permutation::transposition(int n, int i, int j) {
  return from_cycle(n, {i, j});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw InvalidInputError("arity mismatch in permutation composition");
  Permutation out(n());
  for (int j = 1; j <= n(); ++j) out.images_[static_cast<std::size_t>(j) - 1] = (*this)(rhs(j));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(n());
  for (int j = 1; j <= n(); ++j) out.images_[static_cast<std::size_t>((*this)(j)) - 1] = j;
  return out;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= n(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(static_cast<std::size_t>(n()), false);
  for (int start = 1; start <= n(); ++start) {
    if (visited[static_cast<std::size_t>(start) - 1] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      visited[static_cast<std::size_t>(cur) - 1] = true;
      cycle.push_back(cur);
      cur = (*this)(cur);
    } while (cur != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

std::int64_t Permutation::order() const {
  std::int64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::int64_t>(c.size()));
  return ord;
}

namespace {

std::vector<std::vector<int>> tokenize_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInputError("malformed cycle notation: expected '('");
    ++i;
    std::vector<int> cycle;
    bool expect_value = true;
    while (i < text.size() && text[i] != ')') {
      const char ch = text[i];
      if (ch == ',') {
        if (expect_value) throw InvalidInputError("malformed cycle notation: stray comma");
        expect_value = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InvalidInputError(std::string("malformed cycle notation: unexpected character '") + ch + "'");
      int value = 0;
      if (n <= 9) {
        value = ch - '0';
        ++i;
      } else {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          ++i;
        }
      }
      if (value < 1 || value > n) throw InvalidInputError("cycle index out of range 1..n");
      cycle.push_back(value);
      expect_value = false;
    }
    if (i >= text.size()) throw InvalidInputError("malformed cycle notation: missing ')'");
    ++i;  // consume ')'
    if (expect_value) throw InvalidInputError("malformed cycle notation: trailing separator");
    if (cycle.size() < 2) throw InvalidInputError("a cycle needs at least two entries");
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int n) {
  if (n < 1) throw InvalidInputError("permutation arity must be >= 1");
  if (text.empty()) throw InvalidInputError("empty cycle notation");
  for (char ch : text)
    if (std::isspace(static_cast<unsigned char>(ch)))
      throw InvalidInputError("cycle notation must be whitespace-free");
  if (text == "e" || text == "()") return Permutation::identity(n);

  Permutation result = Permutation::identity(n);
  // Cycles are listed left to right but applied right to left, so left-fold
  // with composition keeps the rightmost factor innermost.
  for (const auto& cycle : tokenize_cycles(text, n))
    result = result * Permutation::from_cycle(n, cycle);
  return result;
}

std::string to_cycle_string(const Permutation& g) {
  const auto cycles = g.cycles();
  if (cycles.empty()) return "e";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& g) {
  return os << to_cycle_string(g);
}

std::size_t PermutationHash::operator()(const Permutation& g) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : g.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permsym
