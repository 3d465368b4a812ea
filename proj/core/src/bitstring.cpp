#include "permsym/bitstring.hpp"

#include <algorithm>

#include "permsym/errors.hpp"

namespace permsym {

BitString::BitString(int n) {
  if (n < 1 || n > 63) throw InvalidInputError("bit string length must be in 1..63");
  bits_.assign(static_cast<std::size_t>(n), 0);
}

BitString BitString::from_string(const std::string& s) {
  BitString out(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw InvalidInputError("bit string must consist of 0s and 1s");
    out.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return out;
}

BitString BitString::from_index(int n, std::uint64_t index) {
  BitString out(n);
  if (n < 64 && index >> n) throw InvalidInputError("index does not fit in n bits");
  for (int j = 1; j <= n; ++j) out.bits_[static_cast<std::size_t>(j) - 1] = (index >> (n - j)) & 1u;
  return out;
}

void BitString::set_bit(int j, int value) {
  if (j < 1 || j > n()) throw InvalidInputError("bit position out of range");
  bits_[static_cast<std::size_t>(j) - 1] = value ? 1 : 0;
}

std::uint64_t BitString::index() const {
  std::uint64_t v = 0;
  for (std::uint8_t b : bits_) v = (v << 1) | b;
  return v;
}

int BitString::weight() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitString::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BitString BitString::complemented() const {
  BitString out(n());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] ? 0 : 1;
  return out;
}

BitString act_on_bits(const Permutation& g, const BitString& I) {
  if (g.n() != I.n()) throw InvalidInputError("arity mismatch between permutation and bit string");
  BitString out(I.n());
  for (int j = 1; j <= I.n(); ++j) out.set_bit(g(j), I.bit(j));
  return out;
}

std::uint64_t act_on_index(const Permutation& g, std::uint64_t index) {
  const int n = g.n();
  std::uint64_t out = 0;
  for (int j = 1; j <= n; ++j) {
    const std::uint64_t b = (index >> (n - j)) & 1u;
    out |= b << (n - g(j));
  }
  return out;
}

}  // namespace permsym
