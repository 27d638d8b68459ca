#ifndef LATTICA_BITS_HPP_
#define LATTICA_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lattica {

// Finite subset of an indexed carrier {0, ..., n-1}.
using Bits = boost::dynamic_bitset<>;

inline Bits empty_bits(std::size_t n) { return Bits(n); }

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

inline Bits singleton_bits(std::size_t n, std::size_t i) {
  Bits b(n);
  b.set(i);
  return b;
}

Bits bits_of(std::size_t n, std::span<const std::size_t> members);

// Bit i of `mask` selects element i. Requires n <= 64.
Bits bits_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t mask_of(const Bits& b);

std::vector<std::size_t> members(const Bits& b);

// Re-indexes `x` onto the members of `keep`: bit k of the result is the k-th
// member of `keep`. expand_bits is the inverse.
Bits compress_bits(const Bits& x, const Bits& keep);
Bits expand_bits(const Bits& x, const Bits& keep);

template <typename F>
void for_each_member(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

// Calls f(subset) for every subset of `base` (including the empty set and
// `base` itself). Requires base.count() <= 30.
template <typename F>
void for_each_subset(const Bits& base, F&& f) {
  const auto ms = members(base);
  const std::uint64_t total = std::uint64_t{1} << ms.size();
  Bits sub(base.size());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    sub.reset();
    for (std::size_t k = 0; k < ms.size(); ++k)
      if (mask >> k & 1u) sub.set(ms[k]);
    f(static_cast<const Bits&>(sub));
  }
}

// Escapes the structural characters of set encodings inside a member name.
std::string escape_member(std::string_view name);

// Canonical encoding "{a,b,c}" of a set of names: members escaped and sorted
// lexicographically, so equal sets encode to equal strings.
std::string encode_set(std::vector<std::string> names);
std::string encode_set(const Bits& b, std::span<const std::string> names);

// Encoding "(a,b)" of an ordered pair of names.
std::string encode_pair(std::string_view first, std::string_view second);

}  // namespace lattica

#endif  // LATTICA_BITS_HPP_
