#include "lattica/bits.hpp"

#include <algorithm>

#include "lattica/error.hpp"

namespace lattica {

Bits bits_of(std::size_t n, std::span<const std::size_t> ms) {
  Bits b(n);
  for (auto i : ms) b.set(i);
  return b;
}

Bits bits_from_mask(std::size_t n, std::uint64_t mask) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) b.set(i);
  return b;
}

std::uint64_t mask_of(const Bits& b) {
  std::uint64_t m = 0;
  for_each_member(b, [&](std::size_t i) { m |= std::uint64_t{1} << i; });
  return m;
}

std::vector<std::size_t> members(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for_each_member(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Bits compress_bits(const Bits& x, const Bits& keep) {
  Bits out(keep.count());
  std::size_t rank = 0;
  for_each_member(keep, [&](std::size_t i) {
    if (x.test(i)) out.set(rank);
    ++rank;
  });
  return out;
}

Bits expand_bits(const Bits& x, const Bits& keep) {
  Bits out(keep.size());
  std::size_t rank = 0;
  for_each_member(keep, [&](std::size_t i) {
    if (x.test(rank)) out.set(i);
    ++rank;
  });
  return out;
}

std::string escape_member(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == '\\' || c == ',' || c == '{' || c == '}' || c == '(' || c == ')')
      out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string encode_set(std::vector<std::string> names) {
  for (auto& n : names) n = escape_member(n);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out.push_back(',');
    out += names[i];
  }
  out.push_back('}');
  return out;
}

std::string encode_set(const Bits& b, std::span<const std::string> names) {
  std::vector<std::string> picked;
  for_each_member(b, [&](std::size_t i) { picked.push_back(names[i]); });
  return encode_set(std::move(picked));
}

std::string encode_pair(std::string_view first, std::string_view second) {
  return "(" + escape_member(first) + "," + escape_member(second) + ")";
}

ValidationError::ValidationError(std::string rule, std::vector<std::string> witness,
                                 const std::string& message)
    : Error(message), rule_(std::move(rule)), witness_(std::move(witness)) {}

UnknownElement::UnknownElement(const std::string& name)
    : Error("unknown element '" + name + "'"), name_(name) {}

GuardExceeded::GuardExceeded(const std::string& what, std::size_t limit, std::size_t actual)
    : Error(what + ": size " + std::to_string(actual) + " exceeds limit " +
            std::to_string(limit)),
      limit_(limit),
      actual_(actual) {}

void check_guard(const std::string& what, std::size_t limit, std::size_t actual) {
  if (actual > limit) throw GuardExceeded(what, limit, actual);
}

}  // namespace lattica
