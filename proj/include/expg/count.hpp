#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expg/generators.hpp"

namespace expg {

// Nonnegative integer that is either held exactly or kept as a symbolic
// expression of sums, products and powers when it is too large to expand.
// Subexpressions that fit in 64 bits are always folded to numbers.
class Count {
 public:
  Count() : Count(BigInt(0)) {}
  Count(BigInt value);  // NOLINT: implicit on purpose
  Count(std::uint64_t value) : Count(BigInt(value)) {}
  Count(int value) : Count(BigInt(value)) {}

  static Count power(const Count& base, const Count& exponent);
  friend Count operator+(const Count& a, const Count& b);
  friend Count operator*(const Count& a, const Count& b);
  friend Count operator-(const Count& a, const Count& b);

  // Exact value if it has at most max_bits bits.
  std::optional<BigInt> value(std::size_t max_bits = 1 << 16) const;
  std::optional<std::uint64_t> to_u64() const;
  bool is_number() const;
  // Decimal when the number fits in 64 bits, otherwise a compact expression
  // such as 2^(2^2059+2059).
  std::string str() const;
  // Always decimal when expandable within max_bits.
  std::string decimal(std::size_t max_bits = 1 << 16) const;

  bool operator==(const Count& other) const;

  struct Node;
  explicit Count(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const { return *node_; }

 private:
  friend struct Node;
  std::shared_ptr<const Node> node_;
};

}  // namespace expg
