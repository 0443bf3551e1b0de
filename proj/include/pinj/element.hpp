#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace pinj {

// A partial injective self-map of {1..n}. Immutable value type; every
// operation returns a new element. Internally entry x-1 of the table holds
// the image of x, with 0 as the "undefined" sentinel, so the default
// lexicographic table order puts undefined entries first.
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(int n) : map_(static_cast<std::size_t>(n), 0) {}

  static PartialInjection zero(int n) { return PartialInjection(n); }
  static PartialInjection identity(int n);

  // Builds the element with exactly the given graph {(x, a(x))}.
  // Throws PointOutOfRange, DuplicateDomainPoint, DuplicateImagePoint.
  static PartialInjection from_pairs(
      int n, const std::vector<std::pair<int, int>>& pairs);

  // Table with 0 = undefined; validates range and injectivity.
  static PartialInjection from_table(std::vector<int> table);

  int n() const { return static_cast<int>(map_.size()); }

  // Image of x, or 0 when x is not in the domain. x must lie in {1..n}.
  int image_of(int x) const;
  bool defined(int x) const { return image_of(x) != 0; }

  int rank() const;
  int defect() const { return n() - rank(); }
  std::vector<int> domain() const;
  std::vector<int> image() const;

  bool is_zero() const { return rank() == 0; }
  bool is_identity() const;
  bool is_idempotent() const;  // exactly the partial identities

  PartialInjection inverse() const;
  PartialInjection power(long long k) const;  // a^0 = identity(n)

  const std::vector<int>& table() const { return map_; }

  bool operator==(const PartialInjection&) const = default;
  auto operator<=>(const PartialInjection&) const = default;

 private:
  std::vector<int> map_;
};

// Left-to-right product: (a*b)(x) = b(a(x)). Throws SizeMismatch.
PartialInjection compose(const PartialInjection& a, const PartialInjection& b);

inline PartialInjection operator*(const PartialInjection& a,
                                  const PartialInjection& b) {
  return compose(a, b);
}

// Conjugate by the transposition (x, y): t * a * t.
PartialInjection conjugate_by_transposition(const PartialInjection& a, int x,
                                            int y);

}  // namespace pinj
