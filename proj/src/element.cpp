#include "pinj/element.hpp"

#include <algorithm>
#include <string>

#include "pinj/errors.hpp"

namespace pinj {

namespace {

void check_point(int x, int n, const char* what) {
  if (x < 1 || x > n) {
    throw PointOutOfRange(std::string(what) + " " + std::to_string(x) +
                          " outside {1.." + std::to_string(n) + "}");
  }
}

}  // namespace

PartialInjection PartialInjection::identity(int n) {
  PartialInjection a(n);
  for (int x = 1; x <= n; ++x) a.map_[x - 1] = x;
  return a;
}

PartialInjection PartialInjection::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  PartialInjection a(n);
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (auto [x, y] : pairs) {
    check_point(x, n, "domain point");
    check_point(y, n, "image point");
    if (a.map_[x - 1] != 0) {
      throw DuplicateDomainPoint("point " + std::to_string(x) +
                                 " assigned twice");
    }
    if (hit[y]) {
      throw DuplicateImagePoint("value " + std::to_string(y) +
                                " hit twice; not injective");
    }
    a.map_[x - 1] = y;
    hit[y] = 1;
  }
  return a;
}

PartialInjection PartialInjection::from_table(std::vector<int> table) {
  const int n = static_cast<int>(table.size());
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x) {
    const int y = table[x - 1];
    if (y == 0) continue;
    check_point(y, n, "image point");
    if (hit[y]) {
      throw DuplicateImagePoint("value " + std::to_string(y) +
                                " hit twice; not injective");
    }
    hit[y] = 1;
  }
  PartialInjection a;
  a.map_ = std::move(table);
  return a;
}

int PartialInjection::image_of(int x) const {
  check_point(x, n(), "point");
  return map_[x - 1];
}

int PartialInjection::rank() const {
  return static_cast<int>(
      std::count_if(map_.begin(), map_.end(), [](int v) { return v != 0; }));
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (int x = 1; x <= n(); ++x)
    if (map_[x - 1] != 0) d.push_back(x);
  return d;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> im;
  for (int v : map_)
    if (v != 0) im.push_back(v);
  std::sort(im.begin(), im.end());
  return im;
}

bool PartialInjection::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (map_[x - 1] != x) return false;
  return true;
}

bool PartialInjection::is_idempotent() const {
  for (int x = 1; x <= n(); ++x) {
    const int v = map_[x - 1];
    if (v != 0 && v != x) return false;
  }
  return true;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection b(n());
  for (int x = 1; x <= n(); ++x) {
    const int v = map_[x - 1];
    if (v != 0) b.map_[v - 1] = x;
  }
  return b;
}

PartialInjection compose(const PartialInjection& a, const PartialInjection& b) {
  if (a.n() != b.n()) {
    throw SizeMismatch("cannot compose elements on ground sets of size " +
                       std::to_string(a.n()) + " and " + std::to_string(b.n()));
  }
  std::vector<int> t(static_cast<std::size_t>(a.n()), 0);
  for (int x = 1; x <= a.n(); ++x) {
    const int y = a.table()[x - 1];
    if (y != 0) t[x - 1] = b.table()[y - 1];
  }
  // injectivity of a composite of injections is automatic
  return PartialInjection::from_table(std::move(t));
}

PartialInjection PartialInjection::power(long long k) const {
  PartialInjection result = identity(n());
  PartialInjection base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = compose(result, base);
    if (k > 1) base = compose(base, base);
  }
  return result;
}

PartialInjection conjugate_by_transposition(const PartialInjection& a, int x,
                                            int y) {
  check_point(x, a.n(), "point");
  check_point(y, a.n(), "point");
  std::vector<int> table(static_cast<std::size_t>(a.n()), 0);
  for (int z = 1; z <= a.n(); ++z) table[z - 1] = z;
  std::swap(table[x - 1], table[y - 1]);
  const PartialInjection tr = PartialInjection::from_table(std::move(table));
  return compose(compose(tr, a), tr);
}

}  // namespace pinj
