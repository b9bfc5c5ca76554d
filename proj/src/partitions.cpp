#include "detmult/partitions.hpp"

#include "detmult/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace detmult {

namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ")";
  return out.str();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part: " + join(parts_));
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition is not weakly decreasing: " + join(parts_));
  }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool operator==(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Partition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& x) { return os << x.to_string(); }

bool entrywise_leq(const Partition& x, const Partition& z) {
  const std::size_t len = std::max(x.length(), z.length());
  for (std::size_t i = 0; i < len; ++i)
    if (x[i] > z[i]) return false;
  return true;
}

DominantWeight::DominantWeight(std::initializer_list<long> entries) : DominantWeight(std::vector<long>(entries)) {}

DominantWeight::DominantWeight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (std::adjacent_find(entries_.begin(), entries_.end(), std::less<>{}) != entries_.end())
    throw DomainError("weight is not dominant (weakly decreasing): " + join(entries_));
}

std::string DominantWeight::to_string() const { return join(entries_); }

std::ostream& operator<<(std::ostream& os, const DominantWeight& w) { return os << w.to_string(); }

Partition conjugate(const Partition& x) {
  std::vector<int> out(static_cast<std::size_t>(x.first()));
  for (int i = 1; i <= x.first(); ++i)
    out[static_cast<std::size_t>(i - 1)] =
        static_cast<int>(std::count_if(x.parts().begin(), x.parts().end(), [i](int part) { return part >= i; }));
  return Partition(std::move(out));
}

Partition truncate(const Partition& x, int c) {
  if (c < 0) throw DomainError("truncation bound must be nonnegative");
  std::vector<int> out = x.parts();
  for (int& part : out) part = std::min(part, c);
  return Partition(std::move(out));
}

Partition doubled(const Partition& z) {
  std::vector<int> out;
  out.reserve(2 * z.length());
  for (int part : z.parts()) out.insert(out.end(), 2, part);
  return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(int length, int max_part) {
  std::vector<Partition> out;
  if (length < 0 || max_part < 0) return out;
  std::vector<int> current(static_cast<std::size_t>(length));
  auto rec = [&](auto&& self, std::size_t pos, int top) -> void {
    if (pos == current.size()) {
      out.emplace_back(current);
      return;
    }
    for (int v = top; v >= 0; --v) {
      current[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, max_part);
  return out;
}

bool z_set_member(std::span<const Partition> X, const Partition& z, int l) {
  if (X.empty()) throw DomainError("z_set_member needs a nonempty family X");
  if (l < 0) return false;
  const int c = z.first();
  bool any = false;
  for (const Partition& x : X) {
    const int column = conjugate(x)[static_cast<std::size_t>(c)];
    if (!entrywise_leq(truncate(x, c), z) || column > l + 1) continue;
    if (column != l + 1) return false;
    any = true;
  }
  return any;
}

std::vector<ZEntry> z_set_from_definition(std::span<const Partition> X, int n) {
  if (X.empty()) throw DomainError("z_set_from_definition needs a nonempty family X");
  int bound = 0;
  for (const Partition& x : X) bound = std::max(bound, x.first());
  std::vector<ZEntry> out;
  for (const Partition& z : partitions_in_box(n, bound))
    for (int l = 0; l < n; ++l)
      if (z_set_member(X, z, l)) out.push_back({z, l});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZEntry> z_set_maximal_minors(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("z_set_maximal_minors needs n >= 1 and d >= 1");
  std::vector<ZEntry> out;
  for (int c = 0; c < d; ++c) out.push_back({Partition(std::vector<int>(static_cast<std::size_t>(n), c)), n - 1});
  return out;
}

std::vector<ZEntry> z_set_closed_form(int n, int p, int d) {
  if (p < 1 || p > n || d < 1) throw DomainError("z_set_closed_form needs 1 <= p <= n and d >= 1");
  std::vector<ZEntry> out;
  const long pd = static_cast<long>(p) * d;
  for (const Partition& z : partitions_in_box(n, d - 1)) {
    const long z1 = z.first();
    for (int l = 0; l < p; ++l) {
      if (z[static_cast<std::size_t>(l)] != z1) break;
      const long lower = z.size() + (d - z1) * l + 1;
      const long upper = z.size() + (d - z1) * (l + 1);
      if (lower <= pd && pd <= upper) out.push_back({z, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detmult
