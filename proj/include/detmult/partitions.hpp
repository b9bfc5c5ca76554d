#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace detmult {

/// Weakly decreasing tuple of nonnegative integers. The stored length is the
/// ambient length the partition was built with; comparisons treat missing
/// trailing entries as zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// i-th part, 0-based; zero past the stored length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  const std::vector<int>& parts() const { return parts_; }
  long size() const;
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& x);

/// Entrywise x <= z, trailing zeros implied.
bool entrywise_leq(const Partition& x, const Partition& z);

/// Weakly decreasing integer tuple of fixed length; entries may be negative.
class DominantWeight {
 public:
  DominantWeight() = default;
  DominantWeight(std::initializer_list<long> entries);
  explicit DominantWeight(std::vector<long> entries);

  long operator[](std::size_t i) const { return entries_[i]; }
  std::size_t length() const { return entries_.size(); }
  const std::vector<long>& entries() const { return entries_; }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

  std::string to_string() const;

 private:
  std::vector<long> entries_;
};

std::ostream& operator<<(std::ostream& os, const DominantWeight& w);

/// Index pair (z, l) with z_1 = ... = z_{l+1}.
struct ZEntry {
  Partition z;
  int l = 0;

  friend bool operator==(const ZEntry&, const ZEntry&) = default;
  friend auto operator<=>(const ZEntry& a, const ZEntry& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.l <=> b.l;
  }
};

/// x'_i = #{k : x_k >= i}.
Partition conjugate(const Partition& x);

/// x(c)_i = min(x_i, c).
Partition truncate(const Partition& x, int c);

/// (z_1, z_1, z_2, z_2, ..., z_k, z_k).
Partition doubled(const Partition& z);

/// All partitions with exactly `length` stored parts, each at most max_part,
/// in reverse lexicographic order.
std::vector<Partition> partitions_in_box(int length, int max_part);

/// Membership of (z, l) in Z(X): with c = z_1,
///   (1) some x in X has x(c) <= z and x'_{c+1} <= l+1, and
///   (2) every such x has x'_{c+1} = l+1.
bool z_set_member(std::span<const Partition> X, const Partition& z, int l);

/// Z(X) evaluated from the definition over the candidates z in P(n) with
/// z_1 <= max_{x in X} x_1 and 0 <= l <= n-1.
std::vector<ZEntry> z_set_from_definition(std::span<const Partition> X, int n);

/// Z^d_n for maximal minors: ((c^n), n-1) for c = 0..d-1.
std::vector<ZEntry> z_set_maximal_minors(int n, int d);

/// Z^d_p from its closed form: 0 <= l <= p-1, z in P(n),
/// z_1 = ... = z_{l+1} <= d-1 and |z| + (d-z_1) l + 1 <= p d <= |z| + (d-z_1)(l+1).
std::vector<ZEntry> z_set_closed_form(int n, int p, int d);

}  // namespace detmult
