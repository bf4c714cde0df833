#pragma once

// Partitions, beta-sets, rim hooks and the type A / 2A hook formula.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unip/qfactor.hpp"

namespace unip {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything not weakly decreasing throws ParseError.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part, 0 beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

  Partition conjugate() const;

  // `[4,2,1]`, empty `[]`.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }
  // `[[2,1],[1]]`
  std::string to_string() const;
  static Bipartition parse(std::string_view text);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend std::strong_ordering operator<=>(const Bipartition&, const Bipartition&) = default;
};

// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// All ordered bipartitions of n, ordered by (first, second) decreasingly.
std::vector<Bipartition> bipartitions_of(int n);

// True iff inner is contained in outer as Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

// Beta-set of the given length (>= number of parts), strictly decreasing.
std::vector<int> beta_set(const Partition& p, int length);
// Inverse of beta_set; accepts any order of distinct non-negative entries.
Partition from_beta_set(std::span<const int> beta);

// The staircase (a, a-1, ..., 1).
Partition delta(int a);

// Hook lengths of all cells, sorted decreasingly.
std::vector<int> hook_lengths(const Partition& p);

// b(p) = sum (i-1) p_i.
int b_invariant(const Partition& p);

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;  // e components, abacus runners 0..e-1
  int weight = 0;
};

// e-core, e-quotient and e-weight on an abacus whose bead count is a multiple of e.
CoreQuotient core_quotient_weight(const Partition& p, int e);

// Partitions obtained by removing (adding) one rim e-hook.
std::vector<Partition> remove_rim_hooks(const Partition& p, int e);
std::vector<Partition> add_rim_hooks(const Partition& p, int e);

// Degree of the irreducible character of the symmetric group, |p|!/prod(hooks).
mpz_class dim_sym(const Partition& p);

// Littlewood-Richardson coefficient c^lambda_{mu nu}, by enumeration of
// lattice-word skew tableaux of shape lambda/mu and content nu.
std::uint64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Generic degree of the unipotent character of GL_n(q) (untwisted) or
// GU_n(q) (twisted) labelled by p, via the hook formula.
CycFactored generic_degree_A(const Partition& p, bool twisted);

}  // namespace unip
