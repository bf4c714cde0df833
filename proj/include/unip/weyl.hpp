#pragma once

// Irreducible characters of W(B_n) and W(D_n), labelled by bipartitions,
// and induction from the symmetric-group parabolics S_n and S_{n-1}.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unip/partitions.hpp"
#include "unip/symbols.hpp"

namespace unip {

enum class WeylKind { B, D };

std::string to_string(WeylKind k);
WeylKind parse_weyl_kind(std::string_view s);

// For kind D the pair is unordered and stored larger partition first; a
// degenerate label (equal halves) stands for both characters of the pair.
class WCharLabel {
 public:
  WCharLabel() = default;
  WCharLabel(WeylKind kind, Bipartition bp);

  WeylKind kind() const { return kind_; }
  const Bipartition& bp() const { return bp_; }
  int size() const { return bp_.size(); }
  bool degenerate() const { return kind_ == WeylKind::D && bp_.first == bp_.second; }

  // `([2,1];[1])`
  std::string to_string() const;

  friend bool operator==(const WCharLabel&, const WCharLabel&) = default;
  friend std::strong_ordering operator<=>(const WCharLabel&, const WCharLabel&) = default;

 private:
  WeylKind kind_ = WeylKind::B;
  Bipartition bp_;
};

// Multiplicities of the constituents; degenerate D-labels carry the combined
// multiplicity of the two split characters.
struct InductionResult {
  std::map<WCharLabel, std::uint64_t> entries;

  std::uint64_t multiplicity(const WCharLabel& c) const;
};

// Dimension; combined dimension for degenerate D-labels.
mpz_class dim_wchar(const WCharLabel& c);

// Ind_{S_n}^{W(B_n)}: multiplicity of (mu;nu) is c^lambda_{mu nu}.
InductionResult ind_sym_to_B(const Partition& lambda);

// Ind_{S_{n-1}}^{S_n}: add one box.
std::vector<Partition> ind_sym_step(const Partition& lambda);

// Ind_{S_n}^{W(D_n)}.
InductionResult ind_sym_to_D(const Partition& lambda);

// Ind_{S_{n-1}}^{W(D_n)} through S_n.
InductionResult ind_sym_step_to_D(const Partition& psi);

// Principal 2-series: the symbol's 1-coquotient as a W(B_n) label (odd
// defect) or W(D_n) label (even defect).
WCharLabel principal2_dictionary(const Symbol& s);

// Inverse of principal2_dictionary.
Symbol principal2_symbol(const WCharLabel& c);

}  // namespace unip
