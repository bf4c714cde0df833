#pragma once

// Lusztig symbols of the classical types B, C, D and 2D.
//
// A symbol is a pair of strictly increasing rows of non-negative integers,
// taken up to the shift (X, Y) -> ({0} u (X+1), {0} u (Y+1)). The stored
// representative is reduced (the rows do not both start with 0), carries the
// longer row on top and, for rows of equal length, the lexicographically
// smaller row on top.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unip/partitions.hpp"
#include "unip/qfactor.hpp"

namespace unip {

enum class DegenerateTag { None, Plus, Minus };
enum class HookMode { Hook, Cohook };
// Defect odd, defect = 0 mod 4, defect = 2 mod 4.
enum class SeriesClass { BC, D, TwoD };

std::string to_string(HookMode m);
HookMode parse_hook_mode(std::string_view s);
std::string to_string(SeriesClass c);

class Symbol {
 public:
  using Row = std::vector<int>;

  Symbol() = default;
  // Rows must be strictly increasing and non-negative. A tag is only allowed
  // on a degenerate symbol (equal rows).
  Symbol(Row top, Row bottom, DegenerateTag tag = DegenerateTag::None);

  const Row& top() const { return top_; }
  const Row& bottom() const { return bottom_; }
  DegenerateTag tag() const { return tag_; }
  bool degenerate() const { return top_ == bottom_; }

  int entries() const { return static_cast<int>(top_.size() + bottom_.size()); }
  int rank() const;
  int defect() const { return static_cast<int>(top_.size() - bottom_.size()); }
  SeriesClass series_class() const;

  Symbol untagged() const;
  // Both rows of the k-fold shift of the stored representative.
  std::pair<Row, Row> shifted_rows(int k) const;

  // `(0 1 2 // -)`, degenerate tags appended as `+` / `-`.
  std::string to_string() const;
  // `[[0,1,2],[]]`, the parser's grammar.
  std::string to_grammar() const;
  static Symbol parse(std::string_view text);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;

 private:
  Row top_;
  Row bottom_;
  DegenerateTag tag_ = DegenerateTag::None;
};

// One (co)hook: the entry `value` of row `row` (0 top, 1 bottom) of the
// stored representative, of the given length.
struct HookPos {
  int row = 0;
  int value = 0;
  int length = 0;

  friend bool operator==(const HookPos&, const HookPos&) = default;
};

// d-hooks: x >= d with x - d not in the same row.
std::vector<HookPos> hooks(const Symbol& s, int d);
// d-cohooks: x >= d with x - d not in the other row.
std::vector<HookPos> cohooks(const Symbol& s, int d);

struct SymbolCore {
  Symbol core;
  int weight = 0;
};

// d-core (mode Hook) or d-cocore (mode Cohook) by iterated removal, untagged.
SymbolCore core_cocore(const Symbol& s, int d, HookMode mode);

// All symbols reachable by removing (adding) exactly one d-(co)hook.
std::vector<Symbol> remove_one(const Symbol& s, int d, HookMode mode);
std::vector<Symbol> add_one(const Symbol& s, int d, HookMode mode);

// Two runners of the 1-cohook abacus, for symbols with trivial 1-cocore.
// Ordered pair for odd defect (runner with more beads first), unordered
// (larger partition first) for even defect.
Bipartition coquotient1(const Symbol& s);
// Inverse of coquotient1. For even defect the result may lie in either of
// the classes D and 2D, determined by the bipartition.
Symbol symbol_from_coquotient1(const Bipartition& bp, bool odd_defect);

// Principal series dictionary for defect-1 symbols.
Symbol defect1_from_bipartition(const Bipartition& bp);
Bipartition bipartition_from_defect1(const Symbol& s);

// Generic degree from the hook formula. For a degenerate symbol this is the
// degree of each of the two characters.
CycFactored generic_degree_symbol(const Symbol& s);

// All symbols of the given rank in one series class, sorted. Degenerate
// symbols appear twice (tags + and -) when with_tags is set.
std::vector<Symbol> symbols_of_rank(int n, SeriesClass cls, bool with_tags = true);

// ---------------------------------------------------------------------------
// labels of unipotent characters

using Label = std::variant<Partition, Symbol>;

std::string to_string(const Label& l);
std::string to_grammar(const Label& l);
int label_rank(const Label& l);

bool uses_partitions(Family f);
SeriesClass series_class_of(Family f);

// Throws DomainError unless l labels a unipotent character of t.
void check_label(const Label& l, const GroupType& t);
Label parse_label(std::string_view text, Family f);

// Cuspidal unipotent characters: the parameter a with n expressed through a,
// when it exists.
std::optional<int> cuspidal_parameter(const GroupType& t);
std::optional<Label> cuspidal_label(const GroupType& t);
std::optional<int> d_G(const GroupType& t);
Label trivial_label(const GroupType& t);

// All unipotent labels of t, sorted.
std::vector<Label> unipotent_labels(const GroupType& t);

// Generic degree of any label of t.
CycFactored generic_degree(const Label& l, const GroupType& t);

}  // namespace unip
