#pragma once

// Unipotent l-blocks via (co)hooks: for d = ord_l(q), labels in one block
// share the (e, mode)-core, and the block has cyclic defect when the common
// weight is at most one.

#include <compare>
#include <vector>

#include "unip/qfactor.hpp"
#include "unip/symbols.hpp"

namespace unip {

struct HookParam {
  int e = 1;
  HookMode mode = HookMode::Hook;

  friend bool operator==(const HookParam&, const HookParam&) = default;
};

HookParam e_of_d(Family family, int d);

struct BlockId {
  GroupType type;
  int e = 1;
  HookMode mode = HookMode::Hook;
  Label core;

  friend bool operator==(const BlockId&, const BlockId&) = default;
};

struct LabelCore {
  Label core;
  int weight = 0;
};

// (e, mode)-core and weight of a label, no family check.
LabelCore label_core(const Label& l, const HookParam& p);

BlockId block_id(const Label& l, const GroupType& t, int d);
int block_weight(const Label& l, const GroupType& t, int d);
bool cyclic_defect(const Label& l, const GroupType& t, int d);
bool defect_zero(const Label& l, const GroupType& t, int d);

struct Block {
  BlockId id;
  int weight = 0;
  std::vector<Label> labels;  // sorted
};

// All unipotent labels of t grouped by block, blocks sorted by core.
std::vector<Block> block_partition(const GroupType& t, int d);

}  // namespace unip
