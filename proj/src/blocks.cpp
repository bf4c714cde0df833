#include "unip/blocks.hpp"

#include <map>

#include "unip/errors.hpp"

namespace unip {

HookParam e_of_d(Family family, int d) {
  if (d < 1) throw DomainError("e_of_d: d must be positive");
  switch (family) {
    case Family::A:
      return {d, HookMode::Hook};
    case Family::TwoA:
      // order of -q modulo l
      if (d % 2 == 1) return {2 * d, HookMode::Hook};
      if (d % 4 == 2) return {d / 2, HookMode::Hook};
      return {d, HookMode::Hook};
    default:
      if (d % 2 == 1) return {d, HookMode::Hook};
      return {d / 2, HookMode::Cohook};
  }
}

LabelCore label_core(const Label& l, const HookParam& p) {
  if (const auto* part = std::get_if<Partition>(&l)) {
    if (p.mode != HookMode::Hook) throw DomainError("partitions have no cohooks");
    auto cq = core_quotient_weight(*part, p.e);
    return {cq.core, cq.weight};
  }
  auto sc = core_cocore(std::get<Symbol>(l), p.e, p.mode);
  return {sc.core, sc.weight};
}

BlockId block_id(const Label& l, const GroupType& t, int d) {
  check_label(l, t);
  const auto p = e_of_d(t.family, d);
  return {t, p.e, p.mode, label_core(l, p).core};
}

int block_weight(const Label& l, const GroupType& t, int d) {
  check_label(l, t);
  return label_core(l, e_of_d(t.family, d)).weight;
}

bool cyclic_defect(const Label& l, const GroupType& t, int d) { return block_weight(l, t, d) <= 1; }

bool defect_zero(const Label& l, const GroupType& t, int d) { return block_weight(l, t, d) == 0; }

std::vector<Block> block_partition(const GroupType& t, int d) {
  const auto p = e_of_d(t.family, d);
  std::map<Label, Block> by_core;
  for (const auto& l : unipotent_labels(t)) {
    auto lc = label_core(l, p);
    auto [it, inserted] = by_core.try_emplace(lc.core);
    if (inserted) it->second = Block{BlockId{t, p.e, p.mode, lc.core}, lc.weight, {}};
    it->second.labels.push_back(l);
  }
  std::vector<Block> out;
  out.reserve(by_core.size());
  for (auto& [core, block] : by_core) out.push_back(std::move(block));
  return out;
}

}  // namespace unip
