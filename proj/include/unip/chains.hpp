#pragma once

// Certified chains from the cuspidal unipotent character to the trivial one:
//
//  * Brauer chains: consecutive labels share an l-block of cyclic defect for a
//    Zsigmondy prime l of admissible degree d;
//  * induction chains: consecutive principal 2-series labels both occur with
//    multiplicity one in the induced character of a common psi.
//
// Every certificate carries enough data to be re-checked on its own.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "unip/blocks.hpp"
#include "unip/weyl.hpp"

namespace unip {

using ChainNode = std::variant<Partition, Symbol, WCharLabel>;

std::string to_string(const ChainNode& n);

struct BrauerCertificate {
  GroupType type;
  int d = 0;
  int e = 0;
  HookMode mode = HookMode::Hook;
  Label core;
  std::optional<mpz_class> q;      // concrete q, when the chain was built for one
  std::optional<mpz_class> prime;  // Zsigmondy witness for (q, d)
};

struct InductionCertificate {
  GroupType type;
  WeylKind kind = WeylKind::B;
  Partition psi;
  bool via_step = false;  // psi labels S_{n-1}, induced through S_n
  std::uint64_t mult_from = 0;
  std::uint64_t mult_to = 0;
};

struct ChainStep {
  ChainNode from;
  ChainNode to;
  std::variant<BrauerCertificate, InductionCertificate> certificate;
};

// Degree d admissible for Brauer edges of t: odd d > 2, or even d >= d_G.
bool admissible_degree(const GroupType& t, int d);

// The two cases where no Zsigmondy prime exists for the only usable degree:
// 2A2(2) (solvable) and D4(2).
bool zsigmondy_exception(const GroupType& t, const mpz_class& q);

// Breadth-first search over the unipotent labels of t. Throws DomainError
// ("no chain") when the trivial label is unreachable.
std::vector<ChainStep> brauer_chain(const GroupType& t, const std::optional<mpz_class>& q = std::nullopt);

// Breadth-first search in the principal 2-series labels, t in {B, C, D, 2D}.
std::vector<ChainStep> lusztig_chain(const GroupType& t);

struct EdgeReport {
  bool ok = true;
  std::vector<std::string> reasons;
};

struct ChainReport {
  bool ok = true;
  std::vector<EdgeReport> edges;
  std::vector<std::string> chain_reasons;  // endpoint problems
};

ChainReport verify_chain(const std::vector<ChainStep>& steps);

// Chain document: array of {from, to, certificate}, stable field order.
nlohmann::ordered_json chain_to_json(const std::vector<ChainStep>& steps);
std::vector<ChainStep> chain_from_json(const nlohmann::ordered_json& doc);

}  // namespace unip
