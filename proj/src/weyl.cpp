#include "unip/weyl.hpp"

#include <algorithm>
#include <set>

#include "unip/errors.hpp"

namespace unip {

std::string to_string(WeylKind k) { return k == WeylKind::B ? "B" : "D"; }

WeylKind parse_weyl_kind(std::string_view s) {
  if (s == "B") return WeylKind::B;
  if (s == "D") return WeylKind::D;
  throw ParseError("unknown Weyl group kind '" + std::string(s) + "'");
}

WCharLabel::WCharLabel(WeylKind kind, Bipartition bp) : kind_(kind), bp_(std::move(bp)) {
  if (kind_ == WeylKind::D && bp_.first < bp_.second) std::swap(bp_.first, bp_.second);
}

std::string WCharLabel::to_string() const {
  return "(" + bp_.first.to_string() + ";" + bp_.second.to_string() + ")";
}

std::uint64_t InductionResult::multiplicity(const WCharLabel& c) const {
  auto it = entries.find(c);
  return it == entries.end() ? 0 : it->second;
}

mpz_class dim_wchar(const WCharLabel& c) {
  const auto& [mu, nu] = c.bp();
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(c.size()), static_cast<unsigned long>(mu.size()));
  return binom * dim_sym(mu) * dim_sym(nu);
}

namespace {

// All partitions contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row) -> void {
    out.emplace_back(cur);
    if (row >= lambda.length()) return;
    const int bound = std::min(lambda[row], row > 0 ? cur.back() : lambda[row]);
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      self(self, row + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

InductionResult induce(const Partition& lambda, WeylKind kind) {
  InductionResult out;
  for (const auto& mu : subpartitions(lambda)) {
    for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
      if (kind == WeylKind::D && mu < nu) continue;  // unordered pair, counted once
      const auto c = lr_coeff(lambda, mu, nu);
      if (c != 0) out.entries[WCharLabel(kind, Bipartition{mu, nu})] += c;
    }
  }
  return out;
}

}  // namespace

InductionResult ind_sym_to_B(const Partition& lambda) { return induce(lambda, WeylKind::B); }

std::vector<Partition> ind_sym_step(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 0; i <= lambda.length(); ++i) {
    if (i > 0 && lambda[i - 1] == lambda[i]) continue;
    std::vector<int> parts = lambda.parts();
    if (i == lambda.length())
      parts.push_back(1);
    else
      ++parts[static_cast<size_t>(i)];
    out.emplace_back(std::move(parts));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

InductionResult ind_sym_to_D(const Partition& lambda) {
  if (lambda.size() < 2) throw DomainError("ind_sym_to_D: n must be at least 2");
  return induce(lambda, WeylKind::D);
}

InductionResult ind_sym_step_to_D(const Partition& psi) {
  InductionResult out;
  for (const auto& lambda : ind_sym_step(psi))
    for (const auto& [label, mult] : ind_sym_to_D(lambda).entries) out.entries[label] += mult;
  return out;
}

WCharLabel principal2_dictionary(const Symbol& s) {
  const bool odd = s.series_class() == SeriesClass::BC;
  return WCharLabel(odd ? WeylKind::B : WeylKind::D, coquotient1(s));
}

Symbol principal2_symbol(const WCharLabel& c) { return symbol_from_coquotient1(c.bp(), c.kind() == WeylKind::B); }

}  // namespace unip
