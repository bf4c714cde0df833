#include "unip/symbols.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "unip/errors.hpp"
#include "parse_util.hpp"

namespace unip {

std::string to_string(HookMode m) { return m == HookMode::Hook ? "hook" : "cohook"; }

HookMode parse_hook_mode(std::string_view s) {
  if (s == "hook") return HookMode::Hook;
  if (s == "cohook") return HookMode::Cohook;
  throw ParseError("unknown hook mode '" + std::string(s) + "'");
}

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::BC: return "BC";
    case SeriesClass::D: return "D";
    case SeriesClass::TwoD: return "2D";
  }
  return "?";
}

namespace {

bool has(const Symbol::Row& row, int v) { return std::binary_search(row.begin(), row.end(), v); }

void check_row(const Symbol::Row& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw ParseError("symbol entries must be non-negative");
    if (i > 0 && row[i] <= row[i - 1]) throw ParseError("symbol rows must be strictly increasing");
  }
}

void insert_sorted(Symbol::Row& row, int v) { row.insert(std::upper_bound(row.begin(), row.end(), v), v); }

void erase_value(Symbol::Row& row, int v) { row.erase(std::find(row.begin(), row.end(), v)); }

}  // namespace

Symbol::Symbol(Row top, Row bottom, DegenerateTag tag) : top_(std::move(top)), bottom_(std::move(bottom)), tag_(tag) {
  check_row(top_);
  check_row(bottom_);
  while (!top_.empty() && !bottom_.empty() && top_.front() == 0 && bottom_.front() == 0) {
    top_.erase(top_.begin());
    bottom_.erase(bottom_.begin());
    for (int& v : top_) --v;
    for (int& v : bottom_) --v;
  }
  if (top_.size() < bottom_.size() || (top_.size() == bottom_.size() && bottom_ < top_)) std::swap(top_, bottom_);
  if (tag_ != DegenerateTag::None && top_ != bottom_)
    throw ParseError("only degenerate symbols (equal rows) carry a +/- tag");
}

int Symbol::rank() const {
  int sum = 0;
  for (int v : top_) sum += v;
  for (int v : bottom_) sum += v;
  const int m = entries();
  return sum - ((m - 1) * (m - 1)) / 4;
}

SeriesClass Symbol::series_class() const {
  const int d = defect();
  if (d % 2 == 1) return SeriesClass::BC;
  return d % 4 == 0 ? SeriesClass::D : SeriesClass::TwoD;
}

Symbol Symbol::untagged() const {
  Symbol s = *this;
  s.tag_ = DegenerateTag::None;
  return s;
}

std::pair<Symbol::Row, Symbol::Row> Symbol::shifted_rows(int k) const {
  Row x, y;
  for (int i = 0; i < k; ++i) {
    x.push_back(i);
    y.push_back(i);
  }
  for (int v : top_) x.push_back(v + k);
  for (int v : bottom_) y.push_back(v + k);
  return {x, y};
}

std::string Symbol::to_string() const {
  std::ostringstream os;
  auto row = [&](const Row& r) {
    if (r.empty()) {
      os << '-';
      return;
    }
    for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
  };
  os << '(';
  row(top_);
  os << " // ";
  row(bottom_);
  os << ')';
  if (tag_ == DegenerateTag::Plus) os << '+';
  if (tag_ == DegenerateTag::Minus) os << '-';
  return os.str();
}

std::string Symbol::to_grammar() const {
  std::ostringstream os;
  auto row = [&](const Row& r) {
    os << '[';
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ']';
  };
  os << '[';
  row(top_);
  os << ',';
  row(bottom_);
  os << ']';
  if (tag_ == DegenerateTag::Plus) os << '+';
  if (tag_ == DegenerateTag::Minus) os << '-';
  return os.str();
}

Symbol Symbol::parse(std::string_view text) {
  detail::Cursor cur(text, "symbol");
  cur.expect('[');
  auto x = cur.int_list();
  cur.expect(',');
  auto y = cur.int_list();
  cur.expect(']');
  DegenerateTag tag = DegenerateTag::None;
  if (cur.consume('+'))
    tag = DegenerateTag::Plus;
  else if (cur.consume('-'))
    tag = DegenerateTag::Minus;
  cur.finish();
  return Symbol(std::move(x), std::move(y), tag);
}

// ---------------------------------------------------------------------------
// hooks and cohooks

namespace {

std::vector<HookPos> find_hooks(const Symbol& s, int d, HookMode mode) {
  if (d < 1) throw DomainError("hook length must be positive");
  std::vector<HookPos> out;
  const Symbol::Row* rows[2] = {&s.top(), &s.bottom()};
  for (int r = 0; r < 2; ++r) {
    const auto& blocker = mode == HookMode::Hook ? *rows[r] : *rows[1 - r];
    for (int x : *rows[r])
      if (x >= d && !has(blocker, x - d)) out.push_back(HookPos{r, x, d});
  }
  return out;
}

// Applies the removal (delta < 0) or addition (delta > 0) of one (co)hook
// at entry x of rows[r]; caller has checked admissibility.
void move_entry(Symbol::Row (&rows)[2], int r, int x, int delta, HookMode mode) {
  erase_value(rows[r], x);
  insert_sorted(mode == HookMode::Hook ? rows[r] : rows[1 - r], x + delta);
}

}  // namespace

std::vector<HookPos> hooks(const Symbol& s, int d) { return find_hooks(s, d, HookMode::Hook); }
std::vector<HookPos> cohooks(const Symbol& s, int d) { return find_hooks(s, d, HookMode::Cohook); }

SymbolCore core_cocore(const Symbol& s, int d, HookMode mode) {
  if (d < 1) throw DomainError("core_cocore: d must be positive");
  Symbol::Row rows[2] = {s.top(), s.bottom()};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < 2 && !changed; ++r) {
      const auto& blocker = mode == HookMode::Hook ? rows[r] : rows[1 - r];
      for (auto it = rows[r].rbegin(); it != rows[r].rend(); ++it) {
        const int x = *it;
        if (x >= d && !has(blocker, x - d)) {
          move_entry(rows, r, x, -d, mode);
          changed = true;
          break;
        }
      }
    }
  }
  SymbolCore out{Symbol(rows[0], rows[1]), 0};
  out.weight = (s.rank() - out.core.rank()) / d;
  return out;
}

std::vector<Symbol> remove_one(const Symbol& s, int d, HookMode mode) {
  std::set<Symbol> out;
  for (const auto& h : find_hooks(s, d, mode)) {
    Symbol::Row rows[2] = {s.top(), s.bottom()};
    move_entry(rows, h.row, h.value, -d, mode);
    out.insert(Symbol(rows[0], rows[1]));
  }
  return {out.begin(), out.end()};
}

std::vector<Symbol> add_one(const Symbol& s, int d, HookMode mode) {
  if (d < 1) throw DomainError("add_one: d must be positive");
  auto [x, y] = s.shifted_rows(d);
  std::set<Symbol> out;
  for (int r = 0; r < 2; ++r) {
    const auto& src = r == 0 ? x : y;
    const auto& dst = (mode == HookMode::Hook) == (r == 0) ? x : y;
    for (int v : src) {
      if (has(dst, v + d)) continue;
      Symbol::Row rows[2] = {x, y};
      move_entry(rows, r, v, d, mode);
      out.insert(Symbol(rows[0], rows[1]));
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// dictionaries

Bipartition coquotient1(const Symbol& s) {
  if (core_cocore(s, 1, HookMode::Cohook).core.rank() != 0)
    throw DomainError("coquotient1: symbol " + s.to_string() + " has non-trivial 1-cocore");
  std::vector<int> a, b;
  for (int x : s.top()) (x % 2 == 0 ? a : b).push_back(x);
  for (int y : s.bottom()) (y % 2 == 1 ? a : b).push_back(y);
  Partition pa = from_beta_set(a), pb = from_beta_set(b);
  if (a.size() > b.size()) return {pa, pb};
  if (a.size() < b.size()) return {pb, pa};
  if (pa < pb) std::swap(pa, pb);
  return {pa, pb};
}

Symbol symbol_from_coquotient1(const Bipartition& bp, bool odd_defect) {
  int kb = std::max(bp.second.length(), odd_defect ? bp.first.length() - 1 : bp.first.length());
  kb = std::max(kb, 0);
  const int ka = odd_defect ? kb + 1 : kb;
  Symbol::Row x, y;
  for (int v : beta_set(bp.first, ka)) (v % 2 == 0 ? x : y).push_back(v);
  for (int v : beta_set(bp.second, kb)) (v % 2 == 1 ? x : y).push_back(v);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return Symbol(x, y);
}

Symbol defect1_from_bipartition(const Bipartition& bp) {
  const int s = std::max(bp.first.length() - 1, bp.second.length());
  auto x = beta_set(bp.first, s + 1);
  auto y = beta_set(bp.second, s);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return Symbol(x, y);
}

Bipartition bipartition_from_defect1(const Symbol& s) {
  if (s.defect() != 1) throw DomainError("bipartition_from_defect1: symbol " + s.to_string() + " has defect != 1");
  return {from_beta_set(s.top()), from_beta_set(s.bottom())};
}

// ---------------------------------------------------------------------------
// hook formula

CycFactored generic_degree_symbol(const Symbol& s) {
  const int n = s.rank();
  if (n == 0) return CycFactored{};
  const auto cls = s.series_class();
  const int m = s.entries();

  CycFactored deg;
  if (cls == SeriesClass::BC) {
    for (int i = 1; i <= n; ++i) deg *= factor_qpow_pm1(2 * i, -1);
  } else {
    deg *= factor_qpow_pm1(n, cls == SeriesClass::D ? -1 : +1);
    for (int i = 1; i < n; ++i) deg *= factor_qpow_pm1(2 * i, -1);
  }

  const Symbol::Row* rows[2] = {&s.top(), &s.bottom()};
  for (int r = 0; r < 2; ++r) {
    for (int x : *rows[r]) {
      for (int len = 1; len <= x; ++len) {
        if (!has(*rows[r], x - len)) deg /= factor_qpow_pm1(len, -1);
        if (!has(*rows[1 - r], x - len)) deg /= factor_qpow_pm1(len, +1);
      }
    }
  }

  std::vector<int> all(s.top());
  all.insert(all.end(), s.bottom().begin(), s.bottom().end());
  std::sort(all.begin(), all.end());
  int a = 0;
  // In ascending order the i-th entry is the minimum of m-1-i pairs.
  for (int i = 0; i < m; ++i) a += all[static_cast<size_t>(i)] * (m - 1 - i);
  for (int k = m - 2; k >= 2; k -= 2) a -= k * (k - 1) / 2;
  deg *= CycFactored::q_power(a);

  int common = 0;
  for (int x : s.top())
    if (has(s.bottom(), x)) ++common;
  int two = 0;
  if (cls == SeriesClass::BC)
    two = common - (m - 1) / 2;
  else if (s.degenerate())
    two = common - m / 2;
  else
    two = common - (m - 2) / 2;
  deg *= CycFactored::two_power(two);
  return deg;
}

std::vector<Symbol> symbols_of_rank(int n, SeriesClass cls, bool with_tags) {
  std::set<Symbol> out;
  for (int def = (cls == SeriesClass::BC ? 1 : cls == SeriesClass::D ? 0 : 2);; def += (cls == SeriesClass::BC ? 2 : 4)) {
    const int core_rank = def * def / 4;
    if (core_rank > n) break;
    for (const auto& bp : bipartitions_of(n - core_rank)) {
      const int len = std::max({bp.first.length() - def, bp.second.length(), 0});
      auto x = beta_set(bp.first, len + def);
      auto y = beta_set(bp.second, len);
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (def == 0 && x == y && with_tags) {
        out.insert(Symbol(x, y, DegenerateTag::Plus));
        out.insert(Symbol(x, y, DegenerateTag::Minus));
      } else {
        out.insert(Symbol(x, y));
      }
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// labels

std::string to_string(const Label& l) {
  return std::visit([](const auto& v) { return v.to_string(); }, l);
}

std::string to_grammar(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l)) return p->to_string();
  return std::get<Symbol>(l).to_grammar();
}

int label_rank(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l)) return p->size();
  return std::get<Symbol>(l).rank();
}

bool uses_partitions(Family f) { return f == Family::A || f == Family::TwoA; }

SeriesClass series_class_of(Family f) {
  switch (f) {
    case Family::D: return SeriesClass::D;
    case Family::TwoD: return SeriesClass::TwoD;
    default: return SeriesClass::BC;
  }
}

void check_label(const Label& l, const GroupType& t) {
  if (uses_partitions(t.family)) {
    const auto* p = std::get_if<Partition>(&l);
    if (p == nullptr) throw DomainError("family " + to_string(t.family) + " is labelled by partitions");
    if (p->size() != t.rank)
      throw DomainError("partition " + p->to_string() + " has size " + std::to_string(p->size()) + ", expected " +
                        std::to_string(t.rank));
    return;
  }
  const auto* s = std::get_if<Symbol>(&l);
  if (s == nullptr) throw DomainError("family " + to_string(t.family) + " is labelled by symbols");
  if (s->rank() != t.rank)
    throw DomainError("symbol " + s->to_string() + " has rank " + std::to_string(s->rank()) + ", expected " +
                      std::to_string(t.rank));
  if (s->series_class() != series_class_of(t.family))
    throw DomainError("symbol " + s->to_string() + " has defect " + std::to_string(s->defect()) +
                      ", not a label of type " + to_string(t.family));
}

Label parse_label(std::string_view text, Family f) {
  if (uses_partitions(f)) return Partition::parse(text);
  return Symbol::parse(text);
}

namespace {

std::optional<int> solve(int n, int (*f)(int)) {
  for (int a = 0; f(a) <= n; ++a)
    if (f(a) == n) return a;
  return std::nullopt;
}

Symbol::Row iota(int k) {
  Symbol::Row r(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) r[static_cast<size_t>(i)] = i;
  return r;
}

}  // namespace

std::optional<int> cuspidal_parameter(const GroupType& t) {
  const int n = t.rank;
  if (n < 1) return std::nullopt;
  switch (t.family) {
    case Family::A:
      return n == 1 ? std::optional<int>(1) : std::nullopt;
    case Family::TwoA:
      return solve(n, [](int a) { return a * (a + 1) / 2; });
    case Family::B:
    case Family::C:
      return solve(n, [](int a) { return a * (a + 1); });
    case Family::D:
    case Family::TwoD: {
      auto a = solve(n, [](int k) { return k * k; });
      if (!a || (*a % 2 == 0) != (t.family == Family::D)) return std::nullopt;
      return a;
    }
  }
  return std::nullopt;
}

std::optional<Label> cuspidal_label(const GroupType& t) {
  auto a = cuspidal_parameter(t);
  if (!a) return std::nullopt;
  switch (t.family) {
    case Family::A: return Label(Partition({1}));
    case Family::TwoA: return Label(delta(*a));
    case Family::B:
    case Family::C: return Label(Symbol(iota(2 * *a + 1), {}));
    case Family::D:
    case Family::TwoD: return Label(Symbol(iota(2 * *a), {}));
  }
  return std::nullopt;
}

std::optional<int> d_G(const GroupType& t) {
  auto a = cuspidal_parameter(t);
  if (!a || t.family == Family::A) return std::nullopt;
  if (t.family == Family::B || t.family == Family::C) return 4 * *a;
  return 2 * (2 * *a - 1);
}

Label trivial_label(const GroupType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
    case Family::TwoA: return Partition({n});
    case Family::B:
    case Family::C: return Symbol({n}, {});
    case Family::D: return Symbol({n}, {0});
    case Family::TwoD: return Symbol({0, n}, {});
  }
  return Partition({n});
}

std::vector<Label> unipotent_labels(const GroupType& t) {
  std::vector<Label> out;
  if (uses_partitions(t.family)) {
    auto ps = partitions_of(t.rank);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) out.emplace_back(*it);
  } else {
    for (auto& s : symbols_of_rank(t.rank, series_class_of(t.family))) out.emplace_back(std::move(s));
  }
  return out;
}

CycFactored generic_degree(const Label& l, const GroupType& t) {
  check_label(l, t);
  if (const auto* p = std::get_if<Partition>(&l)) return generic_degree_A(*p, t.family == Family::TwoA);
  return generic_degree_symbol(std::get<Symbol>(l));
}

}  // namespace unip
