#include "unip/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "unip/errors.hpp"
#include "parse_util.hpp"

namespace unip {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < (*this)[0]; ++c) {
    int len = 0;
    while (len < length() && parts_[static_cast<size_t>(len)] > c) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  detail::Cursor cur(text, "partition");
  auto parts = cur.int_list();
  cur.finish();
  for (int x : parts)
    if (x <= 0) throw ParseError("partition '" + std::string(text) + "': parts must be positive");
  return Partition(std::move(parts));
}

std::string Bipartition::to_string() const {
  return "[" + first.to_string() + "," + second.to_string() + "]";
}

Bipartition Bipartition::parse(std::string_view text) {
  detail::Cursor cur(text, "bipartition");
  cur.expect('[');
  auto a = cur.int_list();
  cur.expect(',');
  auto b = cur.int_list();
  cur.expect(']');
  cur.finish();
  return Bipartition{Partition(std::move(a)), Partition(std::move(b))};
}

// ---------------------------------------------------------------------------

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& mu : partitions_of(k))
      for (const auto& nu : partitions_of(n - k)) out.push_back(Bipartition{mu, nu});
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<int> beta_set(const Partition& p, int length) {
  if (length < p.length()) throw DomainError("beta_set: length shorter than the partition");
  std::vector<int> out(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) out[static_cast<size_t>(i)] = p[i] + (length - 1 - i);
  return out;
}

Partition from_beta_set(std::span<const int> beta) {
  std::vector<int> b(beta.begin(), beta.end());
  std::sort(b.rbegin(), b.rend());
  const int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = b[static_cast<size_t>(i)] - (len - 1 - i);
    if (part < 0 || (i > 0 && b[static_cast<size_t>(i)] == b[static_cast<size_t>(i - 1)]))
      throw DomainError("from_beta_set: entries must be distinct and non-negative");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition delta(int a) {
  if (a < 0) throw DomainError("delta: a must be non-negative");
  std::vector<int> parts;
  for (int i = a; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

std::vector<int> hook_lengths(const Partition& p) {
  const Partition conj = p.conjugate();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) out.push_back((p[i] - j - 1) + (conj[j] - i - 1) + 1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

int b_invariant(const Partition& p) {
  int b = 0;
  for (int i = 0; i < p.length(); ++i) b += i * p[i];
  return b;
}

CoreQuotient core_quotient_weight(const Partition& p, int e) {
  if (e < 1) throw DomainError("core_quotient_weight: e must be positive");
  const int len = ((p.length() + e - 1) / e) * e;
  const auto beta = beta_set(p, len);

  std::vector<std::vector<int>> levels(static_cast<size_t>(e));
  for (int b : beta) levels[static_cast<size_t>(b % e)].push_back(b / e);

  CoreQuotient out;
  std::vector<int> core_beta;
  for (int r = 0; r < e; ++r) {
    const auto& lv = levels[static_cast<size_t>(r)];
    for (int j = 0; j < static_cast<int>(lv.size()); ++j) core_beta.push_back(r + e * j);
    out.quotient.push_back(from_beta_set(lv));
    out.weight += out.quotient.back().size();
  }
  out.core = from_beta_set(core_beta);
  return out;
}

std::vector<Partition> remove_rim_hooks(const Partition& p, int e) {
  auto beta = beta_set(p, p.length());
  std::set<int> present(beta.begin(), beta.end());
  std::set<Partition> out;
  for (int b : beta) {
    if (b < e || present.count(b - e)) continue;
    auto moved = beta;
    std::replace(moved.begin(), moved.end(), b, b - e);
    out.insert(from_beta_set(moved));
  }
  return {out.rbegin(), out.rend()};
}

std::vector<Partition> add_rim_hooks(const Partition& p, int e) {
  auto beta = beta_set(p, p.length() + e);
  std::set<int> present(beta.begin(), beta.end());
  std::set<Partition> out;
  for (int b : beta) {
    if (present.count(b + e)) continue;
    auto moved = beta;
    std::replace(moved.begin(), moved.end(), b, b + e);
    out.insert(from_beta_set(moved));
  }
  return {out.rbegin(), out.rend()};
}

mpz_class dim_sym(const Partition& p) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
  mpz_class den = 1;
  for (int h : hook_lengths(p)) den *= h;
  return num / den;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

namespace {

class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(static_cast<size_t>(nu.length()) + 1, 0) {
    fill_.resize(static_cast<size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r) fill_[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda[r]), 0);
  }

  std::uint64_t count() {
    total_ = 0;
    place(0, lambda_[0] - 1);
    return total_;
  }

 private:
  // Reading order: rows top to bottom, each row right to left.
  void advance(int row, int col) {
    if (col - 1 >= mu_[row])
      place(row, col - 1);
    else if (row + 1 < lambda_.length())
      place(row + 1, lambda_[row + 1] - 1);
    else
      ++total_;
  }

  void place(int row, int col) {
    if (row >= lambda_.length()) {
      ++total_;
      return;
    }
    if (col < mu_[row]) {  // row fully covered by mu
      advance(row, mu_[row]);
      return;
    }
    int hi = std::min(nu_.length(), row + 1);
    if (col + 1 < lambda_[row]) hi = std::min(hi, fill_[static_cast<size_t>(row)][static_cast<size_t>(col + 1)]);
    int lo = 1;
    if (row > 0 && col >= mu_[row - 1]) lo = fill_[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1;
    for (int v = lo; v <= hi; ++v) {
      auto& cv = counts_[static_cast<size_t>(v)];
      if (cv >= nu_[v - 1]) continue;
      if (v > 1 && cv + 1 > counts_[static_cast<size_t>(v - 1)]) continue;
      ++cv;
      fill_[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
      advance(row, col);
      --cv;
    }
    fill_[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> fill_;
  std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  if (lambda.size() == 0) return 1;
  if (mu.size() == lambda.size()) return mu == lambda ? 1 : 0;
  return LrCounter(lambda, mu, nu).count();
}

CycFactored generic_degree_A(const Partition& p, bool twisted) {
  const int n = p.size();
  if (n < 1) throw DomainError("generic_degree_A: partition must be non-empty");
  CycFactored deg = CycFactored::q_power(b_invariant(p));
  for (int i = 1; i <= n; ++i) deg *= factor_qpow_pm1(i, -1);
  for (int h : hook_lengths(p)) deg /= factor_qpow_pm1(h, -1);
  if (twisted) deg = deg.substitute_minus_q().abs();
  return deg;
}

}  // namespace unip
