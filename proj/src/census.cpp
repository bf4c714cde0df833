#include "unip/census.hpp"

#include <cmath>

#include "unip/errors.hpp"
#include "unip/symbols.hpp"

namespace unip {

std::optional<int> cuspidal_exists(const GroupType& t) {
  if (t.rank < 1) return std::nullopt;
  return cuspidal_parameter(t);
}

std::optional<int> rank_for_parameter(Family f, int a) {
  if (a < 1) return std::nullopt;
  switch (f) {
    case Family::A: return a == 1 ? std::optional<int>(1) : std::nullopt;
    case Family::TwoA: return a * (a + 1) / 2;
    case Family::B:
    case Family::C: return a * (a + 1);
    case Family::D: return a % 2 == 0 ? std::optional<int>(a * a) : std::nullopt;
    case Family::TwoD: return a % 2 == 1 ? std::optional<int>(a * a) : std::nullopt;
  }
  return std::nullopt;
}

bool is_square(long long m) {
  if (m < 0) return false;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r * r == m;
}

// m = k(k+1)/2 iff 8m+1 is a square
bool is_triangular(long long m) { return m >= 0 && is_square(8 * m + 1); }

std::string to_string(const Component& c) { return to_string(GroupType{c.family, c.rank}); }

bool series_has_cuspidal(const ComponentList& c) {
  if (!c.torus_rank_ok) return false;
  for (const auto& x : c.components)
    if (x.rank > 0 && !cuspidal_exists(GroupType{x.family, x.rank})) return false;
  return true;
}

std::string to_string(CentraliserRow r) {
  switch (r) {
    case CentraliserRow::B1: return "B1";
    case CentraliserRow::C1: return "C1";
    case CentraliserRow::C2: return "C2";
    case CentraliserRow::C3: return "C3";
    case CentraliserRow::C4: return "C4";
    case CentraliserRow::C5: return "C5";
  }
  return "?";
}

CentraliserRow parse_centraliser_row(const std::string& s) {
  for (auto r : centraliser_rows())
    if (to_string(r) == s) return r;
  throw ParseError("unknown centraliser row: " + s);
}

std::vector<CentraliserRow> centraliser_rows() {
  return {CentraliserRow::B1, CentraliserRow::C1, CentraliserRow::C2, CentraliserRow::C3, CentraliserRow::C4, CentraliserRow::C5};
}

bool centraliser_sign_free(CentraliserRow r) { return r == CentraliserRow::B1; }

std::vector<CentraliserCase> centraliser_cases(CentraliserRow r, int max_n) {
  std::vector<CentraliserCase> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int sign : {1, -1}) {
      switch (r) {
        case CentraliserRow::B1:
          for (int d = 1; d <= n; ++d) out.push_back({n, d, sign});
          break;
        case CentraliserRow::C1:
        case CentraliserRow::C2:
          if (n >= 3 && n % 2 == 0) out.push_back({n, 0, sign});
          break;
        case CentraliserRow::C3:
          if (n >= 3) out.push_back({n, 0, sign});
          break;
        case CentraliserRow::C4:
        case CentraliserRow::C5:
          if (n >= 3)
            for (int d = 1; 2 * d < n; ++d) out.push_back({n, d, sign});
          break;
      }
    }
  }
  return out;
}

namespace {

Family twisted(Family untw, int sign) {
  if (untw == Family::A) return sign > 0 ? Family::A : Family::TwoA;
  return sign > 0 ? Family::D : Family::TwoD;
}

}  // namespace

ComponentList centraliser_components(CentraliserRow r, const CentraliserCase& c) {
  const int n = c.n, d = c.d, s = c.sign;
  switch (r) {
    case CentraliserRow::B1:
      // B_{n-d}.^delta D_d; ^delta D_1 is a torus of order q - delta
      if (d == 1) return {{{Family::B, n - d}}, s < 0};
      return {{{Family::B, n - d}, {twisted(Family::D, s), d}}, true};
    case CentraliserRow::C1: return {{{Family::C, n / 2}, {Family::C, n / 2}}, true};
    case CentraliserRow::C2: return {{{Family::C, n / 2}}, true};
    case CentraliserRow::C3:
      // ^delta A_{n-1}(q).(q - delta)
      return {{{twisted(Family::A, s), n}}, s < 0};
    case CentraliserRow::C4:
      // C_d(q)^2.^eps A_{n-2d-1}(q).(q - eps)
      return {{{Family::C, d}, {Family::C, d}, {twisted(Family::A, s), n - 2 * d}}, s < 0};
    case CentraliserRow::C5:
      // C_d(q^2).^{-eps} A_{n-2d-1}(q).(q + eps)
      return {{{Family::C, d}, {twisted(Family::A, -s), n - 2 * d}}, s > 0};
  }
  return {};
}

bool centraliser_condition(CentraliserRow r, const CentraliserCase& c) {
  const int n = c.n, d = c.d, s = c.sign;
  switch (r) {
    case CentraliserRow::B1: return n - d >= 0 && (n - d) % 2 == 0 && is_triangular((n - d) / 2) && is_square(d);
    case CentraliserRow::C1:
    case CentraliserRow::C2: return n % 4 == 0 && is_triangular(n / 4);
    case CentraliserRow::C3: return s < 0 && is_triangular(n);
    case CentraliserRow::C4: return d % 2 == 0 && is_triangular(d / 2) && s < 0 && is_triangular(n - 2 * d);
    case CentraliserRow::C5: return d % 2 == 0 && is_triangular(d / 2) && s > 0 && is_triangular(n - 2 * d);
  }
  return false;
}

bool centraliser_agrees(CentraliserRow r, const CentraliserCase& c) {
  bool computed;
  if (centraliser_sign_free(r)) {
    computed = series_has_cuspidal(centraliser_components(r, {c.n, c.d, 1})) ||
               series_has_cuspidal(centraliser_components(r, {c.n, c.d, -1}));
  } else {
    computed = series_has_cuspidal(centraliser_components(r, c));
  }
  return computed == centraliser_condition(r, c);
}

}  // namespace unip
