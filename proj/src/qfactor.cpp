#include "unip/qfactor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "unip/errors.hpp"

namespace unip {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::TwoA: return "2A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::TwoD: return "2D";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "2A") return Family::TwoA;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "2D") return Family::TwoD;
  throw ParseError("unknown family '" + std::string(s) + "' (expected A, 2A, B, C, D or 2D)");
}

std::string to_string(const GroupType& t) {
  switch (t.family) {
    case Family::A: return "A" + std::to_string(t.rank - 1);
    case Family::TwoA: return "2A" + std::to_string(t.rank - 1);
    default: return to_string(t.family) + std::to_string(t.rank);
  }
}

// ---------------------------------------------------------------------------
// elementary number theory

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

mpz_class cyclotomic_value(int d, const mpz_class& q0) {
  mpz_class num = 1, den = 1;
  for (int k : divisors(d)) {
    int mu = moebius(d / k);
    if (mu == 0) continue;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(k));
    term -= 1;
    if (mu > 0)
      num *= term;
    else
      den *= term;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

bool has_multiplicative_order(const mpz_class& q, const mpz_class& p, int d) {
  if (p < 2 || d < 1) return false;
  mpz_class r = q % p;
  if (r < 0) r += p;
  if (r == 0) return false;
  auto pow_is_one = [&](int e) {
    mpz_class v;
    mpz_powm_ui(v.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(e), p.get_mpz_t());
    return v == 1;
  };
  if (!pow_is_one(d)) return false;
  for (int s : prime_divisors(d))
    if (pow_is_one(d / s)) return false;
  return true;
}

std::vector<mpz_class> zsigmondy(const mpz_class& q, int d) {
  if (q < 2) throw DomainError("zsigmondy: q must be at least 2");
  if (d < 1) throw DomainError("zsigmondy: d must be at least 1");

  // Every prime of order d divides Phi_d(q); the only other primes dividing
  // Phi_d(q) divide d. Primitive primes are 1 mod d.
  mpz_class n = cyclotomic_value(d, q);
  for (int r : prime_divisors(d))
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(r)) != 0)
      n /= r;

  std::vector<mpz_class> candidates;
  mpz_class c = (d == 1) ? mpz_class(2) : mpz_class(d + 1);
  const int step = (d == 1) ? 1 : d;
  while (n > 1 && c * c <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), c.get_mpz_t()) != 0) {
      candidates.push_back(c);
      do {
        n /= c;
      } while (mpz_divisible_p(n.get_mpz_t(), c.get_mpz_t()) != 0);
    }
    c += step;
  }
  if (n > 1) candidates.push_back(n);

  std::vector<mpz_class> primes;
  for (const auto& p : candidates)
    if (has_multiplicative_order(q, p, d)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  return primes;
}

// ---------------------------------------------------------------------------
// CycFactored

CycFactored CycFactored::q_power(int a) {
  CycFactored f;
  f.q_exp_ = a;
  return f;
}

CycFactored CycFactored::two_power(int e) {
  CycFactored f;
  f.two_exp_ = e;
  return f;
}

CycFactored CycFactored::phi(int d, int mult) {
  if (d < 1) throw DomainError("Phi_d requires d >= 1");
  CycFactored f;
  f.set_phi(d, mult);
  return f;
}

void CycFactored::set_phi(int d, int mult) {
  if (mult == 0)
    phi_.erase(d);
  else
    phi_[d] = mult;
}

int CycFactored::phi_mult(int d) const {
  auto it = phi_.find(d);
  return it == phi_.end() ? 0 : it->second;
}

bool CycFactored::is_polynomial() const {
  for (const auto& [d, m] : phi_)
    if (m < 0) return false;
  return q_exp_ >= 0;
}

CycFactored& CycFactored::operator*=(const CycFactored& rhs) {
  sign_ *= rhs.sign_;
  two_exp_ += rhs.two_exp_;
  q_exp_ += rhs.q_exp_;
  for (const auto& [d, m] : rhs.phi_) set_phi(d, phi_mult(d) + m);
  return *this;
}

CycFactored& CycFactored::operator/=(const CycFactored& rhs) {
  sign_ *= rhs.sign_;
  two_exp_ -= rhs.two_exp_;
  q_exp_ -= rhs.q_exp_;
  for (const auto& [d, m] : rhs.phi_) set_phi(d, phi_mult(d) - m);
  return *this;
}

CycFactored CycFactored::operator-() const {
  CycFactored f = *this;
  f.sign_ = -f.sign_;
  return f;
}

CycFactored CycFactored::abs() const {
  CycFactored f = *this;
  f.sign_ = 1;
  return f;
}

CycFactored CycFactored::substitute_minus_q() const {
  // Phi_1(-q) = -Phi_2(q), Phi_2(-q) = -Phi_1(q), Phi_d(-q) = Phi_2d(q) for odd
  // d > 1, Phi_d(-q) = Phi_{d/2}(q) for d = 2 mod 4, d > 2, else unchanged.
  CycFactored out;
  out.sign_ = sign_;
  out.two_exp_ = two_exp_;
  out.q_exp_ = q_exp_;
  int flips = q_exp_;
  for (const auto& [d, m] : phi_) {
    int target = d;
    if (d == 1) {
      target = 2;
      flips += m;
    } else if (d == 2) {
      target = 1;
      flips += m;
    } else if (d % 2 == 1) {
      target = 2 * d;
    } else if (d % 4 == 2) {
      target = d / 2;
    }
    out.set_phi(target, out.phi_mult(target) + m);
  }
  if (flips % 2 != 0) out.sign_ = -out.sign_;
  return out;
}

namespace {

mpq_class pow_q(const mpq_class& base, int e) {
  mpq_class out = 1;
  mpz_class num, den;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ue);
  if (e >= 0)
    out = mpq_class(num, den);
  else
    out = mpq_class(den, num);
  out.canonicalize();
  return out;
}

}  // namespace

mpq_class CycFactored::evaluate(const mpz_class& q0) const {
  if (q0 < 2) throw DomainError("evaluate: q0 must be at least 2");
  mpq_class value = sign_;
  value *= pow_q(mpq_class(2), two_exp_);
  value *= pow_q(mpq_class(q0), q_exp_);
  for (const auto& [d, m] : phi_) value *= pow_q(mpq_class(cyclotomic_value(d, q0)), m);
  value.canonicalize();
  return value;
}

std::optional<mpq_class> CycFactored::value_at_one() const {
  if (phi_mult(1) != 0) return std::nullopt;
  mpq_class value = sign_;
  value *= pow_q(mpq_class(2), two_exp_);
  for (const auto& [d, m] : phi_) {
    // Phi_d(1) = p when d is a power of the prime p, else 1.
    auto ps = prime_divisors(d);
    if (ps.size() == 1) value *= pow_q(mpq_class(ps.front()), m);
  }
  value.canonicalize();
  return value;
}

std::string CycFactored::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  os << "2^" << two_exp_ << "*q^" << q_exp_;
  for (const auto& [d, m] : phi_) os << "*Phi" << d << '^' << m;
  return os.str();
}

namespace {

class FactorParser {
 public:
  explicit FactorParser(std::string_view s) : s_(s) {}

  CycFactored parse() {
    CycFactored out;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      out = -out;
      skip_ws();
    }
    out *= parse_factor();
    skip_ws();
    while (pos_ < s_.size()) {
      expect('*');
      skip_ws();
      out *= parse_factor();
      skip_ws();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("factored polynomial '" + std::string(s_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }

  int parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc()) fail("integer out of range");
    return neg ? -value : value;
  }

  int parse_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return parse_int();
  }

  CycFactored parse_factor() {
    if (s_.substr(pos_, 3) == "Phi") {
      pos_ += 3;
      int d = parse_int();
      if (d < 1) fail("Phi index must be positive");
      return CycFactored::phi(d, parse_exponent());
    }
    if (peek() == 'q') {
      ++pos_;
      return CycFactored::q_power(parse_exponent());
    }
    if (peek() == '2' || peek() == '1') {
      int base = parse_int();
      if (base == 1) return CycFactored{};
      if (base != 2) fail("only 1 and powers of 2 are allowed as constants");
      return CycFactored::two_power(parse_exponent());
    }
    fail("expected 2^e, q^a or Phi<d>^<m>");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

CycFactored CycFactored::parse(std::string_view text) { return FactorParser(text).parse(); }

// ---------------------------------------------------------------------------

CycFactored factor_qpow_pm1(int k, int sign) {
  if (k < 1) throw DomainError("factor_qpow_pm1: k must be positive");
  CycFactored out;
  if (sign < 0) {
    for (int d : divisors(k)) out *= CycFactored::phi(d);
  } else {
    for (int d : divisors(2 * k))
      if (k % d != 0) out *= CycFactored::phi(d);
  }
  return out;
}

CycFactored order_poly(const GroupType& t) {
  const int n = t.rank;
  if (n < 1) throw DomainError("order_poly: rank must be positive");
  CycFactored out;
  switch (t.family) {
    case Family::A:
      out = CycFactored::q_power(n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) out *= factor_qpow_pm1(i, -1);
      break;
    case Family::TwoA:
      out = CycFactored::q_power(n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) out *= factor_qpow_pm1(i, i % 2 == 0 ? -1 : +1);
      break;
    case Family::B:
    case Family::C:
      out = CycFactored::q_power(n * n);
      for (int i = 1; i <= n; ++i) out *= factor_qpow_pm1(2 * i, -1);
      break;
    case Family::D:
    case Family::TwoD:
      out = CycFactored::q_power(n * (n - 1));
      out *= factor_qpow_pm1(n, t.family == Family::D ? -1 : +1);
      for (int i = 1; i < n; ++i) out *= factor_qpow_pm1(2 * i, -1);
      break;
  }
  return out;
}

}  // namespace unip
