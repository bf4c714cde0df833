#pragma once

// Exact generic orders and degrees in cyclotomic-factored form:
//
//     sign * 2^e * q^a * prod_d Phi_d(q)^{m_d}
//
// Every order and degree formula in this library is a product or quotient of
// q-powers, (q^k +- 1) and powers of two, so nothing is ever expanded into a
// coefficient vector.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unip {

enum class Family { A, TwoA, B, C, D, TwoD };

std::string to_string(Family f);
Family parse_family(std::string_view s);

// A and 2A carry the partition size
// n (group A_{n-1}), the other families carry the symbol rank n.
struct GroupType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

std::string to_string(const GroupType& t);

class CycFactored {
 public:
  CycFactored() = default;  // the constant 1

  static CycFactored q_power(int a);
  static CycFactored two_power(int e);
  static CycFactored phi(int d, int mult = 1);

  int sign() const { return sign_; }
  int two_exp() const { return two_exp_; }
  int q_exp() const { return q_exp_; }
  const std::map<int, int>& phis() const { return phi_; }
  int phi_mult(int d) const;

  // All Phi multiplicities non-negative.
  bool is_polynomial() const;

  CycFactored& operator*=(const CycFactored& rhs);
  CycFactored& operator/=(const CycFactored& rhs);
  friend CycFactored operator*(CycFactored lhs, const CycFactored& rhs) { return lhs *= rhs; }
  friend CycFactored operator/(CycFactored lhs, const CycFactored& rhs) { return lhs /= rhs; }
  CycFactored operator-() const;
  CycFactored abs() const;

  friend bool operator==(const CycFactored&, const CycFactored&) = default;

  // Ennola substitution q -> -q, sign tracked exactly.
  CycFactored substitute_minus_q() const;

  mpq_class evaluate(const mpz_class& q0) const;
  // Formal value at q = 1; empty when Phi_1 occurs with non-zero multiplicity.
  std::optional<mpq_class> value_at_one() const;

  // `[-]2^e*q^a*Phi<d>^<m>*...`, Phi factors by ascending d.
  std::string to_string() const;
  static CycFactored parse(std::string_view text);

 private:
  void set_phi(int d, int mult);

  int sign_ = 1;
  int two_exp_ = 0;
  int q_exp_ = 0;
  std::map<int, int> phi_;
};

// Exact factorisation of q^k + sign, sign in {-1, +1}.
CycFactored factor_qpow_pm1(int k, int sign);

// Generic order |G| of the simply connected group of the given type.
CycFactored order_poly(const GroupType& t);

inline int phi_mult(const CycFactored& p, int d) { return p.phi_mult(d); }

std::vector<int> divisors(int n);
int moebius(int n);

// Phi_d(q0) as an exact integer.
mpz_class cyclotomic_value(int d, const mpz_class& q0);

// Primes l with ord_l(q) == d, ascending.
std::vector<mpz_class> zsigmondy(const mpz_class& q, int d);

// True iff q has multiplicative order exactly d modulo the prime p.
bool has_multiplicative_order(const mpz_class& q, const mpz_class& p, int d);

std::vector<int> prime_divisors(int n);

}  // namespace unip
