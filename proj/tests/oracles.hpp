#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the code under test except for value types, enumeration of partitions and
// the cyclotomic factorisation of q^k +- 1 (which has its own tests).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "unip/partitions.hpp"
#include "unip/qfactor.hpp"
#include "unip/symbols.hpp"

namespace oracle {

using unip::CycFactored;
using unip::Partition;

// Kostka number: semistandard tableaux of shape kappa and content beta
// (beta any composition).
std::uint64_t kostka(const Partition& kappa, const std::vector<int>& beta);

// Schur expansion of s_mu * s_nu, by extracting monomial coefficients and
// peeling off Schur functions in decreasing lexicographic order.
std::map<Partition, std::uint64_t> schur_product(const Partition& mu, const Partition& nu);

// Primes l with ord_l(q) = d, by trial division of q^d - 1 (fits in 64 bits)
// and a direct order check.
std::vector<std::uint64_t> zsigmondy(std::uint64_t q, int d);

// Standard tableaux counted by removing corners.
mpz_class count_syt(const Partition& p);

// Number of hooks of length divisible by e (equals the e-weight).
int hooks_divisible(const Partition& p, int e);

// Degree of a unipotent character of GL_n / GU_n from the beta-set product
// formula.
CycFactored degree_A_product(const Partition& p, bool twisted);

// Degree from the symbol product formula (one character for a degenerate
// D-symbol).
CycFactored degree_symbol_product(const unip::Symbol& s, unip::Family f);

// |G|_{q-part and p'-part} straight from the product definition at q0.
mpz_class order_literal(const unip::GroupType& t, const mpz_class& q0);

// Ways of matching the parts of mu and nu (both padded with zeros to
// target.length()) so that the pairwise sums are the parts of target.
std::uint64_t additive_ways(const Partition& mu, const Partition& nu, const Partition& target);

// Order of q modulo p by repeated multiplication, 0 if p | q.
int mult_order(std::uint64_t q, std::uint64_t p);

}  // namespace oracle
