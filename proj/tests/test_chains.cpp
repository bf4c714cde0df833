#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "unip/chains.hpp"
#include "unip/errors.hpp"

using namespace unip;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Symbol S(const char* g) { return Symbol::parse(g); }
WCharLabel WB(Partition a, Partition b) { return WCharLabel(WeylKind::B, {std::move(a), std::move(b)}); }
WCharLabel WD(Partition a, Partition b) { return WCharLabel(WeylKind::D, {std::move(a), std::move(b)}); }

ChainNode node(const Label& l) {
  return std::visit([](const auto& x) { return ChainNode(x); }, l);
}

std::vector<int> degrees(const std::vector<ChainStep>& c) {
  std::vector<int> out;
  for (const auto& s : c) out.push_back(std::get<BrauerCertificate>(s.certificate).d);
  return out;
}

std::vector<Partition> psis(const std::vector<ChainStep>& c) {
  std::vector<Partition> out;
  for (const auto& s : c) out.push_back(std::get<InductionCertificate>(s.certificate).psi);
  return out;
}

bool mentions(const ChainReport& r, const std::string& needle) {
  for (const auto& e : r.edges)
    for (const auto& s : e.reasons)
      if (s.find(needle) != std::string::npos) return true;
  for (const auto& s : r.chain_reasons)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("admissible degrees") {
  CHECK(admissible_degree({Family::A, 3}, 3));
  CHECK_FALSE(admissible_degree({Family::A, 4}, 4));
  CHECK_FALSE(admissible_degree({Family::B, 6}, 2));
  CHECK_FALSE(admissible_degree({Family::B, 6}, 6));
  CHECK(admissible_degree({Family::B, 6}, 8));
  CHECK(admissible_degree({Family::TwoA, 3}, 6));
  CHECK_FALSE(admissible_degree({Family::TwoA, 6}, 6));
  CHECK(admissible_degree({Family::D, 4}, 6));
  CHECK_FALSE(admissible_degree({Family::D, 16}, 12));
  CHECK(zsigmondy_exception({Family::TwoA, 3}, 2));
  CHECK(zsigmondy_exception({Family::D, 4}, 2));
  CHECK_FALSE(zsigmondy_exception({Family::D, 4}, 3));
  CHECK_FALSE(zsigmondy_exception({Family::B, 6}, 2));
}

TEST_CASE("Brauer chains for generic q") {
  using V = std::vector<int>;
  CHECK(degrees(brauer_chain({Family::TwoA, 3})) == V{6});
  CHECK(degrees(brauer_chain({Family::TwoA, 6})) == V{10});
  CHECK(degrees(brauer_chain({Family::TwoA, 10})) == V{14, 5});
  CHECK(degrees(brauer_chain({Family::TwoA, 15})) == V{18, 7});
  CHECK(degrees(brauer_chain({Family::B, 2})) == V{4});
  CHECK(degrees(brauer_chain({Family::C, 6})) == V{8, 5});
  CHECK(degrees(brauer_chain({Family::B, 12})) == V{12, 9, 22});
  CHECK(degrees(brauer_chain({Family::D, 4})) == V{6});
  CHECK(degrees(brauer_chain({Family::D, 16})) == V{14, 11, 28});
  CHECK(degrees(brauer_chain({Family::TwoD, 9})) == V{10, 7});
}

TEST_CASE("single steps") {
  const auto u3 = brauer_chain({Family::TwoA, 3});
  REQUIRE(u3.size() == 1);
  CHECK(std::get<Partition>(u3[0].from) == P({2, 1}));
  CHECK(std::get<Partition>(u3[0].to) == P({3}));

  const auto b2 = brauer_chain({Family::B, 2});
  REQUIRE(b2.size() == 1);
  CHECK(std::get<Symbol>(b2[0].from) == S("[[0,1,2],[]]"));
  CHECK(std::get<Symbol>(b2[0].to) == S("[[2],[]]"));

  const auto d4 = brauer_chain({Family::D, 4});
  REQUIRE(d4.size() == 1);
  CHECK(std::get<Symbol>(d4[0].from) == S("[[0,1,2,3],[]]"));
  CHECK(std::get<Symbol>(d4[0].to) == S("[[0,1],[0,5]]"));
  const auto& cert = std::get<BrauerCertificate>(d4[0].certificate);
  CHECK(cert.e == 3);
  CHECK(cert.mode == HookMode::Cohook);
  CHECK(std::get<Symbol>(cert.core) == S("[[0,1],[]]"));
}

TEST_CASE("chains at q = 2") {
  CHECK_THROWS_AS(brauer_chain({Family::TwoA, 3}, mpz_class(2)), DomainError);
  CHECK_THROWS_AS(brauer_chain({Family::D, 4}, mpz_class(2)), DomainError);
  for (Family f : {Family::B, Family::C}) {
    const auto c = brauer_chain({f, 6}, mpz_class(2));
    for (int d : degrees(c)) CHECK(d != 6);
    for (const auto& s : c) {
      const auto& cert = std::get<BrauerCertificate>(s.certificate);
      REQUIRE(cert.prime);
      CHECK(*cert.q == 2);
    }
    CHECK(verify_chain(c).ok);
  }
  CHECK(verify_chain(brauer_chain({Family::TwoA, 6}, mpz_class(2))).ok);
  CHECK(verify_chain(brauer_chain({Family::D, 16}, mpz_class(3))).ok);
}

TEST_CASE("endpoints and verification") {
  for (Family f : {Family::TwoA, Family::B, Family::C, Family::D, Family::TwoD})
    for (int a = 1; a <= 4; ++a) {
      const GroupType t{f, f == Family::TwoA ? a * (a + 1) / 2 : (f == Family::B || f == Family::C) ? a * (a + 1) : a * a};
      if (f == Family::D && a % 2 == 1) continue;
      if (f == Family::TwoD && a % 2 == 0) continue;
      if (t.rank < 2 && f != Family::B && f != Family::C) continue;
      INFO(to_string(t));
      const auto c = brauer_chain(t);
      if (c.empty()) continue;
      CHECK(c.front().from == node(*cuspidal_label(t)));
      CHECK(c.back().to == node(trivial_label(t)));
      const auto r = verify_chain(c);
      CHECK(r.ok);
    }
}

TEST_CASE("tampered edges are rejected") {
  auto c = brauer_chain({Family::B, 6}, mpz_class(2));
  REQUIRE(c.size() == 2);

  // 2A2(2) has no Zsigmondy prime for its only degree
  auto bad_d = brauer_chain({Family::TwoA, 3});
  std::get<BrauerCertificate>(bad_d[0].certificate).q = mpz_class(2);
  auto r = verify_chain(bad_d);
  CHECK_FALSE(r.ok);
  CHECK(mentions(r, "no Zsigmondy prime"));

  auto bad_core = c;
  std::get<BrauerCertificate>(bad_core[1].certificate).core = Label(S("[[0,1,2],[]]"));
  r = verify_chain(bad_core);
  CHECK_FALSE(r.ok);
  CHECK(mentions(r, "core mismatch"));

  auto bad_prime = c;
  std::get<BrauerCertificate>(bad_prime[0].certificate).prime = mpz_class(7);
  r = verify_chain(bad_prime);
  CHECK_FALSE(r.ok);
  CHECK(mentions(r, "is not a Zsigmondy prime"));

  auto gap = c;
  gap.erase(gap.begin());
  r = verify_chain(gap);
  CHECK_FALSE(r.ok);
  CHECK(mentions(r, "cuspidal"));

  auto swapped = c;
  std::swap(swapped[0], swapped[1]);
  CHECK(mentions(verify_chain(swapped), "discontinuous"));

  CHECK(verify_chain({}).ok);
}

TEST_CASE("Lusztig chains") {
  using V = std::vector<Partition>;
  CHECK(psis(lusztig_chain({Family::B, 2})) == V{P({2})});

  const auto b6 = lusztig_chain({Family::B, 6});
  REQUIRE(b6.size() == 2);
  CHECK(std::get<WCharLabel>(b6[0].from) == WB(P({2, 1}), P({2, 1})));
  CHECK(std::get<WCharLabel>(b6[0].to) == WB(P({4}), P({2})));
  CHECK(std::get<WCharLabel>(b6[1].to) == WB(P({6}), Partition()));
  CHECK(psis(b6) == V{P({4, 2}), P({6})});

  CHECK(psis(lusztig_chain({Family::C, 12})) == V{P({6, 4, 2}), P({8, 4}), P({12})});

  const auto d4 = lusztig_chain({Family::D, 4});
  REQUIRE(d4.size() == 1);
  CHECK(std::get<WCharLabel>(d4[0].from) == WD(P({2, 1}), P({1})));
  CHECK(std::get<WCharLabel>(d4[0].to) == WD(P({4}), Partition()));
  CHECK(psis(d4) == V{P({3})});
  CHECK(std::get<InductionCertificate>(d4[0].certificate).via_step);

  const auto d9 = lusztig_chain({Family::TwoD, 9});
  REQUIRE(d9.size() == 2);
  CHECK(std::get<WCharLabel>(d9[0].from) == WD(P({3, 2, 1}), P({2, 1})));
  CHECK(std::get<WCharLabel>(d9[1].from) == WD(P({6, 1}), P({2})));
  CHECK(psis(d9) == V{P({5, 3}), P({8})});

  CHECK(lusztig_chain({Family::TwoD, 1}).empty());
  CHECK_THROWS_AS(lusztig_chain({Family::TwoA, 3}), DomainError);

  for (const auto& c : {b6, d4, d9}) CHECK(verify_chain(c).ok);
}

TEST_CASE("tampered induction edges") {
  auto c = lusztig_chain({Family::B, 6});
  std::get<InductionCertificate>(c[0].certificate).psi = P({6});
  auto r = verify_chain(c);
  CHECK_FALSE(r.ok);
  CHECK(mentions(r, "multiplicity"));

  auto d = lusztig_chain({Family::D, 4});
  std::get<InductionCertificate>(d[0].certificate).via_step = false;
  CHECK_FALSE(verify_chain(d).ok);
}

TEST_CASE("determinism and JSON round trip") {
  for (const auto& t : {GroupType{Family::B, 12}, GroupType{Family::TwoD, 9}, GroupType{Family::TwoA, 10}}) {
    const auto a = chain_to_json(brauer_chain(t, mpz_class(3)));
    const auto b = chain_to_json(brauer_chain(t, mpz_class(3)));
    CHECK(a.dump() == b.dump());
    const auto back = chain_from_json(a);
    CHECK(chain_to_json(back).dump() == a.dump());
    CHECK(verify_chain(back).ok);
  }
  const auto l = chain_to_json(lusztig_chain({Family::D, 4}));
  CHECK(chain_to_json(chain_from_json(l)).dump() == l.dump());
  CHECK_THROWS_AS(chain_from_json(nlohmann::ordered_json::parse(R"([{"from":"[2,1]"}])")), ParseError);
}
