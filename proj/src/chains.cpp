#include "unip/chains.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "unip/errors.hpp"

namespace unip {

using nlohmann::ordered_json;

std::string to_string(const ChainNode& n) {
  return std::visit([](const auto& x) { return x.to_string(); }, n);
}

bool admissible_degree(const GroupType& t, int d) {
  if (d <= 2) return false;
  if (d % 2 == 1) return true;
  auto dg = d_G(t);
  return dg && d >= *dg;
}

bool zsigmondy_exception(const GroupType& t, const mpz_class& q) {
  if (q != 2) return false;
  return (t.family == Family::TwoA && t.rank == 3) || (t.family == Family::D && t.rank == 4);
}

namespace {

std::optional<Label> as_label(const ChainNode& n) {
  if (const auto* p = std::get_if<Partition>(&n)) return Label{*p};
  if (const auto* s = std::get_if<Symbol>(&n)) return Label{*s};
  return std::nullopt;
}

ChainNode to_node(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l)) return *p;
  return std::get<Symbol>(l);
}

Label strip_tag(const Label& l) {
  if (const auto* s = std::get_if<Symbol>(&l)) return s->untagged();
  return l;
}

bool is_label_of(const Label& l, const GroupType& t) {
  try {
    check_label(l, t);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<Label> add_one_hook(const Label& core, const HookParam& p) {
  std::vector<Label> out;
  if (const auto* part = std::get_if<Partition>(&core)) {
    for (auto& x : add_rim_hooks(*part, p.e)) out.emplace_back(std::move(x));
  } else {
    for (auto& x : add_one(std::get<Symbol>(core), p.e, p.mode)) out.emplace_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ChainStep> brauer_chain(const GroupType& t, const std::optional<mpz_class>& q) {
  if (q && *q < 2) throw DomainError("invalid q: must be at least 2");
  auto cusp = cuspidal_label(t);
  if (!cusp) throw DomainError("no chain: " + to_string(t) + " has no cuspidal unipotent character");
  const Label start = strip_tag(*cusp);
  const Label target = trivial_label(t);

  struct Degree {
    int d;
    HookParam p;
    std::optional<mpz_class> prime;
  };
  std::vector<Degree> degrees;
  for (int d = 3; d <= 2 * t.rank + 2; ++d) {
    if (!admissible_degree(t, d)) continue;
    auto p = e_of_d(t.family, d);
    if (p.e > t.rank) continue;
    std::optional<mpz_class> prime;
    if (q) {
      auto z = zsigmondy(*q, d);
      if (z.empty()) continue;
      prime = z.front();
    }
    degrees.push_back({d, p, prime});
  }

  struct Parent {
    Label from;
    size_t degree;
    Label core;
  };
  std::map<Label, std::optional<Parent>> seen;
  seen.emplace(start, std::nullopt);
  std::deque<Label> frontier{start};
  while (!frontier.empty() && !seen.contains(target)) {
    Label u = frontier.front();
    frontier.pop_front();
    for (size_t i = 0; i < degrees.size(); ++i) {
      auto lc = label_core(u, degrees[i].p);
      if (lc.weight != 1) continue;
      for (auto& v : add_one_hook(lc.core, degrees[i].p)) {
        if (v == u || seen.contains(v) || !is_label_of(v, t)) continue;
        seen.emplace(v, Parent{u, i, lc.core});
        frontier.push_back(v);
      }
    }
  }
  if (!seen.contains(target))
    throw DomainError("no chain: trivial label unreachable for " + to_string(t) +
                      (q ? " at q=" + q->get_str() : std::string()));

  std::vector<ChainStep> steps;
  for (Label v = target; seen.at(v);) {
    const Parent& par = *seen.at(v);
    const Degree& deg = degrees[par.degree];
    BrauerCertificate c{t, deg.d, deg.p.e, deg.p.mode, par.core, q, deg.prime};
    steps.push_back({to_node(par.from), to_node(v), c});
    v = par.from;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

namespace {

WeylKind weyl_kind_of(const GroupType& t) {
  switch (t.family) {
    case Family::B:
    case Family::C: return WeylKind::B;
    case Family::D:
    case Family::TwoD: return WeylKind::D;
    default: throw DomainError("induction chains need type B, C, D or 2D, got " + to_string(t.family));
  }
}

InductionResult induce(WeylKind kind, const Partition& psi) {
  return kind == WeylKind::B ? ind_sym_to_B(psi) : ind_sym_step_to_D(psi);
}

}  // namespace

std::vector<ChainStep> lusztig_chain(const GroupType& t) {
  const WeylKind kind = weyl_kind_of(t);
  auto cusp = cuspidal_label(t);
  if (!cusp) throw DomainError("no chain: " + to_string(t) + " has no cuspidal unipotent character");
  const WCharLabel start = principal2_dictionary(std::get<Symbol>(*cusp));
  const WCharLabel target(kind, Bipartition{Partition({t.rank}), Partition()});
  const bool step = kind == WeylKind::D;
  if (start == target) return {};

  // Constituents of multiplicity one for each psi, psi and labels descending.
  struct Source {
    Partition psi;
    std::set<WCharLabel> ones;
    std::vector<WCharLabel> order;
  };
  std::vector<Source> sources;
  for (auto& psi : partitions_of(step ? t.rank - 1 : t.rank)) {
    Source s{psi, {}, {}};
    auto r = induce(kind, psi);
    for (auto it = r.entries.rbegin(); it != r.entries.rend(); ++it)
      if (it->second == 1) {
        s.ones.insert(it->first);
        s.order.push_back(it->first);
      }
    sources.push_back(std::move(s));
  }

  struct Parent {
    WCharLabel from;
    size_t source;
  };
  std::map<WCharLabel, std::optional<Parent>> seen;
  seen.emplace(start, std::nullopt);
  std::deque<WCharLabel> frontier{start};
  while (!frontier.empty() && !seen.contains(target)) {
    WCharLabel u = frontier.front();
    frontier.pop_front();
    for (size_t i = 0; i < sources.size(); ++i) {
      if (!sources[i].ones.contains(u)) continue;
      for (const auto& v : sources[i].order) {
        if (seen.contains(v)) continue;
        seen.emplace(v, Parent{u, i});
        frontier.push_back(v);
      }
    }
  }
  if (!seen.contains(target)) throw DomainError("no chain: trivial label unreachable for " + to_string(t));

  std::vector<ChainStep> steps;
  for (WCharLabel v = target; seen.at(v);) {
    const Parent& par = *seen.at(v);
    InductionCertificate c{t, kind, sources[par.source].psi, step, 1, 1};
    steps.push_back({par.from, v, c});
    v = par.from;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

namespace {

// Multiplicity of c in the induced character of psi, straight from LR.
std::uint64_t lr_multiplicity(const WCharLabel& c, const Partition& psi, bool via_step) {
  const auto& [mu, nu] = c.bp();
  std::vector<Partition> lambdas;
  if (via_step)
    lambdas = ind_sym_step(psi);
  else
    lambdas.push_back(psi);
  std::uint64_t m = 0;
  for (const auto& lambda : lambdas) {
    if (lambda.size() != mu.size() + nu.size()) continue;
    m += lr_coeff(lambda, mu, nu);
  }
  return m;
}

void check_brauer(const ChainStep& s, const BrauerCertificate& c, EdgeReport& r) {
  auto fail = [&](std::string why) {
    r.ok = false;
    r.reasons.push_back(std::move(why));
  };
  auto from = as_label(s.from);
  auto to = as_label(s.to);
  if (!from || !to) return fail("endpoint is not a unipotent label");
  for (const Label* l : {&*from, &*to})
    if (!is_label_of(*l, c.type)) fail("label " + to_string(*l) + " is not a label of type " + to_string(c.type));
  if (!r.ok) return;
  if (strip_tag(*from) == strip_tag(*to)) fail("endpoints coincide");
  if (!admissible_degree(c.type, c.d)) return fail("inadmissible degree d=" + std::to_string(c.d));
  const auto p = e_of_d(c.type.family, c.d);
  if (p.e != c.e || p.mode != c.mode) return fail("hook parameter mismatch for d=" + std::to_string(c.d));
  const auto a = label_core(*from, p);
  const auto b = label_core(*to, p);
  if (a.weight != 1) fail("from-label has weight " + std::to_string(a.weight) + ", expected 1");
  if (b.weight != 1) fail("to-label has weight " + std::to_string(b.weight) + ", expected 1");
  if (a.core != b.core)
    fail("core mismatch: " + to_string(a.core) + " vs " + to_string(b.core));
  else if (a.core != strip_tag(c.core))
    fail("core mismatch: certificate records " + to_string(c.core) + ", recomputed " + to_string(a.core));
  if (c.prime && !c.q) fail("witness prime without q");
  if (c.q) {
    if (*c.q < 2) return fail("invalid q");
    auto z = zsigmondy(*c.q, c.d);
    if (z.empty())
      fail("no Zsigmondy prime for q=" + c.q->get_str() + ", d=" + std::to_string(c.d));
    else if (!c.prime)
      fail("missing Zsigmondy witness");
    else if (std::find(z.begin(), z.end(), *c.prime) == z.end())
      fail("witness " + c.prime->get_str() + " is not a Zsigmondy prime for d=" + std::to_string(c.d));
  }
}

void check_induction(const ChainStep& s, const InductionCertificate& c, EdgeReport& r) {
  auto fail = [&](std::string why) {
    r.ok = false;
    r.reasons.push_back(std::move(why));
  };
  const auto* from = std::get_if<WCharLabel>(&s.from);
  const auto* to = std::get_if<WCharLabel>(&s.to);
  if (!from || !to) return fail("endpoint is not a Weyl group label");
  WeylKind kind;
  try {
    kind = weyl_kind_of(c.type);
  } catch (const DomainError& e) {
    return fail(e.what());
  }
  if (c.kind != kind) return fail("Weyl group kind does not match type " + to_string(c.type));
  if (c.via_step != (kind == WeylKind::D)) fail("parabolic shape does not match type " + to_string(c.type));
  for (const WCharLabel* w : {from, to}) {
    if (w->kind() != kind) fail("label " + w->to_string() + " has the wrong Weyl group kind");
    if (w->size() != c.type.rank) fail("label " + w->to_string() + " has the wrong size");
  }
  const int want = c.via_step ? c.type.rank - 1 : c.type.rank;
  if (c.psi.size() != want) fail("psi " + c.psi.to_string() + " has size " + std::to_string(c.psi.size()));
  if (!r.ok) return;
  if (*from == *to) fail("endpoints coincide");
  const auto mf = lr_multiplicity(*from, c.psi, c.via_step);
  const auto mt = lr_multiplicity(*to, c.psi, c.via_step);
  if (mf != c.mult_from || mt != c.mult_to)
    fail("multiplicity mismatch: recomputed " + std::to_string(mf) + "," + std::to_string(mt));
  if (mf != 1) fail("from-label has multiplicity " + std::to_string(mf) + ", expected 1");
  if (mt != 1) fail("to-label has multiplicity " + std::to_string(mt) + ", expected 1");
}

const GroupType& type_of(const ChainStep& s) {
  return std::visit([](const auto& c) -> const GroupType& { return c.type; }, s.certificate);
}

}  // namespace

ChainReport verify_chain(const std::vector<ChainStep>& steps) {
  ChainReport rep;
  for (size_t i = 0; i < steps.size(); ++i) {
    EdgeReport r;
    const auto& s = steps[i];
    if (const auto* b = std::get_if<BrauerCertificate>(&s.certificate))
      check_brauer(s, *b, r);
    else
      check_induction(s, std::get<InductionCertificate>(s.certificate), r);
    if (i > 0) {
      if (type_of(steps[i - 1]) != type_of(s)) {
        r.ok = false;
        r.reasons.push_back("type changes along the chain");
      }
      if (to_string(steps[i - 1].to) != to_string(s.from) || steps[i - 1].to.index() != s.from.index()) {
        r.ok = false;
        r.reasons.push_back("discontinuous chain: starts at " + to_string(s.from) + ", previous edge ends at " +
                            to_string(steps[i - 1].to));
      }
    }
    rep.ok = rep.ok && r.ok;
    rep.edges.push_back(std::move(r));
  }
  if (steps.empty()) return rep;

  const GroupType t = type_of(steps.front());
  auto cusp = cuspidal_label(t);
  const bool induction = std::holds_alternative<InductionCertificate>(steps.front().certificate);
  std::optional<ChainNode> start, end;
  try {
    if (!induction) {
      if (cusp) start = to_node(strip_tag(*cusp));
      end = to_node(trivial_label(t));
    } else {
      const WeylKind kind = weyl_kind_of(t);
      if (cusp) start = principal2_dictionary(std::get<Symbol>(*cusp));
      end = WCharLabel(kind, Bipartition{Partition({t.rank}), Partition()});
    }
  } catch (const DomainError& e) {
    rep.chain_reasons.push_back(e.what());
  }
  auto node_key = [](const ChainNode& n) {
    if (const auto* s = std::get_if<Symbol>(&n)) return s->untagged().to_string();
    return to_string(n);
  };
  if (!start)
    rep.chain_reasons.push_back(to_string(t) + " has no cuspidal unipotent character");
  else if (node_key(steps.front().from) != node_key(*start))
    rep.chain_reasons.push_back("chain does not start at the cuspidal label " + to_string(*start));
  if (end && node_key(steps.back().to) != node_key(*end))
    rep.chain_reasons.push_back("chain does not end at the trivial label " + to_string(*end));
  if (!rep.chain_reasons.empty()) rep.ok = false;
  return rep;
}

namespace {

ordered_json big(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

mpz_class big_from(const ordered_json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer: " + j.get<std::string>());
    return x;
  }
  throw ParseError("expected an integer");
}

std::string node_grammar(const ChainNode& n) {
  if (const auto* p = std::get_if<Partition>(&n)) return p->to_string();
  if (const auto* s = std::get_if<Symbol>(&n)) return s->to_grammar();
  return std::get<WCharLabel>(n).bp().to_string();
}

}  // namespace

ordered_json chain_to_json(const std::vector<ChainStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : steps) {
    ordered_json e;
    e["from"] = node_grammar(s.from);
    e["to"] = node_grammar(s.to);
    ordered_json c;
    if (const auto* b = std::get_if<BrauerCertificate>(&s.certificate)) {
      c["kind"] = "brauer";
      c["type"] = to_string(b->type.family);
      c["n"] = b->type.rank;
      c["d"] = b->d;
      c["e"] = b->e;
      c["mode"] = to_string(b->mode);
      c["core"] = to_grammar(b->core);
      if (b->q) c["q"] = big(*b->q);
      if (b->prime) c["prime"] = big(*b->prime);
    } else {
      const auto& i = std::get<InductionCertificate>(s.certificate);
      c["kind"] = "induction";
      c["type"] = to_string(i.type.family);
      c["n"] = i.type.rank;
      c["weyl"] = to_string(i.kind);
      c["psi"] = i.psi.to_string();
      c["via_step"] = i.via_step;
      c["mults"] = {i.mult_from, i.mult_to};
    }
    e["certificate"] = std::move(c);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<ChainStep> chain_from_json(const ordered_json& doc) {
  if (!doc.is_array()) throw ParseError("chain document must be an array of steps");
  std::vector<ChainStep> out;
  try {
    for (const auto& e : doc) {
      const auto& c = e.at("certificate");
      const std::string kind = c.at("kind").get<std::string>();
      const GroupType t{parse_family(c.at("type").get<std::string>()), c.at("n").get<int>()};
      const std::string from = e.at("from").get<std::string>();
      const std::string to = e.at("to").get<std::string>();
      if (kind == "brauer") {
        BrauerCertificate b{t,
                            c.at("d").get<int>(),
                            c.at("e").get<int>(),
                            parse_hook_mode(c.at("mode").get<std::string>()),
                            parse_label(c.at("core").get<std::string>(), t.family),
                            std::nullopt,
                            std::nullopt};
        if (c.contains("q")) b.q = big_from(c.at("q"));
        if (c.contains("prime")) b.prime = big_from(c.at("prime"));
        out.push_back({to_node(parse_label(from, t.family)), to_node(parse_label(to, t.family)), b});
      } else if (kind == "induction") {
        const WeylKind w = parse_weyl_kind(c.at("weyl").get<std::string>());
        const auto& m = c.at("mults");
        if (!m.is_array() || m.size() != 2) throw ParseError("mults must be a pair");
        InductionCertificate i{t,
                               w,
                               Partition::parse(c.at("psi").get<std::string>()),
                               c.at("via_step").get<bool>(),
                               m[0].get<std::uint64_t>(),
                               m[1].get<std::uint64_t>()};
        out.push_back({WCharLabel(w, Bipartition::parse(from)), WCharLabel(w, Bipartition::parse(to)), i});
      } else {
        throw ParseError("unknown certificate kind: " + kind);
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed chain document: ") + ex.what());
  }
  return out;
}

}  // namespace unip
