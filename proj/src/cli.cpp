#include "unip/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unip/blocks.hpp"
#include "unip/census.hpp"
#include "unip/chains.hpp"
#include "unip/errors.hpp"
#include "unip/weyl.hpp"

namespace unip {

using nlohmann::ordered_json;

namespace {

const std::vector<Family> kFamilies = {Family::A, Family::TwoA, Family::B, Family::C, Family::D, Family::TwoD};

ordered_json big(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json rational(const mpq_class& x) {
  if (x.get_den() == 1) return big(x.get_num());
  return x.get_str();
}

mpz_class parse_big(const std::string& s, const char* what) {
  mpz_class x;
  if (s.empty() || x.set_str(s, 10) != 0) throw ParseError(std::string("bad integer for ") + what + ": " + s);
  return x;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

ordered_json header() {
  ordered_json j;
  j["schema_version"] = 1;
  return j;
}

// ---- lemma checks ---------------------------------------------------------

void add_case(LemmaReport& r, LemmaCase c) {
  if (!c.ok && !c.excluded) r.ok = false;
  r.cases.push_back(std::move(c));
}

template <class F>
void for_cuspidal(int max_a, const std::vector<Family>& fams, F f) {
  for (Family fam : fams)
    for (int a = 1; a <= max_a; ++a)
      if (auto n = rank_for_parameter(fam, a)) f(GroupType{fam, *n}, a);
}

std::string describe(const std::vector<ChainStep>& steps) {
  std::vector<std::string> hops;
  for (const auto& s : steps) {
    if (const auto* b = std::get_if<BrauerCertificate>(&s.certificate))
      hops.push_back("d=" + std::to_string(b->d));
    else
      hops.push_back("psi=" + std::get<InductionCertificate>(s.certificate).psi.to_string());
  }
  return std::to_string(steps.size()) + " step(s)" + (hops.empty() ? "" : ": " + join(hops, ", "));
}

std::string failures(const ChainReport& rep) {
  std::vector<std::string> why = rep.chain_reasons;
  for (size_t i = 0; i < rep.edges.size(); ++i)
    for (const auto& r : rep.edges[i].reasons) why.push_back("edge " + std::to_string(i + 1) + ": " + r);
  return join(why, "; ");
}

void lemma_def0(LemmaReport& rep, int max_a) {
  for_cuspidal(max_a, kFamilies, [&](const GroupType& t, int a) {
    LemmaCase c{to_string(t), t.rank, a, true, false, ""};
    const Label cusp = *cuspidal_label(t);
    const auto dg = d_G(t);
    int checked = 0;
    std::vector<std::string> bad;
    for (int d = 3; d <= 2 * t.rank; ++d) {
      if (d % 2 == 0 && !(dg && d > *dg)) continue;
      ++checked;
      if (int w = block_weight(cusp, t, d); w != 0) bad.push_back("weight " + std::to_string(w) + " at d=" + std::to_string(d));
    }
    c.ok = bad.empty();
    c.detail = c.ok ? std::to_string(checked) + " degree(s) of defect zero" : join(bad, "; ");
    add_case(rep, std::move(c));
  });
}

void lemma_chain(LemmaReport& rep, int max_a, const std::optional<mpz_class>& q) {
  for_cuspidal(max_a, kFamilies, [&](const GroupType& t, int a) {
    LemmaCase c{to_string(t), t.rank, a, true, false, ""};
    try {
      auto steps = brauer_chain(t, q);
      auto vr = verify_chain(steps);
      c.ok = vr.ok;
      c.detail = vr.ok ? describe(steps) : failures(vr);
    } catch (const DomainError& e) {
      c.ok = false;
      c.excluded = q && zsigmondy_exception(t, *q);
      c.detail = std::string(e.what()) + (c.excluded ? " (known exception)" : "");
    }
    add_case(rep, std::move(c));
  });
}

void lemma_mult1(LemmaReport& rep, int max_a) {
  for_cuspidal(max_a, {Family::B, Family::C, Family::D, Family::TwoD}, [&](const GroupType& t, int a) {
    LemmaCase c{to_string(t), t.rank, a, true, false, ""};
    try {
      auto steps = lusztig_chain(t);
      auto vr = verify_chain(steps);
      c.ok = vr.ok;
      c.detail = vr.ok ? describe(steps) : failures(vr);
    } catch (const DomainError& e) {
      c.ok = false;
      c.detail = e.what();
    }
    add_case(rep, std::move(c));
  });
}

std::optional<int> d_G_closed_form(Family f, int a) {
  switch (f) {
    case Family::A: return std::nullopt;
    case Family::B:
    case Family::C: return 4 * a;
    default: return 2 * (2 * a - 1);
  }
}

void lemma_census(LemmaReport& rep, int max_a) {
  constexpr int kMaxN = 100;
  for (Family fam : kFamilies) {
    std::vector<bool> closed(kMaxN + 1, false);
    for (int a = 1;; ++a) {
      auto n = rank_for_parameter(fam, a);
      if (fam == Family::A && a > 1) break;
      if (n && *n > kMaxN) break;
      if (n) closed[static_cast<size_t>(*n)] = true;
    }
    LemmaCase c{to_string(fam), kMaxN, 0, true, false, ""};
    std::vector<std::string> bad;
    int count = 0;
    for (int n = 1; n <= kMaxN; ++n) {
      const bool has = cuspidal_exists(GroupType{fam, n}).has_value();
      count += has;
      if (has != closed[static_cast<size_t>(n)]) bad.push_back("n=" + std::to_string(n));
    }
    c.ok = bad.empty();
    c.detail = c.ok ? std::to_string(count) + " rank(s) up to " + std::to_string(kMaxN) : "mismatch at " + join(bad, ",");
    add_case(rep, std::move(c));
  }
  for_cuspidal(std::max(6, max_a), kFamilies, [&](const GroupType& t, int a) {
    LemmaCase c{to_string(t), t.rank, a, true, false, ""};
    const auto got = d_G(t);
    const auto want = d_G_closed_form(t.family, a);
    c.ok = got == want;
    c.detail = "d_G " + (got ? std::to_string(*got) : std::string("none"));
    add_case(rep, std::move(c));
  });
  constexpr int kCentraliserN = 40;
  for (auto row : centraliser_rows()) {
    LemmaCase c{"centraliser:" + to_string(row), kCentraliserN, 0, true, false, ""};
    auto cases = centraliser_cases(row, kCentraliserN);
    std::vector<std::string> bad;
    for (const auto& tc : cases)
      if (!centraliser_agrees(row, tc))
        bad.push_back("n=" + std::to_string(tc.n) + ",d=" + std::to_string(tc.d) + (tc.sign > 0 ? ",+" : ",-"));
    c.ok = bad.empty();
    c.detail = c.ok ? std::to_string(cases.size()) + " parameter(s) agree" : "disagree at " + join(bad, " ");
    add_case(rep, std::move(c));
  }
}

// ---- subcommands ----------------------------------------------------------

struct Opts {
  std::string family;
  std::optional<int> n;
  std::optional<int> a;
  std::optional<int> d;
  std::optional<std::string> q;
  std::string format = "text";
};

GroupType resolve_type(const Opts& o) {
  if (o.family.empty()) throw ParseError("--type is required");
  const Family f = parse_family(o.family);
  if (!o.n && !o.a) throw ParseError("one of --n or --a is required");
  if (o.a) {
    auto n = rank_for_parameter(f, *o.a);
    if (!n) throw DomainError("no cuspidal unipotent character of type " + o.family + " with a=" + std::to_string(*o.a));
    if (o.n && *o.n != *n)
      throw DomainError("--n " + std::to_string(*o.n) + " does not match a=" + std::to_string(*o.a));
    return {f, *n};
  }
  if (*o.n < 1) throw DomainError("rank must be positive");
  return {f, *o.n};
}

std::optional<mpz_class> resolve_q(const Opts& o) {
  if (!o.q) return std::nullopt;
  auto q = parse_big(*o.q, "--q");
  if (q < 2) throw DomainError("invalid q: must be at least 2");
  return q;
}

int require_d(const Opts& o) {
  if (!o.d) throw ParseError("--d is required");
  if (*o.d < 1) throw DomainError("d must be positive");
  return *o.d;
}

class Runner {
 public:
  Runner(std::ostream& out, const Opts& o) : out_(out), o_(o), json_(o.format == "json") {}

  void info() {
    const GroupType t = resolve_type(o_);
    const auto labels = unipotent_labels(t);
    const auto cusp = cuspidal_label(t);
    const auto a = cuspidal_parameter(t);
    const auto dg = d_G(t);
    if (json_) {
      auto j = header();
      j["type"] = to_string(t.family);
      j["n"] = t.rank;
      j["order"] = order_poly(t).to_string();
      j["unipotent_labels"] = labels.size();
      j["cuspidal"] = cusp ? ordered_json(to_grammar(*cusp)) : ordered_json(nullptr);
      j["a"] = a ? ordered_json(*a) : ordered_json(nullptr);
      j["d_G"] = dg ? ordered_json(*dg) : ordered_json(nullptr);
      emit(j);
      return;
    }
    out_ << "type      " << to_string(t) << " (n=" << t.rank << ")\n"
         << "order     " << order_poly(t).to_string() << "\n"
         << "labels    " << labels.size() << "\n"
         << "cuspidal  " << (cusp ? to_string(*cusp) + " (a=" + std::to_string(*a) + ")" : "none") << "\n"
         << "d_G       " << (dg ? std::to_string(*dg) : "none") << "\n";
  }

  void degree(const std::string& kind, const std::string& text) {
    if (o_.family.empty()) throw ParseError("--family is required");
    const Family f = parse_family(o_.family);
    if ((kind == "partition") != uses_partitions(f))
      throw DomainError("family " + o_.family + " is not labelled by " + kind + "s");
    const Label l = parse_label(text, f);
    const GroupType t{f, label_rank(l)};
    check_label(l, t);
    const CycFactored deg = generic_degree(l, t);
    const auto q = resolve_q(o_);
    if (json_) {
      auto j = header();
      j["label"] = to_grammar(l);
      j["type"] = to_string(f);
      j["n"] = t.rank;
      j["degree"] = deg.to_string();
      if (q) {
        j["q"] = big(*q);
        j["value"] = rational(deg.evaluate(*q));
      }
      emit(j);
      return;
    }
    out_ << to_string(l) << "  " << deg.to_string() << "\n";
    if (q) out_ << "at q=" << q->get_str() << ": " << deg.evaluate(*q).get_str() << "\n";
  }

  void cuspidal() {
    const Family f = parse_family(o_.family.empty() ? throw ParseError("--type is required") : o_.family);
    std::optional<GroupType> t;
    if (o_.a && !rank_for_parameter(f, *o_.a)) {
      // no rank carries this parameter
    } else {
      t = resolve_type(o_);
    }
    const auto cusp = t ? cuspidal_label(*t) : std::nullopt;
    const auto a = t ? cuspidal_parameter(*t) : std::nullopt;
    if (json_) {
      auto j = header();
      j["type"] = to_string(f);
      j["n"] = t ? ordered_json(t->rank) : ordered_json(nullptr);
      j["exists"] = cusp.has_value();
      j["a"] = a ? ordered_json(*a) : ordered_json(nullptr);
      j["label"] = cusp ? ordered_json(to_grammar(*cusp)) : ordered_json(nullptr);
      emit(j);
      return;
    }
    out_ << (cusp ? to_string(*cusp) + " (a=" + std::to_string(*a) + ")" : "none") << "\n";
  }

  // Without --type every family is listed.
  void census(int max_n) {
    std::vector<Family> fams;
    if (o_.family.empty())
      fams = {Family::A, Family::TwoA, Family::B, Family::C, Family::D, Family::TwoD};
    else
      fams = {parse_family(o_.family)};
    ordered_json families = ordered_json::array();
    std::vector<std::string> lines;
    for (Family f : fams) {
      ordered_json ranks = ordered_json::array();
      for (int n = 1; n <= max_n; ++n)
        if (auto a = cuspidal_exists({f, n})) {
          ranks.push_back({{"n", n}, {"a", *a}});
          lines.push_back(to_string(f) + " n=" + std::to_string(n) + " a=" + std::to_string(*a));
        }
      families.push_back({{"type", to_string(f)}, {"ranks", std::move(ranks)}});
    }
    if (json_) {
      auto j = header();
      j["max_n"] = max_n;
      j["families"] = std::move(families);
      emit(j);
      return;
    }
    for (const auto& l : lines) out_ << l << "\n";
  }

  void blocks() {
    const GroupType t = resolve_type(o_);
    const int d = require_d(o_);
    const auto p = e_of_d(t.family, d);
    const auto bs = block_partition(t, d);
    if (json_) {
      auto j = header();
      j["type"] = to_string(t.family);
      j["n"] = t.rank;
      j["d"] = d;
      j["e"] = p.e;
      j["mode"] = to_string(p.mode);
      ordered_json arr = ordered_json::array();
      for (const auto& b : bs) {
        ordered_json labels = ordered_json::array();
        for (const auto& l : b.labels) labels.push_back(to_grammar(l));
        arr.push_back({{"core", to_grammar(b.id.core)},
                       {"weight", b.weight},
                       {"cyclic", b.weight <= 1},
                       {"labels", std::move(labels)}});
      }
      j["blocks"] = std::move(arr);
      emit(j);
      return;
    }
    out_ << to_string(t) << " d=" << d << " e=" << p.e << " " << to_string(p.mode) << "s, " << bs.size()
         << " block(s)\n";
    for (const auto& b : bs) {
      std::vector<std::string> ls;
      for (const auto& l : b.labels) ls.push_back(to_string(l));
      out_ << "core " << to_string(b.id.core) << " weight " << b.weight << (b.weight <= 1 ? " cyclic" : "") << ": "
           << join(ls, "  ") << "\n";
    }
  }

  void chain(const std::string& kind) {
    const GroupType t = resolve_type(o_);
    const auto q = resolve_q(o_);
    std::vector<ChainStep> steps;
    if (kind == "brauer") {
      steps = brauer_chain(t, q);
    } else {
      if (q) throw ParseError("--q applies to brauer chains only");
      steps = lusztig_chain(t);
    }
    if (json_) {
      auto j = header();
      j["kind"] = kind;
      j["type"] = to_string(t.family);
      j["n"] = t.rank;
      if (q) j["q"] = big(*q);
      j["steps"] = chain_to_json(steps);
      emit(j);
      return;
    }
    out_ << to_string(t) << " " << kind << " chain, " << steps.size() << " step(s)\n";
    for (const auto& s : steps) {
      out_ << "  " << to_string(s.from) << " -> " << to_string(s.to);
      if (const auto* b = std::get_if<BrauerCertificate>(&s.certificate)) {
        out_ << "  d=" << b->d << " e=" << b->e << " " << to_string(b->mode) << " core " << to_string(b->core);
        if (b->prime) out_ << " l=" << b->prime->get_str();
      } else {
        out_ << "  psi=" << std::get<InductionCertificate>(s.certificate).psi.to_string();
      }
      out_ << "\n";
    }
  }

  void induce(const std::string& kind, const std::string& text) {
    const Partition psi = Partition::parse(text);
    if (kind == "step") {
      auto ps = ind_sym_step(psi);
      if (json_) {
        auto j = header();
        j["kind"] = kind;
        j["psi"] = psi.to_string();
        ordered_json arr = ordered_json::array();
        for (const auto& p : ps) arr.push_back({{"label", p.to_string()}, {"mult", 1}});
        j["constituents"] = std::move(arr);
        emit(j);
        return;
      }
      for (const auto& p : ps) out_ << p.to_string() << "  1\n";
      return;
    }
    InductionResult r;
    if (kind == "B")
      r = ind_sym_to_B(psi);
    else if (kind == "D")
      r = ind_sym_to_D(psi);
    else if (kind == "D-step")
      r = ind_sym_step_to_D(psi);
    else
      throw ParseError("unknown induction: " + kind);
    if (json_) {
      auto j = header();
      j["kind"] = kind;
      j["psi"] = psi.to_string();
      ordered_json arr = ordered_json::array();
      for (auto it = r.entries.rbegin(); it != r.entries.rend(); ++it)
        arr.push_back({{"label", it->first.bp().to_string()},
                       {"mult", it->second},
                       {"degenerate", it->first.degenerate()}});
      j["constituents"] = std::move(arr);
      emit(j);
      return;
    }
    for (auto it = r.entries.rbegin(); it != r.entries.rend(); ++it)
      out_ << it->first.to_string() << "  " << it->second << (it->first.degenerate() ? "  (both characters)" : "")
           << "\n";
  }

  void lr(const std::string& l, const std::string& m, const std::string& n) {
    const Partition lambda = Partition::parse(l), mu = Partition::parse(m), nu = Partition::parse(n);
    const auto c = lr_coeff(lambda, mu, nu);
    if (json_) {
      auto j = header();
      j["lambda"] = lambda.to_string();
      j["mu"] = mu.to_string();
      j["nu"] = nu.to_string();
      j["coefficient"] = c;
      emit(j);
      return;
    }
    out_ << c << "\n";
  }

  void zsig() {
    if (!o_.q) throw ParseError("--q is required");
    const auto q = parse_big(*o_.q, "--q");
    const int d = o_.d ? *o_.d : throw ParseError("--d is required");
    const auto ps = zsigmondy(q, d);
    if (json_) {
      auto j = header();
      j["q"] = big(q);
      j["d"] = d;
      ordered_json arr = ordered_json::array();
      for (const auto& p : ps) arr.push_back(big(p));
      j["primes"] = std::move(arr);
      emit(j);
      return;
    }
    std::vector<std::string> xs;
    for (const auto& p : ps) xs.push_back(p.get_str());
    out_ << "[" << join(xs, ",") << "]\n";
  }

  bool verify(const std::string& lemma, int max_a, const std::string& chain_file) {
    if (!chain_file.empty()) return verify_file(chain_file);
    if (lemma.empty()) throw ParseError("--lemma or --chain is required");
    const auto q = resolve_q(o_);
    const auto rep = verify_lemma(lemma, max_a, q);
    int passed = 0, failed = 0, excluded = 0;
    for (const auto& c : rep.cases) (c.ok ? passed : c.excluded ? excluded : failed)++;
    if (json_) {
      auto j = header();
      j["lemma"] = lemma;
      j["max_a"] = max_a;
      if (q) j["q"] = big(*q);
      j["passed"] = rep.ok;
      j["summary"] = {{"cases", rep.cases.size()}, {"ok", passed}, {"failed", failed}, {"excluded", excluded}};
      ordered_json arr = ordered_json::array();
      for (const auto& c : rep.cases)
        arr.push_back({{"type", c.type},
                       {"n", c.n},
                       {"a", c.a},
                       {"status", c.ok ? "ok" : c.excluded ? "excluded" : "fail"},
                       {"detail", c.detail}});
      j["cases"] = std::move(arr);
      emit(j);
    } else {
      for (const auto& c : rep.cases)
        out_ << (c.ok ? "ok   " : c.excluded ? "excl " : "FAIL ") << c.type << (c.a ? " a=" + std::to_string(c.a) : "")
             << "  " << c.detail << "\n";
      out_ << lemma << ": " << (rep.ok ? "PASS" : "FAIL") << " (" << passed << " ok, " << failed << " failed, "
           << excluded << " excluded)\n";
    }
    return rep.ok;
  }

 private:
  bool verify_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    ordered_json doc;
    try {
      doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    if (doc.is_object()) {
      if (!doc.contains("steps")) throw ParseError(path + ": missing \"steps\"");
      doc = doc["steps"];
    }
    const auto steps = chain_from_json(doc);
    const auto rep = verify_chain(steps);
    if (json_) {
      auto j = header();
      j["chain"] = path;
      j["passed"] = rep.ok;
      ordered_json edges = ordered_json::array();
      for (const auto& e : rep.edges) edges.push_back({{"ok", e.ok}, {"reasons", e.reasons}});
      j["edges"] = std::move(edges);
      j["chain_reasons"] = rep.chain_reasons;
      emit(j);
    } else {
      for (size_t i = 0; i < rep.edges.size(); ++i) {
        out_ << "edge " << i + 1 << ": " << (rep.edges[i].ok ? "ok" : "FAIL");
        if (!rep.edges[i].reasons.empty()) out_ << "  " << join(rep.edges[i].reasons, "; ");
        out_ << "\n";
      }
      for (const auto& r : rep.chain_reasons) out_ << "chain: " << r << "\n";
      out_ << (rep.ok ? "PASS" : "FAIL") << "\n";
    }
    return rep.ok;
  }

  void emit(const ordered_json& j) { out_ << j.dump(2) << "\n"; }

  std::ostream& out_;
  const Opts& o_;
  bool json_;
};

}  // namespace

LemmaReport verify_lemma(const std::string& lemma, int max_a, const std::optional<mpz_class>& q) {
  LemmaReport rep{lemma, true, {}};
  if (max_a < 1) throw DomainError("--max-a must be positive");
  if (lemma == "def0")
    lemma_def0(rep, max_a);
  else if (lemma == "chain")
    lemma_chain(rep, max_a, q);
  else if (lemma == "mult1")
    lemma_mult1(rep, max_a);
  else if (lemma == "census")
    lemma_census(rep, max_a);
  else
    throw ParseError("unknown lemma: " + lemma);
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unipotent characters of classical groups: degrees, blocks, chains"};
  app.name("unip");
  app.require_subcommand(1);

  Opts o;
  auto common = [&](CLI::App* s, bool type, bool d, bool q) {
    if (type) {
      s->add_option("--type,--family", o.family, "A, 2A, B, C, D or 2D");
      s->add_option("--n", o.n, "rank");
      s->add_option("--a", o.a, "cuspidal parameter");
    }
    if (d) s->add_option("--d", o.d, "degree");
    if (q) s->add_option("--q", o.q, "prime power");
    s->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  };

  std::string kind, label, extra1, extra2, lemma = "", chain_file;
  int max_n = 100, max_a = 4;

  auto* info = app.add_subcommand("info", "order, label count, cuspidal label");
  common(info, true, false, false);

  auto* degree = app.add_subcommand("degree", "generic degree of a label");
  degree->add_option("kind", kind, "symbol or partition")->required()->check(CLI::IsMember({"symbol", "partition"}));
  degree->add_option("label", label)->required();
  common(degree, true, false, true);

  auto* cusp = app.add_subcommand("cuspidal", "cuspidal unipotent label");
  common(cusp, true, false, false);

  auto* census = app.add_subcommand("census", "ranks with a cuspidal unipotent character");
  common(census, true, false, false);
  census->add_option("--max-n", max_n)->check(CLI::Range(1, 100000));

  auto* blocks = app.add_subcommand("blocks", "unipotent blocks for a degree d");
  common(blocks, true, true, false);

  auto* chain = app.add_subcommand("chain", "certified chain from the cuspidal to the trivial label");
  chain->add_option("kind", kind)->required()->check(CLI::IsMember({"brauer", "lusztig"}));
  common(chain, true, false, true);

  auto* induce = app.add_subcommand("induce", "induction from symmetric groups");
  induce->add_option("kind", kind)->required()->check(CLI::IsMember({"B", "D", "step", "D-step"}));
  induce->add_option("psi", label)->required();
  common(induce, false, false, false);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu nu}");
  lr->add_option("lambda", label)->required();
  lr->add_option("mu", extra1)->required();
  lr->add_option("nu", extra2)->required();
  common(lr, false, false, false);

  auto* zs = app.add_subcommand("zsigmondy", "Zsigmondy primes of degree d for q");
  common(zs, false, true, true);

  auto* verify = app.add_subcommand("verify", "check a lemma over a range, or a chain file");
  verify->add_option("--lemma", lemma)->check(CLI::IsMember({"def0", "chain", "mult1", "census"}));
  verify->add_option("--max-a", max_a)->check(CLI::Range(1, 12));
  verify->add_option("--chain", chain_file, "chain JSON to re-check");
  common(verify, false, false, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "unip: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buf;
  try {
    Runner r(buf, o);
    bool ok = true;
    if (info->parsed())
      r.info();
    else if (degree->parsed())
      r.degree(kind, label);
    else if (cusp->parsed())
      r.cuspidal();
    else if (census->parsed())
      r.census(max_n);
    else if (blocks->parsed())
      r.blocks();
    else if (chain->parsed())
      r.chain(kind);
    else if (induce->parsed())
      r.induce(kind, label);
    else if (lr->parsed())
      r.lr(label, extra1, extra2);
    else if (zs->parsed())
      r.zsig();
    else if (verify->parsed())
      ok = r.verify(lemma, max_a, chain_file);
    out << buf.str();
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    err << "unip: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "unip: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace unip
