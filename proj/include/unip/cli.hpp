#pragma once

// The `unip` command line: subcommands over every module, text or JSON.
// Exit codes: 0 success, 1 domain error or failed verification, 2 bad input.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unip {

struct LemmaCase {
  std::string type;
  int n = 0;
  int a = 0;
  bool ok = true;
  bool excluded = false;  // a documented exception, not counted as failure
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  bool ok = true;
  std::vector<LemmaCase> cases;
};

// lemma in {def0, chain, mult1, census}; q only affects `chain`.
LemmaReport verify_lemma(const std::string& lemma, int max_a, const std::optional<mpz_class>& q = std::nullopt);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unip
