#pragma once

// Existence of cuspidal unipotent characters: the closed forms per family,
// and the "cuspidal series exists" test for centraliser component lists of
// quasi-isolated elements.

#include <optional>
#include <string>
#include <vector>

#include "unip/qfactor.hpp"

namespace unip {

// Witness a of the rank condition, or none.
std::optional<int> cuspidal_exists(const GroupType& t);

// Rank carrying the cuspidal label with parameter a, or none (A: a = 1 only;
// D: a even; 2D: a odd).
std::optional<int> rank_for_parameter(Family f, int a);

bool is_square(long long m);
bool is_triangular(long long m);

// Twisting is carried by the family (2A, 2D). Rank-0 components are trivial.
struct Component {
  Family family = Family::A;
  int rank = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

std::string to_string(const Component& c);

struct ComponentList {
  std::vector<Component> components;
  // Central torus condition, decided by the caller.
  bool torus_rank_ok = true;
};

bool series_has_cuspidal(const ComponentList& c);

// Disconnected centralisers of quasi-isolated elements whose cuspidal
// condition only involves component ranks. `sign` is the row's delta or
// epsilon.
enum class CentraliserRow { B1, C1, C2, C3, C4, C5 };

std::string to_string(CentraliserRow r);
CentraliserRow parse_centraliser_row(const std::string& s);
std::vector<CentraliserRow> centraliser_rows();

struct CentraliserCase {
  int n = 0;
  int d = 0;
  int sign = 1;  // +1 or -1
};

// Parameters for which the row is defined, for ranks up to max_n.
std::vector<CentraliserCase> centraliser_cases(CentraliserRow r, int max_n);

// Centraliser components of the row.
ComponentList centraliser_components(CentraliserRow r, const CentraliserCase& c);

// The known closed-form condition, in squares and triangular numbers.
bool centraliser_condition(CentraliserRow r, const CentraliserCase& c);

// The sign is existential for B1 (the condition does not mention delta);
// elsewhere the sign is part of the condition.
bool centraliser_sign_free(CentraliserRow r);

// Does series_has_cuspidal reproduce the closed-form condition at c?
bool centraliser_agrees(CentraliserRow r, const CentraliserCase& c);

}  // namespace unip
