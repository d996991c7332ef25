#pragma once

#include <string>
#include <vector>

#include "stargray/partition.hpp"

namespace stargray {

/// p_l(s,t), q_l(s,t) for l in {3,4}, s in {1,2}, t in {1,2,l}.
std::pair<int, int> pq(int ell, int s, int t);

enum class matching_case { oa, ob1, ob2, ea, eb1, eb2 };
std::string matching_case_name(matching_case c);

/// The condition set on a pair of permutations (pi, rho) of [k].
struct perm_constraints {
  int k = 0;
  std::vector<std::pair<int, int>> pi_fixed;   // (index, value), 1-based
  std::vector<std::pair<int, int>> rho_fixed;  // (index, value)
  std::vector<std::pair<int, int>> equal;      // pi_i == rho_j
  std::vector<std::pair<int, int>> unequal;    // pi_i != rho_j
};

/// The exact condition set of the matching lemma for a case tag.
/// o-cases need odd k >= 3, e-cases even k >= 4; a != b, c != 1.
perm_constraints matching_constraints(int k, matching_case c, int a, int b, int cc);

/// Independent checker: does (pi, rho) satisfy the constraints verbatim?
bool satisfies(const perm_constraints& cons, const std::vector<int>& pi,
               const std::vector<int>& rho);

/// Constructs (pi, rho) satisfying the constraints. Exhaustive lex-smallest
/// search for k <= 5; constraint-graph perfect matching (Hall) for k >= 6.
/// Failure raises an error (the lemma proves existence; failure is a bug).
std::pair<std::vector<int>, std::vector<int>> matching_perms(int k, matching_case c, int a, int b,
                                                             int cc);

/// Solve an arbitrary constraint set (used by matching_perms internally and by
/// tests that cross-validate against brute force).
std::pair<std::vector<int>, std::vector<int>> solve_constraints(const perm_constraints& cons);

}  // namespace stargray
