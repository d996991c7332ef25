#include "stargray/matching.hpp"

#include <algorithm>
#include <numeric>

namespace stargray {

std::pair<int, int> pq(int ell, int s, int t) {
  if ((ell != 3 && ell != 4) || (s != 1 && s != 2) || (t != 1 && t != 2 && t != ell))
    throw error("pq: arguments outside the table domain");
  int p = (t == s || t == ell) ? ell : t;
  return {p, s};
}

std::string matching_case_name(matching_case c) {
  switch (c) {
    case matching_case::oa: return "oa";
    case matching_case::ob1: return "ob1";
    case matching_case::ob2: return "ob2";
    case matching_case::ea: return "ea";
    case matching_case::eb1: return "eb1";
    case matching_case::eb2: return "eb2";
  }
  return "?";
}

perm_constraints matching_constraints(int k, matching_case c, int a, int b, int cc) {
  perm_constraints cons;
  cons.k = k;
  bool odd = (c == matching_case::oa || c == matching_case::ob1 || c == matching_case::ob2);
  if (odd && (k < 3 || k % 2 == 0)) throw error("o-case needs odd k >= 3");
  if (!odd && (k < 4 || k % 2 == 1)) throw error("e-case needs even k >= 4");
  int ell = odd ? (k - 1) / 2 : k / 2;
  auto uneq = [&](int i, int j) { cons.unequal.emplace_back(i, j); };
  switch (c) {
    case matching_case::oa:
      if (a == b) throw error("case oa needs a != b");
      cons.pi_fixed = {{1, 1}};
      cons.rho_fixed = {{1, a}, {k, b}};
      for (int j = 1; j <= ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      break;
    case matching_case::ob1:
      if (cc == 1) throw error("case ob1 needs c != 1");
      cons.pi_fixed = {{1, 1}, {k, cc}};
      cons.rho_fixed = {{1, 1}};
      for (int j = 1; j < ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      uneq(k - 1, k);
      break;
    case matching_case::ob2:
      if (cc == 1) throw error("case ob2 needs c != 1");
      cons.pi_fixed = {{1, 1}, {2, cc}};
      cons.rho_fixed = {{1, 1}};
      cons.equal.emplace_back(3, k);
      for (int j = 1; j <= ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      break;
    case matching_case::ea:
      if (a == b) throw error("case ea needs a != b");
      cons.pi_fixed = {{1, 1}};
      cons.rho_fixed = {{1, a}, {k, b}};
      cons.equal.emplace_back(3, k - 1);
      for (int j = 1; j < ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      uneq(k, k);
      break;
    case matching_case::eb1:
      if (cc == 1) throw error("case eb1 needs c != 1");
      cons.pi_fixed = {{1, 1}, {k, cc}};
      cons.rho_fixed = {{1, 1}};
      cons.equal.emplace_back(3, k);
      for (int j = 1; j < ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      break;
    case matching_case::eb2:
      if (cc == 1) throw error("case eb2 needs c != 1");
      cons.pi_fixed = {{1, 1}, {k, cc}};
      cons.rho_fixed = {{1, 1}};
      for (int j = 1; j < ell; ++j) {
        uneq(2 * j, j);
        uneq(2 * j + 1, j + 1);
      }
      uneq(k, k);
      break;
  }
  return cons;
}

bool satisfies(const perm_constraints& cons, const std::vector<int>& pi,
               const std::vector<int>& rho) {
  auto at = [](const std::vector<int>& v, int i) { return v[static_cast<size_t>(i) - 1]; };
  for (auto [i, v] : cons.pi_fixed)
    if (at(pi, i) != v) return false;
  for (auto [j, v] : cons.rho_fixed)
    if (at(rho, j) != v) return false;
  for (auto [i, j] : cons.equal)
    if (at(pi, i) != at(rho, j)) return false;
  for (auto [i, j] : cons.unequal)
    if (at(pi, i) == at(rho, j)) return false;
  return true;
}

namespace {

bool next_perm_with_fixed(std::vector<int>& p, const std::vector<int>& fixed_val) {
  // iterate permutations whose fixed positions hold fixed values; p holds a
  // full permutation; fixed_val[i] == 0 means free
  do {
    if (!std::next_permutation(p.begin(), p.end())) return false;
    bool ok = true;
    for (size_t i = 0; i < p.size(); ++i)
      if (fixed_val[i] != 0 && p[i] != fixed_val[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (true);
}

std::vector<int> first_perm_with_fixed(int k, const std::vector<int>& fixed_val, bool& ok) {
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  ok = true;
  auto matches = [&]() {
    for (size_t i = 0; i < p.size(); ++i)
      if (fixed_val[i] != 0 && p[i] != fixed_val[i]) return false;
    return true;
  };
  if (matches()) return p;
  ok = next_perm_with_fixed(p, fixed_val);
  return p;
}

// Perfect matching by augmenting paths on a k x k bipartite adjacency.
bool perfect_matching(const std::vector<std::vector<char>>& adj, std::vector<int>& match_lr) {
  int k = static_cast<int>(adj.size());
  std::vector<int> match_rl(static_cast<size_t>(k), -1);
  match_lr.assign(static_cast<size_t>(k), -1);
  std::vector<char> used;
  std::function<bool(int)> try_kuhn = [&](int l) -> bool {
    for (int r = 0; r < k; ++r) {
      if (!adj[static_cast<size_t>(l)][static_cast<size_t>(r)] || used[static_cast<size_t>(r)])
        continue;
      used[static_cast<size_t>(r)] = 1;
      if (match_rl[static_cast<size_t>(r)] < 0 || try_kuhn(match_rl[static_cast<size_t>(r)])) {
        match_lr[static_cast<size_t>(l)] = r;
        match_rl[static_cast<size_t>(r)] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < k; ++l) {
    if (match_lr[static_cast<size_t>(l)] >= 0) continue;
    used.assign(static_cast<size_t>(k), 0);
    if (!try_kuhn(l)) return false;
  }
  return true;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> solve_constraints(const perm_constraints& cons) {
  const int k = cons.k;
  if (k <= 5) {
    // exhaustive lexicographically-smallest search
    std::vector<int> pf(static_cast<size_t>(k), 0), rf(static_cast<size_t>(k), 0);
    for (auto [i, v] : cons.pi_fixed) pf[static_cast<size_t>(i) - 1] = v;
    for (auto [j, v] : cons.rho_fixed) rf[static_cast<size_t>(j) - 1] = v;
    bool okp = false;
    std::vector<int> pi = first_perm_with_fixed(k, pf, okp);
    while (okp) {
      bool okr = false;
      std::vector<int> rho = first_perm_with_fixed(k, rf, okr);
      while (okr) {
        if (satisfies(cons, pi, rho)) return {pi, rho};
        okr = next_perm_with_fixed(rho, rf);
      }
      okp = next_perm_with_fixed(pi, pf);
    }
    throw error("no permutation pair satisfies the constraints (k <= 5)");
  }

  // Constraint graph: position i of pi against position j of rho. Matched
  // positions share a value. Equality constraints and equal fixed values force
  // a pair; inequality constraints and conflicting fixed values drop the edge.
  std::vector<int> pi_val(static_cast<size_t>(k) + 1, 0), rho_val(static_cast<size_t>(k) + 1, 0);
  for (auto [i, v] : cons.pi_fixed) pi_val[static_cast<size_t>(i)] = v;
  for (auto [j, v] : cons.rho_fixed) rho_val[static_cast<size_t>(j)] = v;
  std::vector<int> forced_pi(static_cast<size_t>(k) + 1, 0);  // pi position -> rho position
  for (auto [i, j] : cons.equal) {
    if (forced_pi[static_cast<size_t>(i)]) throw error("conflicting equality constraints");
    forced_pi[static_cast<size_t>(i)] = j;
  }
  // equal fixed values pair up positions as well
  for (auto [i, v] : cons.pi_fixed)
    for (auto [j, w] : cons.rho_fixed)
      if (v == w) forced_pi[static_cast<size_t>(i)] = j;

  std::vector<int> left, right;  // unforced positions, 1-based
  std::vector<char> rho_taken(static_cast<size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i)
    if (forced_pi[static_cast<size_t>(i)]) rho_taken[static_cast<size_t>(forced_pi[static_cast<size_t>(i)])] = 1;
  for (int i = 1; i <= k; ++i)
    if (!forced_pi[static_cast<size_t>(i)]) left.push_back(i);
  for (int j = 1; j <= k; ++j)
    if (!rho_taken[static_cast<size_t>(j)]) right.push_back(j);
  if (left.size() != right.size()) throw error("unbalanced constraint graph");

  std::vector<std::vector<char>> adj(left.size(), std::vector<char>(right.size(), 1));
  auto drop = [&](int i, int j) {
    auto li = std::find(left.begin(), left.end(), i);
    auto rj = std::find(right.begin(), right.end(), j);
    if (li != left.end() && rj != right.end())
      adj[static_cast<size_t>(li - left.begin())][static_cast<size_t>(rj - right.begin())] = 0;
  };
  for (auto [i, j] : cons.unequal) drop(i, j);
  for (size_t li = 0; li < left.size(); ++li)
    for (size_t rj = 0; rj < right.size(); ++rj) {
      int pv = pi_val[static_cast<size_t>(left[li])], rv = rho_val[static_cast<size_t>(right[rj])];
      if (pv != 0 && rv != 0 && pv != rv) adj[li][rj] = 0;
    }

  std::vector<int> match;
  if (!perfect_matching(adj, match))
    throw error("constraint graph has no perfect matching (Hall violation: implementation bug)");

  // assign values: forced pairs first, then matched pairs in pi-position order
  std::vector<int> pi(static_cast<size_t>(k), 0), rho(static_cast<size_t>(k), 0);
  std::vector<char> used_val(static_cast<size_t>(k) + 1, 0);
  auto assign_pair = [&](int i, int j) {
    int v = pi_val[static_cast<size_t>(i)] ? pi_val[static_cast<size_t>(i)]
                                           : rho_val[static_cast<size_t>(j)];
    if (v == 0) return;  // deferred
    if (pi_val[static_cast<size_t>(i)] && rho_val[static_cast<size_t>(j)] &&
        pi_val[static_cast<size_t>(i)] != rho_val[static_cast<size_t>(j)])
      throw error("inconsistent forced pair");
    pi[static_cast<size_t>(i) - 1] = v;
    rho[static_cast<size_t>(j) - 1] = v;
    used_val[static_cast<size_t>(v)] = 1;
  };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    if (forced_pi[static_cast<size_t>(i)]) pairs.emplace_back(i, forced_pi[static_cast<size_t>(i)]);
  for (size_t li = 0; li < left.size(); ++li)
    pairs.emplace_back(left[li], right[static_cast<size_t>(match[li])]);
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) assign_pair(i, j);
  int next_val = 1;
  for (auto [i, j] : pairs) {
    if (pi[static_cast<size_t>(i) - 1] != 0) continue;
    while (used_val[static_cast<size_t>(next_val)]) ++next_val;
    pi[static_cast<size_t>(i) - 1] = next_val;
    rho[static_cast<size_t>(j) - 1] = next_val;
    used_val[static_cast<size_t>(next_val)] = 1;
  }
  if (!satisfies(cons, pi, rho))
    throw error("matching construction violated the constraint set (bug)");
  return {pi, rho};
}

std::pair<std::vector<int>, std::vector<int>> matching_perms(int k, matching_case c, int a, int b,
                                                             int cc) {
  perm_constraints cons = matching_constraints(k, c, a, b, cc);
  auto out = solve_constraints(cons);
  if (!satisfies(cons, out.first, out.second))
    throw error("matching_perms produced an invalid pair (bug)");
  return out;
}

}  // namespace stargray
