#include "stargray/composer.hpp"

#include <algorithm>
#include <set>

#include "stargray/middle.hpp"

namespace stargray {

namespace {

// --- small vertex helpers ---------------------------------------------------

vertex sw1(const vertex& v, int pos) {
  vertex out = v;
  std::swap(out[0], out[static_cast<size_t>(pos) - 1]);
  return out;
}

using pin_list = std::vector<std::pair<int, int>>;  // (position, symbol), 1-based

/// Lexicographically smallest completion of the pinned positions to a member
/// of Pi(a), differing from every vertex in `avoid`.
vertex complete_vertex(const frequency_vector& a, const pin_list& pins,
                       const std::vector<vertex>& avoid = {}) {
  int n = a.n();
  vertex out(static_cast<size_t>(n), 0);
  std::vector<int> cnt(static_cast<size_t>(a.k()) + 1, 0);
  for (int s = 1; s <= a.k(); ++s) cnt[static_cast<size_t>(s)] = a.part(s);
  for (auto [pos, sym] : pins) {
    if (pos < 1 || pos > n) throw error("completion pin out of range");
    if (out[static_cast<size_t>(pos) - 1] != 0) {
      if (out[static_cast<size_t>(pos) - 1] != sym) throw error("conflicting completion pins");
      continue;
    }
    if (cnt[static_cast<size_t>(sym)] == 0) throw error("completion infeasible: symbol exhausted");
    cnt[static_cast<size_t>(sym)]--;
    out[static_cast<size_t>(pos) - 1] = static_cast<uint8_t>(sym);
  }
  std::vector<uint8_t> fill;
  for (int s = 1; s <= a.k(); ++s)
    for (int c = 0; c < cnt[static_cast<size_t>(s)]; ++c) fill.push_back(static_cast<uint8_t>(s));
  std::vector<size_t> free_pos;
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] == 0) free_pos.push_back(i);
  auto place = [&](const std::vector<uint8_t>& f) {
    vertex v = out;
    for (size_t i = 0; i < free_pos.size(); ++i) v[free_pos[i]] = f[i];
    return v;
  };
  auto clashes = [&](const vertex& v) {
    for (const vertex& w : avoid)
      if (v == w) return true;
    return false;
  };
  std::sort(fill.begin(), fill.end());
  do {
    vertex v = place(fill);
    if (!clashes(v)) return v;
  } while (std::next_permutation(fill.begin(), fill.end()));
  throw error("no completion avoids the excluded vertices");
}

/// Smallest position > 1 outside `excl` where x and y differ.
int first_diff_pos(const vertex& x, const vertex& y, const std::vector<int>& excl = {}) {
  for (size_t i = 1; i < x.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (std::find(excl.begin(), excl.end(), pos) != excl.end()) continue;
    if (x[i] != y[i]) return pos;
  }
  throw error("vertices equal outside the excluded positions");
}

/// Smallest position outside `excl` holding `sym`; > 1 by default.
int find_sym_pos(const vertex& x, int sym, const std::vector<int>& excl, bool allow_first = false) {
  for (size_t i = allow_first ? 0 : 1; i < x.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (std::find(excl.begin(), excl.end(), pos) != excl.end()) continue;
    if (x[i] == sym) return pos;
  }
  throw error("no position holds the requested symbol");
}

/// Lexicographically smallest pair (i1 < i2) of positions outside excl (and
/// > 1) with x_{i1} != x_{i2}.
std::pair<int, int> diff_pair(const vertex& x, const std::vector<int>& excl) {
  std::vector<int> ps;
  for (size_t i = 1; i < x.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (std::find(excl.begin(), excl.end(), pos) == excl.end()) ps.push_back(pos);
  }
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (x[static_cast<size_t>(ps[i]) - 1] != x[static_cast<size_t>(ps[j]) - 1])
        return {ps[i], ps[j]};
  throw error("no differing pair of positions exists");
}

/// Concatenate block paths; consecutive blocks must be joined by one star
/// transposition, i.e. the endpoints differ exactly in positions {1, p}.
ham_path join_blocks(const frequency_vector& a, const std::vector<ham_path>& blocks) {
  ham_path out;
  out.a = a;
  out.start = blocks.front().start;
  vertex cur_end = blocks.front().end();
  out.flips = blocks.front().flips;
  for (size_t b = 1; b < blocks.size(); ++b) {
    const vertex& nxt = blocks[b].start;
    std::vector<int> diffs;
    for (size_t i = 0; i < nxt.size(); ++i)
      if (cur_end[i] != nxt[i]) diffs.push_back(static_cast<int>(i) + 1);
    if (diffs.size() != 2 || diffs[0] != 1)
      throw error("block joint is not a star transposition");
    if (cur_end[0] != nxt[static_cast<size_t>(diffs[1]) - 1] ||
        nxt[0] != cur_end[static_cast<size_t>(diffs[1]) - 1])
      throw error("block joint does not transpose the two positions");
    out.flips.push_back(diffs[1]);
    out.flips.insert(out.flips.end(), blocks[b].flips.begin(), blocks[b].flips.end());
    cur_end = blocks[b].end();
  }
  return out;
}

// relabeling automorphisms (permuting equal-frequency symbols)

vertex relabel_vertex(const vertex& v, const std::vector<int>& old2new) {
  vertex out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<uint8_t>(old2new[v[i]]);
  return out;
}

ham_path relabel_cert(const ham_path& c, const std::vector<int>& old2new) {
  ham_path out = c;
  out.start = relabel_vertex(c.start, old2new);
  return out;
}

std::vector<int> swap_symbols_map(int k, int s1, int s2) {
  std::vector<int> m(static_cast<size_t>(k) + 1);
  for (int s = 0; s <= k; ++s) m[static_cast<size_t>(s)] = s;
  std::swap(m[static_cast<size_t>(s1)], m[static_cast<size_t>(s2)]);
  return m;
}

// shape predicates

bool is_all_ones(const frequency_vector& a) {
  for (int i = 1; i <= a.k(); ++i)
    if (a.part(i) != 1) return false;
  return true;
}
bool is_two_ones(const frequency_vector& a) {
  if (a.part(1) != 2) return false;
  for (int i = 2; i <= a.k(); ++i)
    if (a.part(i) != 1) return false;
  return true;
}
bool is_aa1(const frequency_vector& a) {
  return a.k() == 3 && a.part(1) >= 3 && a.part(1) == a.part(2) && a.part(3) == 1;
}
bool is_aam12(const frequency_vector& a) {
  return a.k() == 3 && a.part(1) >= 3 && a.part(2) == a.part(1) - 1 && a.part(3) == 2;
}
bool is_aam111(const frequency_vector& a) {
  return a.k() == 4 && a.part(1) >= 3 && a.part(2) == a.part(1) - 1 && a.part(3) == 1 &&
         a.part(4) == 1;
}
bool is_aa2(const frequency_vector& a) {
  return a.k() == 3 && a.part(1) >= 3 && a.part(1) == a.part(2) && a.part(3) == 2;
}
bool is_aa11(const frequency_vector& a) {
  return a.k() == 4 && a.part(1) >= 3 && a.part(1) == a.part(2) && a.part(3) == 1 &&
         a.part(4) == 1;
}
bool is_table_h_base(const frequency_vector& a) {
  static const std::vector<std::vector<int>> bases = {
      {2, 2, 1}, {2, 1, 1, 1}, {3, 1, 1, 1, 1}};
  return std::find(bases.begin(), bases.end(), a.parts()) != bases.end();
}
bool is_verified_delta0(const frequency_vector& a) { return a.part(1) <= 4; }

/// Qualifying L12 data on an (alpha,alpha,1)-shaped instance.
struct l12_qual {
  bool ok = false;
  bool swapped = false;  // endpoints reversed
  int s = 0, t = 0, ihat = 0;
};

l12_qual find_l12_qual(const vertex& x, const vertex& y) {
  l12_qual q;
  for (int sw = 0; sw < 2 && !q.ok; ++sw) {
    const vertex& u = sw ? y : x;
    const vertex& v = sw ? x : y;
    int s = u[0];
    int t = v[0];
    if (s != 1 && s != 2) continue;
    if (t != 1 && t != 2 && t != 3) continue;
    auto [p, qq] = pq(3, s, t);
    for (size_t i = 1; i < u.size(); ++i) {
      if (u[i] == p && v[i] == qq) {
        q.ok = true;
        q.swapped = sw;
        q.s = s;
        q.t = t;
        q.ihat = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return q;
}

int word_parity_without(const vertex& w, int skip_pos) {
  vertex r;
  for (size_t i = 0; i < w.size(); ++i)
    if (static_cast<int>(i) + 1 != skip_pos) r.push_back(w[i]);
  return word_inversion_parity(r);
}

}  // namespace

// ---------------------------------------------------------------------------

ham_path composer::lab_path(const frequency_vector& a, const vertex& x, const vertex& y) {
  mpz_class total = vertex_count(a);
  if (total > static_cast<unsigned long>(lab_.options().cap))
    throw error("instance " + a.str() + " exceeds the search cap");
  path_outcome out = lab_.find_ham_path(a, x, y);
  if (out.status == search_status::none)
    throw error("no Hamilton path between the requested endpoints in G(" + a.str() +
                ") (exhausted search)");
  if (out.status == search_status::timeout)
    throw error("search timeout in G(" + a.str() + ")");
  return out.cert;
}

ham_path composer::via_view(const subgraph_view& view, const vertex& u, const vertex& v) {
  const frequency_vector& b = view.reduced();
  if (b.k() < 2) throw error("view reduces below two symbols");
  ham_path sub = path(b, view.reduce(u), view.reduce(v));
  ham_path out;
  out.a = view.base();
  out.start = u;
  out.flips.reserve(sub.flips.size());
  for (int p : sub.flips) out.flips.push_back(view.lift_pos(p));
  if (out.end() != v) throw error("lifted block path has wrong endpoint");
  return out;
}

ham_path composer::path(const frequency_vector& a, const vertex& x, const vertex& y) {
  if (x == y) throw error("path endpoints must be distinct");
  if (!vertex_in(x, a) || !vertex_in(y, a)) throw error("endpoint outside Pi(" + a.str() + ")");
  ham_path out = dispatch(a, x, y);
  verify_report rep = verify_path_between(out, x, y);
  if (!rep.ok) throw error("composed path failed verification: " + rep.message);
  return out;
}

ham_path composer::dispatch(const frequency_vector& a, const vertex& x, const vertex& y) {
  int d = delta(a);
  if (d < 0) {
    if (a.parts() == std::vector<int>{2, 1}) return lab_path(a, x, y);
    throw error("Delta=" + std::to_string(d) + ": G(" + a.str() +
                ") has no Hamilton path (negative regime)");
  }
  if (d == 0) {
    bool x1 = x[0] == 1, y1 = y[0] == 1;
    if (x1 == y1)
      throw error("Delta=0: no Hamilton path between two vertices of the same first-symbol class");
    if (!x1) return path(a, y, x).reversed();
    if (a.k() == 2) {
      if (a.part(1) >= 5) return middle::laceable_full(a.part(1), x, y);
      return lab_path(a, x, y);
    }
    if (!is_verified_delta0(a)) conditional_ = true;
    return lab_path(a, x, y);
  }
  if (d == 1) {
    if (a.parts() == std::vector<int>{1, 1, 1}) return lab_path(a, x, y);
    if (is_table_h_base(a)) return lab_path(a, x, y);
    if (is_aa1(a)) {
      l12_qual q = find_l12_qual(x, y);
      if (q.ok) {
        if (q.swapped) return compose_L12(a, y, x).reversed();
        return compose_L12(a, x, y);
      }
      return lab_path(a, x, y);  // Hamilton-connectedness is conjectured; verified for alpha <= 4
    }
    if (is_aam12(a)) return compose_H1_family(a, x, y, 1);
    if (is_aam111(a)) return compose_H1_family(a, x, y, 2);
    return compose_H1_family(a, x, y, 0);
  }
  // d >= 2
  if (is_all_ones(a)) {
    if (word_inversion_parity(x) == word_inversion_parity(y))
      throw error("G(1^k) is bipartite: endpoints of equal parity have no Hamilton path");
    if (a.k() == 4) return lab_path(a, x, y);
    return compose_T1k(a, x, y);
  }
  if (is_two_ones(a) && a.k() >= 5) return compose_Tp(a, x, y);
  if (is_aa2(a)) return compose_H2p(a, x, y);
  if (is_aa11(a)) return compose_H2pp(a, x, y);
  return compose_H2(a, x, y);
}

// ---------------------------------------------------------------------------
// Lemma H2: Delta >= 2, generic shape. One block per symbol at position ihat.

ham_path composer::compose_H2(const frequency_vector& a, const vertex& x, const vertex& y) {
  const int k = a.k();
  if (k < 3) throw error("H2 needs k >= 3");
  int ihat = first_diff_pos(x, y);
  auto [i1, i2] = diff_pair(x, {1, ihat});
  auto [i3, i4] = diff_pair(y, {1, ihat});

  // pi with pi_1 = x_ihat, pi_k = y_ihat; free middle entries ascending, with
  // retries should a completion be infeasible
  std::vector<int> mid;
  for (int s = 1; s <= k; ++s)
    if (s != x[static_cast<size_t>(ihat) - 1] && s != y[static_cast<size_t>(ihat) - 1])
      mid.push_back(s);
  std::sort(mid.begin(), mid.end());
  do {
    std::vector<int> pi = {x[static_cast<size_t>(ihat) - 1]};
    pi.insert(pi.end(), mid.begin(), mid.end());
    pi.push_back(y[static_cast<size_t>(ihat) - 1]);
    try {
      std::vector<ham_path> parts;
      vertex u = x;
      for (int j = 1; j <= k; ++j) {
        vertex v;
        if (j == k) {
          v = y;
        } else {
          pin_list pins = {{1, pi[static_cast<size_t>(j)]}, {ihat, pi[static_cast<size_t>(j) - 1]}};
          if (j == 1) pins.push_back({i1, x[static_cast<size_t>(i2) - 1]});
          if (j == k - 1) pins.push_back({i3, y[static_cast<size_t>(i4) - 1]});
          v = complete_vertex(a, pins, {u});
        }
        parts.push_back(via_view(subgraph_view(a, {{ihat, pi[static_cast<size_t>(j) - 1]}}), u, v));
        if (j < k) u = sw1(v, ihat);
      }
      return join_blocks(a, parts);
    } catch (const error&) {
      // infeasible pin combination: try the next ordering of pi
    }
  } while (std::next_permutation(mid.begin(), mid.end()));
  throw error("H2 composition failed for all symbol orderings (bug)");
}

// ---------------------------------------------------------------------------
// Theorem T skeleton: G(1^k) laceable, k >= 5 (k = 4 handled by the lab).

ham_path composer::compose_T1k(const frequency_vector& a, const vertex& x, const vertex& y) {
  const int k = a.k();
  int ihat = first_diff_pos(x, y);
  std::vector<int> pi = {x[static_cast<size_t>(ihat) - 1]};
  for (int s = 1; s <= k; ++s)
    if (s != x[static_cast<size_t>(ihat) - 1] && s != y[static_cast<size_t>(ihat) - 1])
      pi.push_back(s);
  pi.push_back(y[static_cast<size_t>(ihat) - 1]);

  std::vector<ham_path> parts;
  vertex u = x;
  for (int j = 1; j <= k; ++j) {
    vertex v;
    if (j == k) {
      v = y;
      if (word_parity_without(u, ihat) == word_parity_without(v, ihat))
        throw error("T1k: final block endpoints have equal parity (bug)");
    } else {
      pin_list pins = {{1, pi[static_cast<size_t>(j)]}, {ihat, pi[static_cast<size_t>(j) - 1]}};
      v = complete_vertex(a, pins, {u});
      if (word_parity_without(u, ihat) == word_parity_without(v, ihat)) {
        // flip the reduced parity by swapping two free entries (positions 1
        // and ihat stay pinned); any swap of distinct symbols flips parity
        bool fixed = false;
        for (int pp = 2; pp <= a.n() && !fixed; ++pp) {
          if (pp == ihat) continue;
          for (int qq = pp + 1; qq <= a.n() && !fixed; ++qq) {
            if (qq == ihat) continue;
            if (v[static_cast<size_t>(pp) - 1] == v[static_cast<size_t>(qq) - 1]) continue;
            std::swap(v[static_cast<size_t>(pp) - 1], v[static_cast<size_t>(qq) - 1]);
            if (v != u) {
              fixed = true;
            } else {
              std::swap(v[static_cast<size_t>(pp) - 1], v[static_cast<size_t>(qq) - 1]);
            }
          }
        }
        if (!fixed) throw error("T1k: cannot adjust block parity");
      }
    }
    parts.push_back(via_view(subgraph_view(a, {{ihat, pi[static_cast<size_t>(j) - 1]}}), u, v));
    if (j < k) u = sw1(v, ihat);
  }
  return join_blocks(a, parts);
}

// ---------------------------------------------------------------------------
// Lemma T': G(2,1^{k-1}) Hamilton-connected, k >= 5.

ham_path composer::compose_Tp(const frequency_vector& a, const vertex& x, const vertex& y) {
  const int k = a.k();
  int n = a.n();
  int ihat = first_diff_pos(x, y);
  int xih = x[static_cast<size_t>(ihat) - 1], yih = y[static_cast<size_t>(ihat) - 1];

  auto pick = [&](const vertex& w, const std::vector<int>& banned_syms,
                  const std::vector<int>& excl_pos) {
    for (size_t i = 1; i < w.size(); ++i) {
      int pos = static_cast<int>(i) + 1;
      if (std::find(excl_pos.begin(), excl_pos.end(), pos) != excl_pos.end()) continue;
      if (std::find(banned_syms.begin(), banned_syms.end(), w[i]) == banned_syms.end()) return pos;
    }
    throw error("T': no admissible index");
  };
  int i1 = pick(x, {x[0], xih, yih}, {1, ihat});
  int ik = pick(y, {y[0], xih, yih, x[static_cast<size_t>(i1) - 1]}, {1, ihat});
  int xi1 = x[static_cast<size_t>(i1) - 1], yik = y[static_cast<size_t>(ik) - 1];

  std::vector<int> pi = {xih, xi1};
  for (int s = 1; s <= k; ++s)
    if (s != xih && s != xi1 && s != yik && s != yih) pi.push_back(s);
  pi.push_back(yik);
  pi.push_back(yih);
  int jhat = 0;
  for (int j = 1; j <= k; ++j)
    if (pi[static_cast<size_t>(j) - 1] == 1) jhat = j;

  std::vector<ham_path> parts;
  vertex u = x;
  for (int j = 1; j <= k; ++j) {
    vertex v;
    if (j == k) {
      v = y;
      if (jhat == k && sw1(u, ik) != y) throw error("T': terminal 1^k block misaligned");
    } else if (j == jhat) {
      // the 1^k block: endpoints differ by one transposition (positions 1, i_jhat)
      int next = pi[static_cast<size_t>(j)];
      int ij = (j == 1) ? i1 : find_sym_pos(u, next, {1, ihat});
      v = sw1(u, ij);
    } else if (j == k - 1 && jhat == k) {
      // force u^k = y swap(1, i_k) so the final 1^k block is a transposition pair
      v = sw1(sw1(y, ik), ihat);
    } else {
      pin_list pins = {{1, pi[static_cast<size_t>(j)]}, {ihat, pi[static_cast<size_t>(j) - 1]}};
      v = complete_vertex(a, pins, {u});
    }
    parts.push_back(via_view(subgraph_view(a, {{ihat, pi[static_cast<size_t>(j) - 1]}}), u, v));
    if (j < k) u = sw1(v, ihat);
  }
  return join_blocks(a, parts);
}

// ---------------------------------------------------------------------------
// Lemma L12: (alpha,alpha,1). Caller guarantees a qualifying pair with s-side
// first; s may be 2 (handled by the 1<->2 relabeling symmetry).

ham_path composer::compose_L12(const frequency_vector& a, const vertex& x, const vertex& y) {
  if (!is_aa1(a)) throw error("L12 composition needs the (alpha,alpha,1) shape");
  l12_qual q = find_l12_qual(x, y);
  if (!q.ok || q.swapped) {
    std::string checked;
    for (size_t i = 1; i < x.size(); ++i) checked += (checked.empty() ? "" : ",") + std::to_string(i + 1);
    throw error("L12: no qualifying position ihat (checked positions " + checked + ")");
  }
  if (q.s == 2) {
    auto m = swap_symbols_map(a.k(), 1, 2);
    return relabel_cert(compose_L12(a, relabel_vertex(x, m), relabel_vertex(y, m)), m);
  }
  int ihat = q.ihat, t = q.t;
  std::vector<ham_path> parts;
  if (t == 1 || t == 3) {
    // (x_ihat, y_ihat) = (3,1); blocks fix symbols 3, 2, 1 at ihat
    vertex v1 = complete_vertex(a, {{1, 2}, {ihat, 3}}, {x});
    vertex u2 = sw1(v1, ihat);
    vertex v2 = complete_vertex(a, {{1, 1}, {ihat, 2}}, {u2});
    vertex u3 = sw1(v2, ihat);
    parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), x, v1));
    parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u2, v2));
    parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u3, y));
  } else {
    // t = 2: (x_ihat, y_ihat) = (2,1); blocks fix symbols 2, 3, 1
    vertex v1 = complete_vertex(a, {{1, 3}, {ihat, 2}}, {x});
    vertex u2 = sw1(v1, ihat);
    vertex v2 = complete_vertex(a, {{1, 1}, {ihat, 3}}, {u2});
    vertex u3 = sw1(v2, ihat);
    parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), x, v1));
    parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u2, v2));
    parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u3, y));
  }
  return join_blocks(a, parts);
}

// ---------------------------------------------------------------------------
// Lemma H2': (alpha,alpha,2).

ham_path composer::compose_H2p(const frequency_vector& a, const vertex& x, const vertex& y) {
  if (!is_aa2(a)) throw error("H2' needs the (alpha,alpha,2) shape");
  // normalize (x_ihat, y_ihat) to (1,2) or (1,3) via the 1<->2 relabeling and
  // endpoint swap; undo the transforms on the result
  auto id_map = swap_symbols_map(a.k(), 1, 1);
  auto rel12 = swap_symbols_map(a.k(), 1, 2);
  struct variantt {
    const std::vector<int>* m;
    bool swapped;
  };
  std::vector<variantt> tries = {{&id_map, false}, {&rel12, false}, {&id_map, true}, {&rel12, true}};
  for (const auto& tr : tries) {
    vertex u = relabel_vertex(tr.swapped ? y : x, *tr.m);
    vertex v = relabel_vertex(tr.swapped ? x : y, *tr.m);
    int ihat = first_diff_pos(u, v);
    int ui = u[static_cast<size_t>(ihat) - 1], vi = v[static_cast<size_t>(ihat) - 1];
    if (!(ui == 1 && (vi == 2 || vi == 3))) continue;
    std::vector<ham_path> parts;
    if (vi == 2) {
      int i1 = 0, i2 = 0;
      i2 = find_sym_pos(u, 2, {1, ihat});
      for (size_t i = 1; i < u.size(); ++i) {
        int pos = static_cast<int>(i) + 1;
        if (pos != ihat && pos != i2 && u[i] != 2) {
          i1 = pos;
          break;
        }
      }
      int i4 = find_sym_pos(v, 1, {1, ihat});
      int i3 = 0;
      for (size_t i = 1; i < v.size(); ++i) {
        int pos = static_cast<int>(i) + 1;
        if (pos != ihat && pos != i4 && v[i] != 1) {
          i3 = pos;
          break;
        }
      }
      if (!i1 || !i3) continue;
      vertex v1 = complete_vertex(a, {{1, 3}, {ihat, 1}, {i1, 2}}, {u});
      vertex u2 = sw1(v1, ihat);
      vertex v2 = complete_vertex(a, {{1, 2}, {ihat, 3}, {i1, 1}, {i3, 1}}, {u2});
      vertex u3 = sw1(v2, ihat);
      parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u, v1));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u2, v2));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u3, v));
    } else {
      int t = v[0];
      int p = pq(3, 2, t).first;
      auto [i1, i2] = diff_pair(u, {1, ihat});
      int i3 = find_sym_pos(v, 2, {1, ihat});
      vertex v1 =
          complete_vertex(a, {{1, 2}, {ihat, 1}, {i1, u[static_cast<size_t>(i2) - 1]}}, {u});
      vertex u2 = sw1(v1, ihat);
      vertex v2 = complete_vertex(a, {{1, 3}, {ihat, 2}, {i3, p}}, {u2});
      vertex u3 = sw1(v2, ihat);
      parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u, v1));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u2, v2));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u3, v));
    }
    ham_path cert = join_blocks(a, parts);
    cert = relabel_cert(cert, *tr.m);  // the swap map is an involution
    if (tr.swapped) cert = cert.reversed();
    return cert;
  }
  throw error("H2': no normalization matched (bug)");
}

// ---------------------------------------------------------------------------
// Lemma H2'': (alpha,alpha,1,1).

ham_path composer::compose_H2pp(const frequency_vector& a, const vertex& x, const vertex& y) {
  if (!is_aa11(a)) throw error("H2'' needs the (alpha,alpha,1,1) shape");
  auto id_map = swap_symbols_map(a.k(), 1, 1);
  auto rel12 = swap_symbols_map(a.k(), 1, 2);
  auto rel34 = swap_symbols_map(a.k(), 3, 4);
  auto rel_both = rel12;
  std::swap(rel_both[3], rel_both[4]);
  struct variantt {
    const std::vector<int>* m;
    bool swapped;
  };
  std::vector<variantt> tries = {{&id_map, false},   {&rel12, false}, {&rel34, false},
                                 {&rel_both, false}, {&id_map, true}, {&rel12, true},
                                 {&rel34, true},     {&rel_both, true}};
  for (const auto& tr : tries) {
    vertex u = relabel_vertex(tr.swapped ? y : x, *tr.m);
    vertex v = relabel_vertex(tr.swapped ? x : y, *tr.m);
    int ihat = first_diff_pos(u, v);
    int ui = u[static_cast<size_t>(ihat) - 1], vi = v[static_cast<size_t>(ihat) - 1];
    bool c12 = (ui == 1 && vi == 2), c13 = (ui == 1 && vi == 3), c34 = (ui == 3 && vi == 4);
    if (!c12 && !c13 && !c34) continue;
    std::vector<ham_path> parts;
    if (c12) {
      int i2 = find_sym_pos(u, 4, {}, true);
      int i4 = find_sym_pos(v, 3, {}, true);
      int i1 = 0, i3 = 0;
      for (int pos = 2; pos <= a.n(); ++pos)
        if (pos != ihat && pos != i2) {
          i1 = pos;
          break;
        }
      for (int pos = 2; pos <= a.n(); ++pos)
        if (pos != ihat && pos != i4 && pos != i1) {
          i3 = pos;
          break;
        }
      vertex v1 = complete_vertex(a, {{1, 3}, {ihat, 1}, {i1, 4}}, {u});
      vertex u2 = sw1(v1, ihat);
      vertex v2 = complete_vertex(a, {{1, 4}, {ihat, 3}, {i1, 1}, {i3, 2}}, {u2});
      vertex u3 = sw1(v2, ihat);
      vertex v3 = complete_vertex(a, {{1, 2}, {ihat, 4}, {i3, 3}}, {u3});
      vertex u4 = sw1(v3, ihat);
      parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u, v1));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u2, v2));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 4}}), u3, v3));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u4, v));
    } else if (c13) {
      int t = v[0];
      int p = pq(4, 2, t).first;
      int i1 = 0, i2 = find_sym_pos(u, 2, {1, ihat});
      for (int pos = 2; pos <= a.n(); ++pos)
        if (pos != ihat && u[static_cast<size_t>(pos) - 1] != 2) {
          i1 = pos;
          break;
        }
      int i3 = find_sym_pos(v, 2, {1, ihat});
      vertex v1 = complete_vertex(a, {{1, 4}, {ihat, 1}, {i1, 2}}, {u});
      vertex u2 = sw1(v1, ihat);
      vertex v2 = complete_vertex(a, {{1, 2}, {ihat, 4}, {i1, 1}}, {u2});
      vertex u3 = sw1(v2, ihat);
      vertex v3 = complete_vertex(a, {{1, 3}, {ihat, 2}, {i3, p}}, {u3});
      vertex u4 = sw1(v3, ihat);
      parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u, v1));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 4}}), u2, v2));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u3, v3));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u4, v));
    } else {
      int t = v[0];
      int p = pq(3, 2, t).first;
      int tp = u[0];
      int pp = pq(4, 1, tp).first;
      int i1 = find_sym_pos(u, 1, {1, ihat});
      int i3 = find_sym_pos(v, 2, {1, ihat});
      vertex v1 = complete_vertex(a, {{1, 1}, {ihat, 3}, {i1, pp}}, {u});
      vertex u2 = sw1(v1, ihat);
      vertex v2 = complete_vertex(a, {{1, 2}, {ihat, 1}}, {u2});
      vertex u3 = sw1(v2, ihat);
      vertex v3 = complete_vertex(a, {{1, 4}, {ihat, 2}, {i3, p}}, {u3});
      vertex u4 = sw1(v3, ihat);
      parts.push_back(via_view(subgraph_view(a, {{ihat, 3}}), u, v1));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 1}}), u2, v2));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 2}}), u3, v3));
      parts.push_back(via_view(subgraph_view(a, {{ihat, 4}}), u4, v));
    }
    ham_path cert = join_blocks(a, parts);
    cert = relabel_cert(cert, *tr.m);
    if (tr.swapped) cert = cert.reversed();
    return cert;
  }
  throw error("H2'': no normalization matched (bug)");
}

// ---------------------------------------------------------------------------
// Lemma H1 family. variant: 0 generic, 1 = (a,a-1,2), 2 = (a,a-1,1,1).

namespace {

bool has_one_nonone(const vertex& u, const vertex& v) {
  for (size_t i = 1; i < u.size(); ++i)
    if (u[i] == 1 && v[i] != 1) return true;
  return false;
}

}  // namespace

ham_path composer::compose_H1_family(const frequency_vector& a, const vertex& x0, const vertex& y0,
                                     int variant) {
  const int k = a.k();
  const int n = a.n();
  if (a.part(1) <= a.part(2)) throw error("H1 family needs a strictly largest first part");

  // Orientation: prefer an index with x_i = 1, y_i != 1 (case ob/eb).
  vertex x = x0, y = y0;
  bool swapped = false;
  std::vector<int> undo_relabel;  // empty = identity
  if (!has_one_nonone(x, y) && has_one_nonone(y, x)) {
    std::swap(x, y);
    swapped = true;
  }
  bool case_b = has_one_nonone(x, y);

  int icheck = 0;
  if (case_b) {
    for (size_t i = 1; i < x.size(); ++i)
      if (x[i] == 1 && y[i] != 1) {
        icheck = static_cast<int>(i) + 1;
        break;
      }
  } else {
    for (size_t i = 1; i < x.size(); ++i)
      if (x[i] == 1 && y[i] == 1) {
        icheck = static_cast<int>(i) + 1;
        break;
      }
    if (!icheck) throw error("H1: no index with x_i = y_i = 1 (bug: a_1 >= 3 expected)");
  }

  const bool odd = (k % 2 == 1);
  const int ell = odd ? (k - 1) / 2 : k / 2;

  // Each case below materializes the block endpoint vertices in dependency
  // order, then concatenates the oracle paths.

  auto finish = [&](ham_path cert) {
    if (!undo_relabel.empty()) cert = relabel_cert(cert, undo_relabel);
    if (swapped) cert = cert.reversed();
    return cert;
  };

  if (!case_b) {
    // -------- cases (oa) / (ea): y_icheck = 1 --------
    int ihat = 0;
    if (variant == 0) {
      ihat = first_diff_pos(x, y, {icheck});
    } else if (variant == 1) {
      ihat = first_diff_pos(x, y, {icheck});
      if (x[static_cast<size_t>(ihat) - 1] == 3) {
        std::swap(x, y);
        swapped = !swapped;
      }
    } else {
      // variant 2: normalize (x_ihat, y_ihat) to (2,3) or (3,4) using the
      // 3<->4 relabeling and endpoint swaps
      auto rel34 = swap_symbols_map(k, 3, 4);
      bool done = false;
      for (int r = 0; r < 2 && !done; ++r)
        for (int sw = 0; sw < 2 && !done; ++sw) {
          vertex u = x, v = y;
          if (r) {
            u = relabel_vertex(u, rel34);
            v = relabel_vertex(v, rel34);
          }
          if (sw) std::swap(u, v);
          int ih = first_diff_pos(u, v, {icheck});
          int a1 = u[static_cast<size_t>(ih) - 1], b1 = v[static_cast<size_t>(ih) - 1];
          if ((a1 == 2 && b1 == 3) || (a1 == 3 && b1 == 4)) {
            x = u;
            y = v;
            ihat = ih;
            if (r) undo_relabel = rel34;
            if (sw) swapped = !swapped;
            done = true;
          }
        }
      if (!done) throw error("H1'' (ea): endpoint normalization failed (bug)");
    }
    int xih = x[static_cast<size_t>(ihat) - 1], yih = y[static_cast<size_t>(ihat) - 1];
    if (variant == 0 && (xih == 1 || yih == 1))
      throw error("H1 (oa/ea): differing position touches symbol 1 (bug)");

    std::vector<int> pi, rho;
    if (variant == 1) {
      pi = {1, 2, 3};
      rho = {2, 1, 3};
    } else if (variant == 2 && xih == 2) {  // case (ea1)
      pi = {1, 3, 4, 2};
      rho = {2, 1, 4, 3};
    } else if (variant == 2) {  // case (ea2), (x_ihat, y_ihat) = (3,4)
      pi = {1, 2, 3, 4};
      rho = {3, 1, 2, 4};
    } else {
      auto pr = matching_perms(k, odd ? matching_case::oa : matching_case::ea, xih, yih, 2);
      pi = pr.first;
      rho = pr.second;
    }
    auto PI = [&](int i) { return pi[static_cast<size_t>(i) - 1]; };
    auto RHO = [&](int i) { return rho[static_cast<size_t>(i) - 1]; };

    auto viewP = [&](int j) {
      return subgraph_view(a, {{icheck, 1}, {ihat, RHO(j)}});
    };
    auto viewS = [&](int sym) { return subgraph_view(a, {{icheck, sym}}); };

    if (variant == 2 && xih == 3) {
      // ---- case (ea2): backward subpath assembly ----
      int t = y[0], p = pq(3, 2, t).first;
      int tp = x[0], pp = pq(4, 2, tp).first;
      int i1 = find_sym_pos(x, 2, {1, icheck, ihat});
      int i3 = find_sym_pos(y, 2, {1, icheck, ihat});

      vertex uc1 = complete_vertex(a, {{1, 1}, {ihat, 1}, {icheck, 3}});
      vertex vc1 = complete_vertex(a, {{1, 4}, {icheck, 3}}, {uc1});
      ham_path Q = via_view(viewS(3), uc1, vc1);
      auto qv = Q.vertices();
      size_t zi = 0;
      for (size_t i = 0; i < qv.size(); ++i)
        if (qv[i][static_cast<size_t>(ihat) - 1] == 2) {
          zi = i;
          break;
        }
      if (zi == 0) throw error("H1'' (ea2): no split vertex found");
      vertex z = qv[zi], zp = qv[zi - 1];
      if (zp[0] != 2 || zp[static_cast<size_t>(ihat) - 1] != 1 || z[0] != 1)
        throw error("H1'' (ea2): splice conditions violated");
      ham_path Qp;  // backward subpath z' -> uc1
      Qp.a = a;
      Qp.start = uc1;
      Qp.flips.assign(Q.flips.begin(), Q.flips.begin() + static_cast<long>(zi) - 1);
      Qp = Qp.reversed();
      ham_path Qpp;  // backward subpath vc1 -> z
      Qpp.a = a;
      Qpp.start = z;
      Qpp.flips.assign(Q.flips.begin() + static_cast<long>(zi), Q.flips.end());
      Qpp = Qpp.reversed();

      vertex v1 = complete_vertex(a, {{1, 2}, {icheck, 1}, {ihat, 3}, {i1, pp}}, {x});
      vertex uh1 = sw1(v1, icheck);
      vertex vh1 = sw1(zp, icheck);
      vertex u2 = sw1(uc1, icheck);
      vertex v2 = complete_vertex(a, {{1, 4}, {icheck, 1}, {ihat, 1}}, {u2});
      vertex uh2 = sw1(v2, icheck);
      vertex vh2 = sw1(vc1, icheck);
      vertex u3 = sw1(z, icheck);
      vertex v3 = complete_vertex(a, {{1, 4}, {icheck, 1}, {ihat, 2}, {i3, p}},
                                  {u3, sw1(y, ihat)});
      vertex u4 = sw1(v3, ihat);

      std::vector<ham_path> parts;
      parts.push_back(via_view(viewP(1), x, v1));
      parts.push_back(via_view(viewS(2), uh1, vh1));
      parts.push_back(Qp);
      parts.push_back(via_view(viewP(2), u2, v2));
      parts.push_back(via_view(viewS(4), uh2, vh2));
      parts.push_back(Qpp);
      parts.push_back(via_view(viewP(3), u3, v3));
      parts.push_back(via_view(viewP(4), u4, y));
      return finish(join_blocks(a, parts));
    }

    auto [i1, i2] = diff_pair(x, {1, ihat, icheck});
    auto [i3g, i4g] = diff_pair(y, {1, ihat, icheck});

    if (odd) {
      // ---- case (oa) ----
      std::vector<ham_path> parts;
      vertex u = x;
      for (int j = 1; j <= ell; ++j) {
        pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
        if (j == 1) pins.push_back({i1, x[static_cast<size_t>(i2) - 1]});
        vertex v = complete_vertex(a, pins, {u});
        parts.push_back(via_view(viewP(j), u, v));
        vertex uh = sw1(v, icheck);
        vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
        parts.push_back(via_view(viewS(PI(2 * j)), uh, vh));
        vertex uc = sw1(vh, icheck);
        vertex vc = complete_vertex(a, {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}}, {uc});
        parts.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
        u = sw1(vc, icheck);
      }
      for (int j = ell + 1; j <= k; ++j) {
        vertex v;
        if (j == k) {
          v = y;
        } else {
          pin_list pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
          if (j == k - 1) {
            if (variant == 1) {
              int t = y[0];
              int p = pq(3, 1, t).first;
              int i3 = find_sym_pos(y, 1, {1, icheck, ihat});
              pins.push_back({i3, p});
            } else {
              pins.push_back({i3g, y[static_cast<size_t>(i4g) - 1]});
            }
          }
          v = complete_vertex(a, pins, {u});
        }
        parts.push_back(via_view(viewP(j), u, v));
        if (j < k) u = sw1(v, ihat);
      }
      return finish(join_blocks(a, parts));
    }

    // ---- case (ea) generic / (ea1) ----
    {
      vertex uh1 = complete_vertex(a, {{1, 1}, {i1, x[static_cast<size_t>(i2) - 1]},
                                       {ihat, RHO(1)}, {icheck, PI(2)}});
      vertex vh1 = complete_vertex(a, {{1, PI(k)}, {icheck, PI(2)}}, {uh1});
      ham_path Q = via_view(viewS(PI(2)), uh1, vh1);
      auto qv = Q.vertices();
      size_t zi = 0;
      for (size_t i = 0; i < qv.size(); ++i)
        if (qv[i][static_cast<size_t>(ihat) - 1] == PI(3)) {
          zi = i;
          break;
        }
      if (zi == 0) throw error("H1 (ea): no split vertex found");
      vertex z = qv[zi], zp = qv[zi - 1];
      if (zp[0] != PI(3) || zp[static_cast<size_t>(ihat) - 1] != 1 || z[0] != 1)
        throw error("H1 (ea): splice conditions violated");
      ham_path Qp;
      Qp.a = a;
      Qp.start = uh1;
      Qp.flips.assign(Q.flips.begin(), Q.flips.begin() + static_cast<long>(zi) - 1);
      ham_path Qpp;
      Qpp.a = a;
      Qpp.start = z;
      Qpp.flips.assign(Q.flips.begin() + static_cast<long>(zi), Q.flips.end());

      int itilde = 0;
      if (variant == 2) {
        // (ea1): need z_itilde = 1 for the L12 pin on block 3
        itilde = find_sym_pos(z, 1, {1, icheck, ihat});
      }

      std::vector<ham_path> parts;
      vertex v1 = sw1(uh1, icheck);
      parts.push_back(via_view(viewP(1), x, v1));
      parts.push_back(Qp);
      vertex uc1 = sw1(zp, icheck);
      pin_list c1 = {{1, 1}, {icheck, PI(3)}, {ihat, RHO(2)}};
      vertex vc1 = complete_vertex(a, c1, {uc1});
      parts.push_back(via_view(viewS(PI(3)), uc1, vc1));
      vertex u = sw1(vc1, icheck);
      for (int j = 2; j <= ell - 1; ++j) {
        pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
        vertex v = complete_vertex(a, pins, {u});
        parts.push_back(via_view(viewP(j), u, v));
        vertex uh = sw1(v, icheck);
        vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
        parts.push_back(via_view(viewS(PI(2 * j)), uh, vh));
        vertex uc = sw1(vh, icheck);
        vertex vc = complete_vertex(a, {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}},
                                    {uc});
        parts.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
        u = sw1(vc, icheck);
      }
      vertex vPk1 = sw1(z, icheck);  // v^{k-1}
      if (vPk1[static_cast<size_t>(ihat) - 1] != RHO(k - 1))
        throw error("H1 (ea): chi2 block misaligned");
      for (int j = ell; j <= k - 2; ++j) {
        pin_list pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
        if (variant == 2 && j == 2) pins.push_back({itilde, 3});
        std::vector<vertex> avoid = {u};
        if (j == k - 2) avoid.push_back(sw1(vPk1, ihat));
        vertex v = complete_vertex(a, pins, avoid);
        parts.push_back(via_view(viewP(j), u, v));
        u = sw1(v, ihat);
      }
      parts.push_back(via_view(viewP(k - 1), u, vPk1));
      parts.push_back(Qpp);
      vertex ucl = sw1(vh1, icheck);
      pin_list cl = {{1, 1}, {icheck, PI(k)}, {ihat, RHO(k)}};
      if (variant == 2) {
        // (ea1): u^k_{i3} = p with p = p_4(2, t), t = y_1 in {1,2,4}
        int i3 = find_sym_pos(y, 2, {1, icheck, ihat});
        cl.push_back({i3, pq(4, 2, y[0]).first});
      } else {
        cl.push_back({i3g, y[static_cast<size_t>(i4g) - 1]});
      }
      vertex vcl = complete_vertex(a, cl, {ucl});
      parts.push_back(via_view(viewS(PI(k)), ucl, vcl));
      vertex uk = sw1(vcl, icheck);
      parts.push_back(via_view(viewP(k), uk, y));
      return finish(join_blocks(a, parts));
    }
  }

  // -------- cases (ob1)/(ob2)/(eb1)/(eb2): y_icheck != 1 --------
  int ihat = 0;
  for (size_t i = 1; i < x.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (pos != icheck && x[i] == 1) {
      ihat = pos;
      break;
    }
  }
  if (!ihat) throw error("H1 (ob/eb): no second 1-position in x (bug)");
  auto [i1, i2] = diff_pair(x, {1, ihat, icheck});
  int yc = y[static_cast<size_t>(icheck) - 1];

  if (odd) {
    if (y[0] == 1) {
      // ---- case (ob1) ----
      std::vector<int> pi, rho;
      if (variant == 1) {
        pi = {1, 5 - yc, yc};
        rho = {1, 2, 3};
      } else {
        auto pr = matching_perms(k, matching_case::ob1, 2, 3, yc);
        pi = pr.first;
        rho = pr.second;
      }
      auto PI = [&](int i) { return pi[static_cast<size_t>(i) - 1]; };
      auto RHO = [&](int i) { return rho[static_cast<size_t>(i) - 1]; };
      auto viewP = [&](int j) { return subgraph_view(a, {{icheck, 1}, {ihat, RHO(j)}}); };
      auto viewS = [&](int sym) { return subgraph_view(a, {{icheck, sym}}); };

      std::vector<ham_path> head, tail;
      vertex u = x;
      for (int j = 1; j <= ell - 1; ++j) {
        pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
        if (j == 1) pins.push_back({i1, x[static_cast<size_t>(i2) - 1]});
        vertex v = complete_vertex(a, pins, {u});
        head.push_back(via_view(viewP(j), u, v));
        vertex uh = sw1(v, icheck);
        vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
        head.push_back(via_view(viewS(PI(2 * j)), uh, vh));
        vertex uc = sw1(vh, icheck);
        vertex vc = complete_vertex(a, {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}},
                                    {uc});
        head.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
        u = sw1(vc, icheck);
      }
      int itilde = 0;
      // tail blocks P_ell .. P_k joined by (1, ihat) swaps
      for (int j = ell; j <= k; ++j) {
        pin_list pins;
        std::vector<vertex> avoid = {u};
        if (j < k) {
          pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
          if (j == 1) pins.push_back({i1, x[static_cast<size_t>(i2) - 1]});
        } else {
          pins = {{1, PI(k - 1)}, {icheck, 1}, {ihat, RHO(k)}};
        }
        if (variant == 1) {
          itilde = 0;
          for (int pos = 2; pos <= n; ++pos)
            if (pos != icheck && pos != ihat && pos != i1) {
              itilde = pos;
              break;
            }
          if (j == k - 1) pins.push_back({itilde, 3});
          if (j == k) pins.push_back({itilde, 2});
        }
        vertex v = complete_vertex(a, pins, avoid);
        tail.push_back(via_view(viewP(j), u, v));
        if (j < k) u = sw1(v, ihat);
        else u = sw1(v, icheck);  // (iib): into the final pair
      }
      // final pair: P-hat_ell then P-check_ell ending at y
      vertex uhl = u;
      vertex vhl = complete_vertex(a, {{1, PI(k)}, {icheck, PI(k - 1)}}, {uhl});
      tail.push_back(via_view(viewS(PI(k - 1)), uhl, vhl));
      vertex ucl = sw1(vhl, icheck);
      if (y[static_cast<size_t>(icheck) - 1] != PI(k)) throw error("H1 (ob1): y outside final block");
      tail.push_back(via_view(viewS(PI(k)), ucl, y));
      std::vector<ham_path> parts = head;
      parts.insert(parts.end(), tail.begin(), tail.end());
      return finish(join_blocks(a, parts));
    }
    // ---- case (ob2) ----
    std::vector<int> pi, rho;
    if (variant == 1) {
      pi = {1, yc, 5 - yc};
      rho = pi;
    } else {
      auto pr = matching_perms(k, matching_case::ob2, 2, 3, yc);
      pi = pr.first;
      rho = pr.second;
    }
    auto PI = [&](int i) { return pi[static_cast<size_t>(i) - 1]; };
    auto RHO = [&](int i) { return rho[static_cast<size_t>(i) - 1]; };
    auto viewP = [&](int j) { return subgraph_view(a, {{icheck, 1}, {ihat, RHO(j)}}); };
    auto viewS = [&](int sym) { return subgraph_view(a, {{icheck, sym}}); };

    vertex uh1 = complete_vertex(
        a, {{1, 1}, {i1, x[static_cast<size_t>(i2) - 1]}, {ihat, 1}, {icheck, PI(2)}});
    ham_path Q = via_view(viewS(PI(2)), uh1, y);
    auto qv = Q.vertices();
    size_t zi = 0;
    for (size_t i = 0; i < qv.size(); ++i)
      if (qv[i][static_cast<size_t>(ihat) - 1] == PI(3)) {
        zi = i;
        break;
      }
    if (zi == 0) throw error("H1 (ob2): no split vertex found");
    vertex z = qv[zi], zp = qv[zi - 1];
    if (zp[0] != PI(3) || zp[static_cast<size_t>(ihat) - 1] != 1 || z[0] != 1)
      throw error("H1 (ob2): splice conditions violated");
    ham_path Qp;
    Qp.a = a;
    Qp.start = uh1;
    Qp.flips.assign(Q.flips.begin(), Q.flips.begin() + static_cast<long>(zi) - 1);
    ham_path Qpp;
    Qpp.a = a;
    Qpp.start = z;
    Qpp.flips.assign(Q.flips.begin() + static_cast<long>(zi), Q.flips.end());

    int itilde = 0;
    if (variant == 1) {
      if (PI(3) == 3) {
        itilde = find_sym_pos(z, 2, {1, icheck, ihat});
      } else {
        for (int pos = 2; pos <= n; ++pos)
          if (pos != icheck && pos != ihat) {
            itilde = pos;
            break;
          }
      }
    }

    std::vector<ham_path> parts;
    vertex v1 = sw1(uh1, icheck);
    parts.push_back(via_view(viewP(1), x, v1));
    parts.push_back(Qp);
    vertex uc1 = sw1(zp, icheck);
    pin_list c1pins = {{1, 1}, {icheck, PI(3)}, {ihat, RHO(2)}};
    if (variant == 1 && PI(2) == 3) c1pins.push_back({itilde, 3});
    vertex vc1 = complete_vertex(a, c1pins, {uc1});
    parts.push_back(via_view(viewS(PI(3)), uc1, vc1));
    vertex u = sw1(vc1, icheck);
    for (int j = 2; j <= ell; ++j) {
      pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
      vertex v = complete_vertex(a, pins, {u});
      parts.push_back(via_view(viewP(j), u, v));
      vertex uh = sw1(v, icheck);
      vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
      parts.push_back(via_view(viewS(PI(2 * j)), uh, vh));
      vertex uc = sw1(vh, icheck);
      vertex vc =
          complete_vertex(a, {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}}, {uc});
      parts.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
      u = sw1(vc, icheck);
    }
    vertex vPk = sw1(z, icheck);
    if (vPk[static_cast<size_t>(ihat) - 1] != RHO(k)) throw error("H1 (ob2): chi2 misaligned");
    for (int j = ell + 1; j <= k - 1; ++j) {
      pin_list pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
      if (variant == 1) {
        if (PI(2) == 3 && j == 2) pins.push_back({itilde, 2});
        if (PI(3) == 3 && j == 2) pins.push_back({itilde, 3});
      }
      std::vector<vertex> avoid = {u};
      if (j == k - 1) avoid.push_back(sw1(vPk, ihat));
      vertex v = complete_vertex(a, pins, avoid);
      parts.push_back(via_view(viewP(j), u, v));
      u = sw1(v, ihat);
    }
    parts.push_back(via_view(viewP(k), u, vPk));
    parts.push_back(Qpp);
    return finish(join_blocks(a, parts));
  }

  // even k
  if (y[0] != 1) {
    // ---- case (eb2) ----
    std::vector<int> pi, rho;
    if (variant == 2) {
      if (yc == 2) {
        pi = {1, 3, 4, 2};
        rho = {1, 2, 3, 4};
      } else {
        pi = {1, 7 - yc, 2, yc};
        rho = {1, 3, 4, 2};
      }
    } else {
      auto pr = matching_perms(k, matching_case::eb2, 2, 3, yc);
      pi = pr.first;
      rho = pr.second;
    }
    auto PI = [&](int i) { return pi[static_cast<size_t>(i) - 1]; };
    auto RHO = [&](int i) { return rho[static_cast<size_t>(i) - 1]; };
    auto viewP = [&](int j) { return subgraph_view(a, {{icheck, 1}, {ihat, RHO(j)}}); };
    auto viewS = [&](int sym) { return subgraph_view(a, {{icheck, sym}}); };

    int itilde = 0, jspec = 0;
    if (variant == 2) {
      jspec = (RHO(2) == 3) ? 2 : 3;
      for (int pos = 2; pos <= n; ++pos)
        if (pos != icheck && pos != ihat && pos != i1) {
          itilde = pos;
          break;
        }
    }

    std::vector<ham_path> parts;
    vertex u = x;
    for (int j = 1; j <= ell - 1; ++j) {
      pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
      if (j == 1) pins.push_back({i1, x[static_cast<size_t>(i2) - 1]});
      vertex v = complete_vertex(a, pins, {u});
      parts.push_back(via_view(viewP(j), u, v));
      vertex uh = sw1(v, icheck);
      vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
      parts.push_back(via_view(viewS(PI(2 * j)), uh, vh));
      vertex uc = sw1(vh, icheck);
      pin_list cpins = {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}};
      if (variant == 2 && jspec == 2 && j == 1) cpins.push_back({itilde, 4});
      vertex vc = complete_vertex(a, cpins, {uc});
      parts.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
      u = sw1(vc, icheck);
    }
    vertex vk;  // v^k, needed before u^k
    for (int j = ell; j <= k; ++j) {
      pin_list pins;
      if (j < k) {
        pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
      } else {
        pins = {{1, PI(k)}, {icheck, 1}, {ihat, RHO(k)}};
      }
      if (variant == 2) {
        if (j == jspec) pins.push_back({itilde, 2});
        if (j == jspec + 1) pins.push_back({itilde, 3});
        if (jspec == 3 && j == 2) pins.push_back({itilde, 4});
      }
      vertex v = complete_vertex(a, pins, {u});
      parts.push_back(via_view(viewP(j), u, v));
      if (j < k)
        u = sw1(v, ihat);
      else
        vk = v;
    }
    vertex uhl = sw1(vk, icheck);
    if (y[static_cast<size_t>(icheck) - 1] != PI(k)) throw error("H1 (eb2): y outside final block");
    parts.push_back(via_view(viewS(PI(k)), uhl, y));
    return finish(join_blocks(a, parts));
  }

  // ---- case (eb1): y_1 = 1 ----
  std::vector<int> pi, rho;
  if (variant == 2) {
    if (yc == 2) {
      pi = {1, 3, 4, 2};
      rho = {1, 3, 2, 4};
    } else {
      pi = {1, 2, 7 - yc, yc};
      rho = {1, yc, 2, 7 - yc};
    }
  } else {
    auto pr = matching_perms(k, matching_case::eb1, 2, 3, yc);
    pi = pr.first;
    rho = pr.second;
  }
  auto PI = [&](int i) { return pi[static_cast<size_t>(i) - 1]; };
  auto RHO = [&](int i) { return rho[static_cast<size_t>(i) - 1]; };
  auto viewP = [&](int j) { return subgraph_view(a, {{icheck, 1}, {ihat, RHO(j)}}); };
  auto viewS = [&](int sym) { return subgraph_view(a, {{icheck, sym}}); };

  vertex uh1 = complete_vertex(
      a, {{1, 1}, {i1, x[static_cast<size_t>(i2) - 1]}, {ihat, 1}, {icheck, PI(2)}});
  vertex vh1 = complete_vertex(a, {{1, PI(k)}, {icheck, PI(2)}}, {uh1});
  ham_path Q = via_view(viewS(PI(2)), uh1, vh1);
  auto qv = Q.vertices();
  size_t zi = 0;
  for (size_t i = 0; i < qv.size(); ++i)
    if (qv[i][static_cast<size_t>(ihat) - 1] == PI(3)) {
      zi = i;
      break;
    }
  if (zi == 0) throw error("H1 (eb1): no split vertex found");
  vertex z = qv[zi], zp = qv[zi - 1];
  if (zp[0] != PI(3) || zp[static_cast<size_t>(ihat) - 1] != 1 || z[0] != 1)
    throw error("H1 (eb1): splice conditions violated");
  ham_path Qp;
  Qp.a = a;
  Qp.start = uh1;
  Qp.flips.assign(Q.flips.begin(), Q.flips.begin() + static_cast<long>(zi) - 1);
  ham_path Qpp;
  Qpp.a = a;
  Qpp.start = z;
  Qpp.flips.assign(Q.flips.begin() + static_cast<long>(zi), Q.flips.end());

  int itilde = 0;
  if (variant == 2) itilde = find_sym_pos(z, PI(4), {1, icheck, ihat});

  std::vector<ham_path> parts;
  vertex v1 = sw1(uh1, icheck);
  parts.push_back(via_view(viewP(1), x, v1));
  parts.push_back(Qp);
  vertex uc1 = sw1(zp, icheck);
  pin_list c1pins = {{1, 1}, {icheck, PI(3)}, {ihat, RHO(2)}};
  if (variant == 2) c1pins.push_back({itilde, 2});
  vertex vc1 = complete_vertex(a, c1pins, {uc1});
  parts.push_back(via_view(viewS(PI(3)), uc1, vc1));
  vertex u = sw1(vc1, icheck);
  for (int j = 2; j <= ell - 1; ++j) {
    pin_list pins = {{1, PI(2 * j)}, {icheck, 1}, {ihat, RHO(j)}};
    vertex v = complete_vertex(a, pins, {u});
    parts.push_back(via_view(viewP(j), u, v));
    vertex uh = sw1(v, icheck);
    vertex vh = complete_vertex(a, {{1, PI(2 * j + 1)}, {icheck, PI(2 * j)}}, {uh});
    parts.push_back(via_view(viewS(PI(2 * j)), uh, vh));
    vertex uc = sw1(vh, icheck);
    vertex vc = complete_vertex(a, {{1, 1}, {icheck, PI(2 * j + 1)}, {ihat, RHO(j + 1)}}, {uc});
    parts.push_back(via_view(viewS(PI(2 * j + 1)), uc, vc));
    u = sw1(vc, icheck);
  }
  vertex vPk = sw1(z, icheck);
  if (vPk[static_cast<size_t>(ihat) - 1] != RHO(k)) throw error("H1 (eb1): chi2 misaligned");
  for (int j = ell; j <= k - 1; ++j) {
    pin_list pins = {{1, RHO(j + 1)}, {icheck, 1}, {ihat, RHO(j)}};
    if (variant == 2 && j == 2) pins.push_back({itilde, PI(3)});
    if (variant == 2 && j == 3) pins.push_back({itilde, PI(2)});
    std::vector<vertex> avoid = {u};
    if (j == k - 1) avoid.push_back(sw1(vPk, ihat));
    vertex v = complete_vertex(a, pins, avoid);
    parts.push_back(via_view(viewP(j), u, v));
    u = sw1(v, ihat);
  }
  parts.push_back(via_view(viewP(k), u, vPk));
  parts.push_back(Qpp);
  vertex ucl = sw1(vh1, icheck);
  if (y[static_cast<size_t>(icheck) - 1] != PI(k)) throw error("H1 (eb1): y outside final block");
  parts.push_back(via_view(viewS(PI(k)), ucl, y));
  return finish(join_blocks(a, parts));
}

// ---------------------------------------------------------------------------
// Cycles and the dispatcher front end.

ham_path composer::cycle(const frequency_vector& a) {
  classification cls = classify(a);
  if (!cls.hamilton_cycle_possible)
    throw error("Delta=" + std::to_string(cls.delta) + ": G(" + a.str() +
                ") has no Hamilton cycle");
  if (a.parts() == std::vector<int>{1, 1}) {
    path_outcome out = lab_.find_ham_cycle(a);
    return out.cert;
  }
  vertex x;
  int closing = 0;
  if (is_aa1(a)) {
    // pick x with x_1 = 1 and close over a position holding 2: this pair
    // qualifies for L12 at the swapped position
    x = complete_vertex(a, {{1, 1}});
    closing = find_sym_pos(x, 2, {});
  } else {
    for (int s = 1; s <= a.k(); ++s)
      for (int c = 0; c < a.part(s); ++c) x.push_back(static_cast<uint8_t>(s));
    closing = 0;
    for (size_t i = 1; i < x.size(); ++i)
      if (x[i] != x[0]) {
        closing = static_cast<int>(i) + 1;
        break;
      }
  }
  vertex y = sw1(x, closing);
  ham_path cert = path(a, x, y);
  cert.cycle = true;
  cert.flips.push_back(closing);
  verify_report rep = verify(cert, expectation::cycle);
  if (!rep.ok) throw error("cycle verification failed: " + rep.message);
  return cert;
}

std::pair<vertex, vertex> default_endpoints(const frequency_vector& a) {
  vertex x;
  for (int s = 1; s <= a.k(); ++s)
    for (int c = 0; c < a.part(s); ++c) x.push_back(static_cast<uint8_t>(s));
  if (a.parts() == std::vector<int>{2, 1}) return {x, vertex{1, 2, 1}};  // the path's two leaves
  vertex y(x.rbegin(), x.rend());
  if (is_all_ones(a)) {
    if (word_inversion_parity(x) == word_inversion_parity(y)) {
      std::swap(y[y.size() - 1], y[y.size() - 2]);
    }
  }
  if (x == y) throw error("instance has fewer than two distinct vertices");
  return {x, y};
}

ham_path composer::gray_code(const frequency_vector& a, std::optional<vertex> x,
                             std::optional<vertex> y, bool cycle_mode) {
  classification cls = classify(a);
  if (cls.r == regime::negative && !cls.hamilton_path_possible)
    throw error("Delta=" + std::to_string(cls.delta) + ": no Hamilton cycle or path in G(" +
                a.str() + ")");
  if (cycle_mode) {
    if (x || y) throw error("--cycle does not take endpoints");
    return cycle(a);
  }
  if (!x || !y) {
    auto [dx, dy] = default_endpoints(a);
    if (!x) x = dx;
    if (!y) y = dy;
  }
  return path(a, *x, *y);
}

}  // namespace stargray
