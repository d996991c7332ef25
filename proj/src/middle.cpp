#include "stargray/middle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

namespace stargray::middle {

namespace {

std::string key(const word& w) { return std::string(w.begin(), w.end()); }

int weight(const word& w) {
  int c = 0;
  for (uint8_t s : w) c += (s != 0);
  return c;
}

int hamming(const word& u, const word& v) {
  int d = 0;
  for (size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
  return d;
}

frequency_vector full_partition(const frequency_vector& a) {
  std::vector<int> parts = a.parts();
  parts.push_back(a.n());
  return frequency_vector(parts);
}

}  // namespace

std::string word_str(const word& w) {
  std::string s;
  for (uint8_t c : w) s += static_cast<char>('0' + c);
  return s;
}

word parse_word(const std::string& s) {
  word w;
  for (char c : s) {
    if (c < '0' || c > '9') throw error("bad word '" + s + "'");
    w.push_back(static_cast<uint8_t>(c - '0'));
  }
  return w;
}

word hat(const word& x) {
  word h(x.size());
  for (size_t i = 0; i < x.size(); ++i) h[i] = x[i] != 0;
  return h;
}

bool is_dyck(const word& bits) {
  int bal = 0;
  for (uint8_t b : bits) {
    bal += b ? 1 : -1;
    if (bal < 0) return false;
  }
  return bal == 0;
}

bool member(const word& x, const instance& inst, int* suppressed_out) {
  if (static_cast<int>(x.size()) != inst.len) return false;
  std::vector<int> cnt(static_cast<size_t>(inst.a.k()) + 1, 0);
  for (uint8_t s : x) {
    if (s > inst.a.k()) return false;
    cnt[s]++;
  }
  int deficit = -1;
  if (cnt[0] == inst.n - 1)
    deficit = 0;
  else if (cnt[0] != inst.n)
    return false;
  for (int i = 1; i <= inst.a.k(); ++i) {
    if (cnt[static_cast<size_t>(i)] == inst.a.part(i) - 1) {
      if (deficit >= 0) return false;
      deficit = i;
    } else if (cnt[static_cast<size_t>(i)] != inst.a.part(i)) {
      return false;
    }
  }
  if (deficit < 0) return false;
  if (suppressed_out) *suppressed_out = deficit;
  return true;
}

int suppressed(const word& x, const instance& inst) {
  int s = -1;
  if (!member(x, inst, &s)) throw error("word outside Pi_n(a)^-: " + word_str(x));
  return s;
}

word rotate_left(const word& x, int l) {
  int len = static_cast<int>(x.size());
  l = ((l % len) + len) % len;
  word out(x.size());
  for (int i = 0; i < len; ++i) out[static_cast<size_t>(i)] = x[static_cast<size_t>((i + l) % len)];
  return out;
}

int shift_of(const word& x, const instance& inst) {
  int sup = suppressed(x, inst);
  word h = hat(x);
  for (int l = 0; l <= inst.len - 1; ++l) {
    word r = rotate_left(h, l);
    if (sup != 0) {
      word pre(r.begin(), r.end() - 1);
      if (is_dyck(pre)) return l;
    } else {
      if (r[0] != 1) continue;
      word suf(r.begin() + 1, r.end());
      if (is_dyck(suf)) return l;
    }
  }
  throw error("no valid shift (malformed word): " + word_str(x));
}

word tree_of(const word& x, const instance& inst) {
  int sup = suppressed(x, inst);
  int l = shift_of(x, inst);
  int start = (sup != 0) ? l : l + 1;
  word t(static_cast<size_t>(inst.len) - 1);
  for (int i = 0; i < inst.len - 1; ++i)
    t[static_cast<size_t>(i)] = x[static_cast<size_t>((start + i) % inst.len)];
  return t;
}

namespace {

// 0-based index of the 0 matching the leading 1 of a Dyck-prefixed word.
int match_of_first(const word& bits) {
  int bal = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    bal += bits[i] ? 1 : -1;
    if (bal == 0) return static_cast<int>(i);
  }
  throw error("unbalanced word");
}

// 0-based index of the 1 matching the trailing 0 of a Dyck-suffixed word.
int match_of_last(const word& bits) {
  int bal = 0;
  for (int i = static_cast<int>(bits.size()) - 1; i >= 0; --i) {
    bal += bits[static_cast<size_t>(i)] ? -1 : 1;
    if (bal == 0) return i;
  }
  throw error("unbalanced word");
}

}  // namespace

int f_flip_pos(const word& x, const instance& inst) {
  int sup = suppressed(x, inst);
  int l = shift_of(x, inst);
  if (sup != 0) {
    word t = tree_of(x, inst);
    int m = match_of_first(hat(t));
    return (m + l) % inst.len + 1;
  }
  return l % inst.len + 1;
}

word f_step(const word& x, const instance& inst) {
  int sup = suppressed(x, inst);
  int pos = f_flip_pos(x, inst);
  word y = x;
  y[static_cast<size_t>(pos) - 1] = static_cast<uint8_t>(sup);
  return y;
}

word g_step(const word& x, const instance& inst) {
  int sup = suppressed(x, inst);
  int l = shift_of(x, inst);
  word y = x;
  if (sup != 0) {
    int idx = (inst.len - 2 + l) % inst.len;  // last tree position
    y[static_cast<size_t>(idx)] = static_cast<uint8_t>(sup);
  } else {
    word t = tree_of(x, inst);
    int j = match_of_last(hat(t));
    int idx = (j + 1 + l) % inst.len;
    y[static_cast<size_t>(idx)] = 0;
  }
  return y;
}

int tree_suppressed(const word& t, const instance& inst) {
  word v = t;
  v.push_back(0);
  return suppressed(v, inst);
}

word rho_rotate(const word& t, const instance& inst) {
  if (t.empty() || t[0] == 0) throw error("rho: word does not start with a symbol");
  int a = tree_suppressed(t, inst);
  int m = match_of_first(hat(t));
  word out;
  out.insert(out.end(), t.begin() + 1, t.begin() + m);
  out.push_back(static_cast<uint8_t>(a));
  out.insert(out.end(), t.begin() + m + 1, t.end());
  out.push_back(0);
  return out;
}

std::vector<word> rho_orbit(const word& t, const instance& inst) {
  std::vector<word> orbit;
  word cur = t;
  do {
    orbit.push_back(cur);
    cur = rho_rotate(cur, inst);
  } while (cur != t);
  return orbit;
}

word canon_tree(const word& t, const instance& inst) {
  auto orbit = rho_orbit(t, inst);
  return *std::min_element(orbit.begin(), orbit.end());
}

int potential(const word& t) {
  // build the tree: root plus one vertex per non-zero entry
  int n = 1 + weight(t);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  int cur = 0, next = 1;
  std::vector<int> stack = {0};
  for (uint8_t c : t) {
    if (c != 0) {
      adj[static_cast<size_t>(cur)].push_back(next);
      adj[static_cast<size_t>(next)].push_back(cur);
      stack.push_back(next);
      cur = next++;
    } else {
      stack.pop_back();
      cur = stack.back();
    }
  }
  int best = -1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::queue<int> q;
    q.push(s);
    dist[static_cast<size_t>(s)] = 0;
    int total = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      total += dist[static_cast<size_t>(v)];
      for (int w : adj[static_cast<size_t>(v)])
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          q.push(w);
        }
    }
    if (best < 0 || total < best) best = total;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cycle factor.

int cycle_factor::id_of_tree(const word& t) const {
  auto it = rep_id.find(key(canon_tree(t, inst)));
  if (it == rep_id.end()) throw error("tree class not in factor");
  return it->second;
}

int cycle_factor::id_of_vertex(const word& v) const {
  word w = v;
  if (suppressed(w, inst) == 0) w = f_step(w, inst);
  return id_of_tree(tree_of(w, inst));
}

std::vector<word> cycle_factor::cycle_vertices(int id) const {
  word start = reps[static_cast<size_t>(id)];
  start.push_back(0);
  std::vector<word> out;
  word cur = start;
  do {
    out.push_back(cur);
    cur = f_step(cur, inst);
  } while (cur != start);
  return out;
}

namespace {

void gen_dyck(int ones, int zeros, word& cur, std::vector<word>& out) {
  if (ones == 0 && zeros == 0) {
    out.push_back(cur);
    return;
  }
  if (ones > 0) {
    cur.push_back(1);
    gen_dyck(ones - 1, zeros, cur, out);
    cur.pop_back();
  }
  if (zeros > 0 && zeros > ones) {
    cur.push_back(0);
    gen_dyck(ones, zeros - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<word> dyck_words(int n) {
  std::vector<word> out;
  word cur;
  gen_dyck(n - 1, n - 1, cur, out);
  std::sort(out.begin(), out.end(), std::greater<word>());
  std::reverse(out.begin(), out.end());  // ascending
  return out;
}

}  // namespace

cycle_factor build_factor(const frequency_vector& a, size_t cap) {
  instance inst(a);
  mpz_class total = vertex_count(full_partition(a));
  if (total > static_cast<unsigned long>(cap))
    throw error("middle instance exceeds cap: " + total.get_str());
  cycle_factor fac(inst);
  std::set<word> reps;
  for (const word& d : dyck_words(inst.n)) {
    std::vector<size_t> one_pos;
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i]) one_pos.push_back(i);
    for (int root = 1; root <= a.k(); ++root) {
      if (a.part(root) < 1) continue;
      std::vector<uint8_t> labels;
      for (int s = 1; s <= a.k(); ++s)
        for (int c = 0; c < a.part(s) - (s == root ? 1 : 0); ++c)
          labels.push_back(static_cast<uint8_t>(s));
      if (labels.size() != one_pos.size()) throw error("label multiset mismatch");
      std::sort(labels.begin(), labels.end());
      do {
        word w = d;
        for (size_t i = 0; i < one_pos.size(); ++i) w[one_pos[i]] = labels[i];
        reps.insert(canon_tree(w, inst));
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  }
  fac.reps.assign(reps.begin(), reps.end());
  for (size_t i = 0; i < fac.reps.size(); ++i)
    fac.rep_id.emplace(key(fac.reps[i]), static_cast<int>(i));
  return fac;
}

// ---------------------------------------------------------------------------
// Gluing cycles.

std::vector<word> gluing_cycle(const gluing_tuple& t, const instance& inst) {
  auto base = [&](const word& w) {
    word v = w;
    v.push_back(0);
    return v;
  };
  auto iterate = [&](const word& w0, int i) {
    word v = base(w0);
    for (int s = 0; s < i; ++s) v = f_step(v, inst);
    return v;
  };
  std::vector<word> seq = {base(t.x1),       iterate(t.x1, 1), iterate(t.x2, 6), iterate(t.x2, 5),
                           base(t.y1),       iterate(t.y1, 1), base(t.x3),       iterate(t.x3, 1),
                           iterate(t.x4, 6), iterate(t.x4, 5), base(t.y2),       iterate(t.y2, 1)};
  if (t.x3 == t.x1 && t.x4 == t.x2 && t.y2 == t.y1) seq.resize(6);
  for (size_t i = 0; i < seq.size(); ++i) {
    const word& u = seq[i];
    const word& v = seq[(i + 1) % seq.size()];
    if (hamming(u, v) != 1)
      throw error("gluing cycle step is not a flip (malformed tuple)");
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Spanning gluing pairs on plane trees.

namespace {

word star_word(int n) {
  word w;
  for (int i = 0; i < n - 1; ++i) {
    w.push_back(1);
    w.push_back(0);
  }
  return w;
}

// Split x = 110u0v into (u, v); requires the leading 110 shape.
bool split_110(const word& x, word& u, word& v) {
  if (x.size() < 4 || x[0] == 0 || x[1] == 0 || x[2] != 0) return false;
  int m = match_of_first(hat(x));
  u.assign(x.begin() + 3, x.begin() + m);
  v.assign(x.begin() + m + 1, x.end());
  return true;
}

}  // namespace

std::vector<std::pair<word, word>> spanning_gluing_set(int n) {
  if (n < 4) throw error("spanning gluing set needs n >= 4");
  instance inst(frequency_vector({n}));
  // group rooted trees into plane classes
  std::map<word, std::vector<word>> classes;
  for (const word& d : dyck_words(n)) {
    word labeled(d);  // symbols are already 0/1
    classes[canon_tree(labeled, inst)].push_back(labeled);
  }
  word star_canon = canon_tree(star_word(n), inst);
  struct cls {
    word canon;
    int pot;
  };
  std::vector<cls> order;
  for (auto& [c, members] : classes) {
    if (c == star_canon) continue;
    order.push_back({c, potential(c)});
  }
  std::sort(order.begin(), order.end(), [](const cls& l, const cls& r) {
    if (l.pot != r.pot) return l.pot > r.pot;
    return l.canon < r.canon;
  });
  std::vector<std::pair<word, word>> out;
  for (const cls& c : order) {
    const auto& members = classes[c.canon];
    word best_x, best_y;
    for (const word& x : members) {
      word u, v;
      if (!split_110(x, u, v)) continue;
      word y = {1, 0, 1};
      y.insert(y.end(), u.begin(), u.end());
      y.push_back(0);
      y.insert(y.end(), v.begin(), v.end());
      if (potential(y) != c.pot - 1) continue;
      if (best_x.empty() || x < best_x) {
        best_x = x;
        best_y = y;
      }
    }
    if (best_x.empty())
      throw error("no qualifying gluing pair for a plane class (bug)");
    out.emplace_back(best_x, best_y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge structure: factor edges XOR toggled special edges.

namespace {

struct edge_structure {
  const instance& inst;
  std::unordered_map<std::string, std::vector<word>> specials;

  explicit edge_structure(const instance& i) : inst(i) {}

  void toggle_one(const word& u, const word& v) {
    auto& lst = specials[key(u)];
    auto it = std::find(lst.begin(), lst.end(), v);
    if (it != lst.end())
      lst.erase(it);
    else
      lst.push_back(v);
  }
  void toggle(const word& u, const word& v) {
    toggle_one(u, v);
    toggle_one(v, u);
  }
  void toggle_cycle(const std::vector<word>& cyc) {
    for (size_t i = 0; i < cyc.size(); ++i) toggle(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  void toggle_path(const std::vector<word>& path) {
    for (size_t i = 0; i + 1 < path.size(); ++i) toggle(path[i], path[i + 1]);
  }

  std::vector<word> neighbors(const word& v) const {
    std::vector<word> out = {f_step(v, inst), g_step(v, inst)};
    auto it = specials.find(key(v));
    if (it != specials.end()) {
      for (const word& s : it->second) {
        auto pos = std::find(out.begin(), out.end(), s);
        if (pos != out.end())
          out.erase(pos);
        else
          out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Follow the structure from v (degree 1 or 2): returns the whole component
  // as an ordered walk (path or cycle).
  std::vector<word> component(const word& v, bool* is_cycle = nullptr) const {
    auto nb = neighbors(v);
    if (nb.empty()) return {v};
    // walk in one direction; if we return to v it is a cycle
    std::vector<word> fwd = {v};
    word prev = v, cur = nb[0];
    while (cur != v) {
      fwd.push_back(cur);
      auto nn = neighbors(cur);
      if (nn.size() == 1) break;  // path end
      word nxt = (nn[0] == prev) ? nn[1] : nn[0];
      prev = cur;
      cur = nxt;
    }
    if (cur == v) {
      if (is_cycle) *is_cycle = true;
      return fwd;
    }
    if (is_cycle) *is_cycle = false;
    if (nb.size() == 1) return fwd;  // v was an endpoint
    // extend the other way
    std::vector<word> bwd;
    prev = v;
    cur = nb[1];
    while (true) {
      bwd.push_back(cur);
      auto nn = neighbors(cur);
      if (nn.size() == 1) break;
      word nxt = (nn[0] == prev) ? nn[1] : nn[0];
      prev = cur;
      cur = nxt;
    }
    std::vector<word> out(bwd.rbegin(), bwd.rend());
    out.insert(out.end(), fwd.begin(), fwd.end());
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Alternating path.

namespace {

std::vector<word> tree_table(int n) {
  // 1-based t(x_1..x_n); index 0 holds t(x') = s_n
  auto s = [&](int i) { return star_word(i); };
  auto cat = [](std::initializer_list<word> parts) {
    word out;
    for (const word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  word tail = parse_word("110010");
  std::vector<word> tw(static_cast<size_t>(n) + 1);
  tw[0] = s(n);
  tw[1] = cat({s(n - 3), tail});
  for (int i = 2; i <= n - 4; ++i) tw[static_cast<size_t>(i)] = cat({{1}, s(i), {0}, s(n - i - 3), tail});
  tw[static_cast<size_t>(n) - 3] = cat({parse_word("110"), s(n - 3), parse_word("010")});
  tw[static_cast<size_t>(n) - 2] = s(n);
  tw[static_cast<size_t>(n) - 1] = cat({parse_word("1100"), s(n - 3), parse_word("10")});
  tw[static_cast<size_t>(n)] = cat({parse_word("10110"), s(n - 3), {0}});
  return tw;
}

struct alt_builder {
  int n;
  instance inst;
  std::vector<word> tw;
  cycle_factor fac;
  std::vector<word> path;  // 2n+2 vertices when complete
  std::unordered_set<std::string> used;

  explicit alt_builder(int nn)
      : n(nn), inst(frequency_vector({nn})), tw(tree_table(nn)), fac(build_factor(frequency_vector({nn}))) {}

  bool bit_ok(const word& w, bool exempt) const {
    if (exempt) return true;
    return w[static_cast<size_t>(2 * n - 5) - 1] == 0;
  }

  bool push(const word& w) {
    if (!used.insert(key(w)).second) return false;
    path.push_back(w);
    return true;
  }
  void pop() {
    used.erase(key(path.back()));
    path.pop_back();
  }

  // slots: 0:x_1, then pairs; returns true when the full table is built
  bool extend() {
    size_t idx = path.size();
    // layout: x_1 y_1 x_2 y_2 ... x_{n-2} y_{n-2} x' y' x_{n-1} y_{n-1} x_n y_n
    size_t total = 2 * static_cast<size_t>(n) + 2;
    if (idx == total) return finished();
    const word& last = path.back();
    int d0;
    auto dist_to_x1 = [&](const word& w) { return hamming(path.front(), w); };

    // identify what the next slot is
    // positions of x_j: 2(j-1) for j<=n-2;  x' at 2(n-2); y' at 2(n-2)+1;
    // x_{n-1} at 2(n-2)+2; y_{n-1} at +3; x_n at +4; y_n at +5
    size_t base = 2 * static_cast<size_t>(n - 2);
    bool slot_is_y;
    int j = 0;          // which x_j/y_j (0 for the x'/y' detour)
    bool detour = false;
    if (idx < base) {
      slot_is_y = (idx % 2 == 1);
      j = static_cast<int>(idx / 2) + 1;  // y_j follows x_j
      if (slot_is_y) j = static_cast<int>((idx - 1) / 2) + 1;
    } else if (idx == base) {
      detour = true;
      slot_is_y = false;  // x'
    } else if (idx == base + 1) {
      detour = true;
      slot_is_y = true;  // y'
    } else {
      size_t rel = idx - base - 2;
      slot_is_y = (rel % 2 == 1);
      j = n - 1 + static_cast<int>(rel / 2);
      if (slot_is_y) j = n - 1 + static_cast<int>((rel - 1) / 2);
    }

    std::vector<word> cands;
    if (slot_is_y) {
      // y from the preceding x: a factor edge
      d0 = detour ? (2 * n - 5) : (2 * j - 1);
      for (const word& c : {f_step(last, inst), g_step(last, inst)}) {
        if (dist_to_x1(c) != d0) continue;
        if (!bit_ok(c, !detour && j == n)) continue;
        cands.push_back(c);
      }
    } else {
      // x from the preceding y: drop one non-zero entry
      const word* want_tree;
      int want_shift = -1;
      if (detour) {
        want_tree = &tw[0];
        d0 = 2 * n - 4;
      } else {
        want_tree = &tw[static_cast<size_t>(j)];
        d0 = 2 * j - 2;
        if (j == n - 3) want_shift = 0;
        if (j == n) want_shift = 2 * n - 5;
      }
      for (size_t p = 0; p < last.size(); ++p) {
        if (last[p] == 0) continue;
        word c = last;
        c[p] = 0;
        if (dist_to_x1(c) != d0) continue;
        if (!bit_ok(c, false)) continue;
        if (tree_of(c, inst) != *want_tree) continue;
        if (want_shift >= 0 && shift_of(c, inst) != want_shift) continue;
        cands.push_back(c);
      }
    }
    for (const word& c : cands) {
      if (!push(c)) continue;
      if (extend()) return true;
      pop();
    }
    return false;
  }

  bool finished() {
    // verify every subpath x_1 .. y_i
    for (int i = 1; i <= n; ++i) {
      if (!check_alternating(subpath(i))) return false;
    }
    return true;
  }

  std::vector<word> subpath(int i) const {
    size_t base = 2 * static_cast<size_t>(n - 2);
    size_t endidx;  // index of y_i
    if (i <= n - 2)
      endidx = 2 * static_cast<size_t>(i) - 1;
    else if (i == n - 1)
      endidx = base + 3;
    else
      endidx = base + 5;
    return std::vector<word>(path.begin(), path.begin() + static_cast<long>(endidx) + 1);
  }

  bool check_alternating(const std::vector<word>& pv) const {
    if (pv.size() % 2 != 0) return false;
    // edges alternate factor / non-factor, starting and ending with factor
    auto is_factor = [&](const word& u, const word& v) {
      return f_step(u, inst) == v || f_step(v, inst) == u;
    };
    for (size_t e = 0; e + 1 < pv.size(); ++e) {
      bool want = (e % 2 == 0);
      if (is_factor(pv[e], pv[e + 1]) != want) return false;
    }
    // symmetric difference with the factor restricted to intersected cycles
    std::set<int> ids;
    for (const word& v : pv) ids.insert(fac.id_of_vertex(v));
    edge_structure es(inst);
    es.toggle_path(pv);
    std::unordered_set<std::string> expect;
    for (int id : ids)
      for (const word& v : fac.cycle_vertices(id)) expect.insert(key(v));
    bool cyc = false;
    auto comp = es.component(pv.front(), &cyc);
    if (cyc) return false;
    if (comp.front() != pv.front() && comp.back() != pv.front()) return false;
    if (comp.size() != expect.size()) return false;
    for (const word& v : comp)
      if (!expect.count(key(v))) return false;
    // endpoints of the single path are x_1 and y_i
    const word& a0 = comp.front();
    const word& a1 = comp.back();
    if (!((a0 == pv.front() && a1 == pv.back()) || (a1 == pv.front() && a0 == pv.back())))
      return false;
    return true;
  }
};

}  // namespace

std::vector<word> alternating_path(int n, int i) {
  if (n < 5) throw error("alternating path needs n >= 5");
  if (i < 1 || i > n) throw error("alternating path index out of range");
  alt_builder b(n);
  word x1 = b.tw[1];
  x1.push_back(0);
  if (b.tw[1] != tree_of(x1, b.inst) || shift_of(x1, b.inst) != 0)
    throw error("x_1 transcription inconsistent");
  b.push(x1);
  if (!b.extend()) throw error("alternating path table could not be realized (bug)");
  return b.subpath(i);
}

// ---------------------------------------------------------------------------
// Automorphisms.

word automorphism_h(const word& x) {
  size_t L = x.size();
  word out(L);
  for (size_t j = 0; j + 1 < L; ++j) out[j] = static_cast<uint8_t>(1 - x[L - 2 - j]);
  out[L - 1] = static_cast<uint8_t>(1 - x[L - 1]);
  return out;
}

word apply_coords(const std::vector<int>& perm, const word& x) {
  word out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[static_cast<size_t>(perm[i]) - 1] = x[i];
  return out;
}

std::vector<int> map_pair_coords(const word& x1, const word& y1, const word& x2, const word& y2) {
  size_t L = x1.size();
  if (weight(x1) != weight(x2) || weight(y1) != weight(y2) || hamming(x1, y1) != hamming(x2, y2))
    throw error("map_pair: incompatible pairs");
  std::vector<int> p1(L);
  {
    std::vector<size_t> src[2], dst[2];
    for (size_t i = 0; i < L; ++i) src[x1[i] ? 1 : 0].push_back(i);
    for (size_t i = 0; i < L; ++i) dst[x2[i] ? 1 : 0].push_back(i);
    for (int b = 0; b < 2; ++b)
      for (size_t i = 0; i < src[b].size(); ++i) p1[src[b][i]] = static_cast<int>(dst[b][i]) + 1;
  }
  word z = apply_coords(p1, y1);
  std::vector<int> p2(L);
  {
    std::vector<size_t> src[4], dst[4];
    for (size_t i = 0; i < L; ++i) src[(x2[i] ? 2 : 0) + (z[i] ? 1 : 0)].push_back(i);
    for (size_t i = 0; i < L; ++i) dst[(x2[i] ? 2 : 0) + (y2[i] ? 1 : 0)].push_back(i);
    for (int b = 0; b < 4; ++b) {
      if (src[b].size() != dst[b].size()) throw error("map_pair: group size mismatch");
      for (size_t i = 0; i < src[b].size(); ++i) p2[src[b][i]] = static_cast<int>(dst[b][i]) + 1;
    }
  }
  std::vector<int> perm(L);
  for (size_t i = 0; i < L; ++i) perm[i] = p2[static_cast<size_t>(p1[i]) - 1];
  if (apply_coords(perm, x1) != x2 || apply_coords(perm, y1) != y2)
    throw error("map_pair: composition failed");
  return perm;
}

// ---------------------------------------------------------------------------
// Theorem M assembly.

namespace {

ham_path cert_from_walk(const frequency_vector& a, const std::vector<word>& walk, bool cycle) {
  ham_path cert;
  cert.a = a;
  cert.middle_form = true;
  cert.cycle = cycle;
  cert.start = walk.front();
  size_t steps = walk.size() - 1;
  for (size_t i = 0; i < steps; ++i) {
    int pos = -1;
    for (size_t p = 0; p < walk[i].size(); ++p)
      if (walk[i][p] != walk[i + 1][p]) {
        if (pos >= 0) throw error("walk step changes two positions");
        pos = static_cast<int>(p) + 1;
      }
    if (pos < 0) throw error("walk step is trivial");
    cert.flips.push_back(pos);
  }
  if (cycle) {
    int pos = -1;
    for (size_t p = 0; p < walk.back().size(); ++p)
      if (walk.back()[p] != walk.front()[p]) pos = static_cast<int>(p) + 1;
    cert.flips.push_back(pos);
  }
  return cert;
}

struct uf {
  std::vector<int> up;
  explicit uf(size_t n) : up(n) {
    for (size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  }
  int find(int v) { return up[static_cast<size_t>(v)] == v ? v : up[static_cast<size_t>(v)] = find(up[static_cast<size_t>(v)]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

ham_path laceable_path(int n, const word& x_in, const word& y_in) {
  if (n < 5) throw error("laceable_path needs n >= 5 (use the lab for n <= 4)");
  instance inst(frequency_vector({n}));
  word x = x_in, y = y_in;
  bool flipped = false;
  if (weight(x) == n && weight(y) == n - 1) {
    std::swap(x, y);
    flipped = true;
  }
  if (weight(x) != n - 1 || weight(y) != n) throw error("laceable_path endpoints must span the two levels");
  int d = hamming(x, y);

  auto Q = alternating_path(n, (d + 1) / 2);
  std::vector<word> Qs;
  Qs.reserve(Q.size());
  for (const word& v : Q) Qs.push_back(rotate_left(v, inst.len - 4));  // sigma^{-4}
  auto perm = map_pair_coords(Qs.front(), Qs.back(), x, y);

  cycle_factor fac = build_factor(frequency_vector({n}));
  std::set<int> touched;
  for (const word& v : Qs) touched.insert(fac.id_of_vertex(v));
  int r = static_cast<int>(touched.size());

  edge_structure es(inst);
  es.toggle_path(Qs);
  {
    bool cyc = false;
    auto comp = es.component(Qs.front(), &cyc);
    if (cyc) throw error("Q' symmetric difference is not a path");
  }

  uf components(fac.reps.size());
  {
    int first = *touched.begin();
    for (int id : touched) components.join(first, id);
  }
  auto pairs = spanning_gluing_set(n);
  int discarded = 0;
  for (const auto& [px, py] : pairs) {
    gluing_tuple t{px, px, px, px, py, py};
    auto cyc = gluing_cycle(t, inst);
    std::vector<word> hc;
    hc.reserve(cyc.size());
    for (const word& v : cyc) hc.push_back(automorphism_h(v));
    int ca = fac.id_of_vertex(hc[0]);
    int cb = fac.id_of_vertex(hc[4]);
    if (components.join(ca, cb)) {
      es.toggle_cycle(hc);
      bool is_cyc = false;
      auto comp = es.component(hc[0], &is_cyc);
      (void)comp;
    } else {
      ++discarded;
    }
  }
  if (discarded != r - 1) throw error("6-cycle discard count mismatch");

  bool cyc = false;
  auto walk = es.component(Qs.front(), &cyc);
  if (cyc) throw error("final structure closed into a cycle");
  if (walk.front() != Qs.front()) std::reverse(walk.begin(), walk.end());
  if (walk.front() != Qs.front() || walk.back() != Qs.back())
    throw error("final path has wrong endpoints");

  std::vector<word> mapped;
  mapped.reserve(walk.size());
  for (const word& v : walk) mapped.push_back(apply_coords(perm, v));
  if (flipped) std::reverse(mapped.begin(), mapped.end());

  ham_path cert = cert_from_walk(frequency_vector({n}), mapped, false);
  verify_report rep = verify(cert, expectation::path);
  if (!rep.ok) throw error("laceable_path verification failed: " + rep.message);
  if (cert.start != x_in || cert.end() != y_in) throw error("laceable_path endpoint mismatch");
  return cert;
}

// ---------------------------------------------------------------------------
// Theorem M' assembly.

ham_path cycle_m_prime(int n) {
  if (n < 4) throw error("cycle_m_prime needs n >= 4 (use the lab for n <= 3)");
  frequency_vector am({n - 1, 1});
  instance instM(am);
  instance instU(frequency_vector({n}));

  cycle_factor fac = build_factor(am);
  uf components(fac.reps.size());
  edge_structure es(instM);

  auto assert_joined = [&](const std::vector<word>& cyc, const std::vector<int>& ids) {
    bool is_cyc = false;
    auto comp = es.component(cyc[0], &is_cyc);
    if (!is_cyc) throw error("M': toggled component is not a cycle");
    std::unordered_set<std::string> in_comp;
    for (const word& v : comp) in_comp.insert(key(v));
    for (int id : ids) {
      word rep = fac.reps[static_cast<size_t>(id)];
      rep.push_back(0);
      if (!in_comp.count(key(rep)))
        throw error("M': a joined class is missing from the merged cycle");
    }
  };

  auto pairs = spanning_gluing_set(n);
  for (const auto& [x, y] : pairs) {
    // markings of x: the n equivalence candidates
    std::vector<word> markings;
    for (size_t p = 0; p < x.size(); ++p) {
      if (x[p] == 0) continue;
      word m = x;
      m[p] = 2;
      markings.push_back(m);
    }
    markings.push_back(x);  // root-marked: suppressed symbol 2
    std::sort(markings.begin(), markings.end());

    word x1 = x, x2 = x, y1 = y;
    x1[1] = 2;
    x2[0] = 2;
    y1[2] = 2;
    const word& x3 = x;
    const word& y2 = y;

    // partition the markings into equivalence classes w.r.t. the current factor
    std::map<int, std::vector<word>> classes;
    for (const word& m : markings) classes[components.find(fac.id_of_tree(m))].push_back(m);

    // designated tuple
    {
      gluing_tuple t{x1, x2, x3, x3, y1, y2};
      auto cyc = gluing_cycle(t, instM);
      es.toggle_cycle(cyc);
      std::vector<int> ids = {fac.id_of_tree(x1), fac.id_of_tree(x2), fac.id_of_tree(x3),
                              fac.id_of_tree(y1), fac.id_of_tree(y2)};
      for (size_t i = 1; i < ids.size(); ++i) components.join(ids[0], ids[i]);
      assert_joined(cyc, ids);
    }

    // extra tuples for classes that contain none of x1, x2, x3
    for (auto& [root, members] : classes) {
      (void)root;
      bool has_special = false;
      for (const word& m : members)
        has_special = has_special || m == x1 || m == x2 || m == x3;
      if (has_special) continue;
      const word& xp = members.front();  // lex smallest
      word yp = xp;
      std::swap(yp[1], yp[2]);
      gluing_tuple t{xp, xp, xp, xp, yp, yp};
      auto cyc = gluing_cycle(t, instM);
      es.toggle_cycle(cyc);
      std::vector<int> ids = {fac.id_of_tree(xp), fac.id_of_tree(yp)};
      components.join(ids[0], ids[1]);
      assert_joined(cyc, ids);
    }
  }

  word v0 = star_word(n);
  v0.push_back(0);
  bool cyc = false;
  auto walk = es.component(v0, &cyc);
  if (!cyc) throw error("M': final structure is not a cycle");
  ham_path cert = cert_from_walk(am, walk, true);
  verify_report rep = verify(cert, expectation::cycle);
  if (!rep.ok) throw error("cycle_m_prime verification failed: " + rep.message);
  return cert;
}

// ---------------------------------------------------------------------------
// Full-form wrapper and summaries.

ham_path laceable_full(int alpha, const vertex& x, const vertex& y) {
  frequency_vector a({alpha, alpha});
  if (!vertex_in(x, a) || !vertex_in(y, a)) throw error("laceable_full: endpoint outside Pi(a)");
  auto shorten = [&](const vertex& v) {
    word w;
    for (size_t i = 1; i < v.size(); ++i) w.push_back(v[i] == 1 ? 0 : 1);
    return w;
  };
  ham_path mid = laceable_path(alpha, shorten(x), shorten(y));
  instance inst(frequency_vector({alpha}));
  ham_path cert;
  cert.a = a;
  cert.cycle = false;
  int sup = suppressed(mid.start, inst);
  cert.start.push_back(sup == 0 ? 1 : 2);
  for (uint8_t s : mid.start) cert.start.push_back(s == 0 ? 1 : 2);
  for (int p : mid.flips) cert.flips.push_back(p + 1);
  verify_report rep = verify_path_between(cert, x, y);
  if (!rep.ok) throw error("laceable_full verification failed: " + rep.message);
  return cert;
}

factor_summary summarize_factor(const frequency_vector& a, size_t cap) {
  cycle_factor fac = build_factor(a, cap);
  factor_summary sum;
  sum.a = a;
  sum.n = a.n();
  sum.vertex_total = vertex_count(full_partition(a)).get_si();
  for (size_t i = 0; i < fac.reps.size(); ++i) {
    factor_summary::entry e;
    e.rep = word_str(fac.reps[i]);
    e.orbit = static_cast<int>(rho_orbit(fac.reps[i], fac.inst).size());
    e.potential = potential(fac.reps[i]);
    e.cycle_length = static_cast<long long>(fac.cycle_vertices(static_cast<int>(i)).size());
    sum.cycles.push_back(std::move(e));
  }
  return sum;
}

}  // namespace stargray::middle
