#include "stargray/ham_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace stargray {

std::string property_name(property_kind p) {
  switch (p) {
    case property_kind::C: return "C";
    case property_kind::P: return "P";
    case property_kind::E: return "E";
    case property_kind::L: return "L";
    case property_kind::L1: return "L1";
    case property_kind::L12: return "L12";
    case property_kind::H: return "H";
  }
  return "?";
}

std::optional<property_kind> parse_property(const std::string& s) {
  if (s == "C") return property_kind::C;
  if (s == "P") return property_kind::P;
  if (s == "E") return property_kind::E;
  if (s == "L") return property_kind::L;
  if (s == "L1") return property_kind::L1;
  if (s == "L12") return property_kind::L12;
  if (s == "H") return property_kind::H;
  return std::nullopt;
}

namespace {

using clock_type = std::chrono::steady_clock;

// Max possible count of a class among the m future path vertices f_1..f_m
// (f_m is the target), given whether the current head / the target belong to
// the class. Class members occupy pairwise non-consecutive path positions.
int class_upper_bound(int m, bool head_in, bool target_in) {
  if (m <= 0) return 0;
  int a = head_in ? 2 : 1;
  if (target_in) {
    if (m == 1) return head_in ? 0 : 1;
    int b = m - 2;
    return 1 + (b >= a ? (b - a + 2) / 2 : 0);
  }
  int b = m - 1;
  return b >= a ? (b - a + 2) / 2 : 0;
}

class searcher {
 public:
  searcher(const flip_graph& g, int32_t s, int32_t t, const search_options& opt)
      : g_(g), s_(s), t_(t), opt_(opt), n_verts_(static_cast<int32_t>(g.verts.size())) {}

  search_result run() {
    search_result res;
    const int k = g_.a.k();
    visited_.assign(n_verts_, 0);
    deg_.assign(n_verts_, 0);
    stamp_.assign(n_verts_, 0);
    bfs_mark_.assign(n_verts_, 0);
    cls_.resize(n_verts_);
    cnt_.assign(k + 1, 0);
    for (int32_t v = 0; v < n_verts_; ++v) {
      deg_[v] = g_.degree(v);
      cls_[v] = g_.verts[v][0];
      cnt_[cls_[v]]++;
    }
    alternation_ = delta(g_.a) == 0 && (cls_[s_] == 1) != (cls_[t_] == 1);
    start_is_1_ = cls_[s_] == 1;

    deadline_set_ = opt_.timeout_seconds > 0;
    if (deadline_set_)
      deadline_ = clock_type::now() + std::chrono::duration_cast<clock_type::duration>(
                                          std::chrono::duration<double>(opt_.timeout_seconds));

    path_.clear();
    path_.push_back(s_);
    visit(s_);
    cands_.resize(1);
    idx_.resize(1);
    if (n_verts_ == 1) {
      res.status = (s_ == t_) ? search_status::found : search_status::none;
      res.path = path_;
      return res;
    }
    if (!feasible(s_) || !sweep(s_)) {
      res.status = search_status::none;
      res.nodes = nodes_;
      return res;
    }
    gen_candidates(0, s_);

    size_t depth = 0;
    while (true) {
      if (interrupted()) {
        res.status = search_status::timeout;
        res.nodes = nodes_;
        return res;
      }
      if (idx_[depth] >= cands_[depth].size()) {
        // exhausted this frame
        unvisit(path_.back());
        path_.pop_back();
        if (depth == 0) {
          res.status = search_status::none;
          res.nodes = nodes_;
          return res;
        }
        --depth;
        continue;
      }
      int32_t w = cands_[depth][idx_[depth]++];
      ++nodes_;
      visit(w);
      path_.push_back(w);
      int m = n_verts_ - static_cast<int>(path_.size());
      if (m == 0) {
        if (w == t_) {
          res.status = search_status::found;
          res.path = path_;
          res.nodes = nodes_;
          return res;
        }
        unvisit(w);
        path_.pop_back();
        continue;
      }
      if (!feasible(w) || !sweep(w)) {
        unvisit(w);
        path_.pop_back();
        continue;
      }
      ++depth;
      if (cands_.size() <= depth) {
        cands_.resize(depth + 1);
        idx_.resize(depth + 1);
      }
      gen_candidates(depth, w);
    }
  }

 private:
  void visit(int32_t v) {
    visited_[v] = 1;
    cnt_[cls_[v]]--;
    for (const int32_t* p = g_.nbr_begin(v); p != g_.nbr_end(v); ++p) deg_[*p]--;
  }
  void unvisit(int32_t v) {
    visited_[v] = 0;
    cnt_[cls_[v]]++;
    for (const int32_t* p = g_.nbr_begin(v); p != g_.nbr_end(v); ++p) deg_[*p]++;
  }

  bool interrupted() {
    if ((nodes_ & 1023) != 0) return false;
    if (opt_.cancel && opt_.cancel->load(std::memory_order_relaxed)) return true;
    if (opt_.node_budget >= 0 && nodes_ > opt_.node_budget) return true;
    if (deadline_set_ && clock_type::now() > deadline_) return true;
    return false;
  }

  // Per-class counting bound.
  bool feasible(int32_t head) {
    int m = n_verts_ - static_cast<int>(path_.size());
    for (int c = 1; c <= g_.a.k(); ++c) {
      if (cnt_[c] > class_upper_bound(m, cls_[head] == c, cls_[t_] == c)) return false;
    }
    return true;
  }

  // Connectivity of the unvisited region (from the target) plus degree cuts.
  bool sweep(int32_t head) {
    int m = n_verts_ - static_cast<int>(path_.size());
    if (m <= 1) return true;
    ++stamp_counter_;
    for (const int32_t* p = g_.nbr_begin(head); p != g_.nbr_end(head); ++p)
      stamp_[*p] = stamp_counter_;
    ++bfs_counter_;
    bfs_queue_.clear();
    bfs_queue_.push_back(t_);
    bfs_mark_[t_] = bfs_counter_;
    size_t qi = 0;
    int reached = 0;
    while (qi < bfs_queue_.size()) {
      int32_t v = bfs_queue_[qi++];
      ++reached;
      int d = 0;
      for (const int32_t* p = g_.nbr_begin(v); p != g_.nbr_end(v); ++p) {
        if (visited_[*p]) continue;
        ++d;
        if (bfs_mark_[*p] != bfs_counter_) {
          bfs_mark_[*p] = bfs_counter_;
          bfs_queue_.push_back(*p);
        }
      }
      int avail = d + (stamp_[v] == stamp_counter_ ? 1 : 0);
      if (v == t_) {
        if (avail < 1) return false;
      } else if (avail < 2) {
        return false;
      }
    }
    return reached == m;
  }

  void gen_candidates(size_t depth, int32_t head) {
    auto& cs = cands_[depth];
    cs.clear();
    idx_[depth] = 0;
    int m = n_verts_ - static_cast<int>(path_.size());
    bool want1 = false;
    if (alternation_) {
      // depth of the next vertex is path_.size(); class-1 sits on even depths
      // when the start is in class 1, on odd depths otherwise
      size_t next_depth = path_.size();
      want1 = ((next_depth % 2 == 0) == start_is_1_);
    }
    for (const int32_t* p = g_.nbr_begin(head); p != g_.nbr_end(head); ++p) {
      int32_t w = *p;
      if (visited_[w]) continue;
      if (w == t_ && m > 1) continue;
      if (alternation_ && ((cls_[w] == 1) != want1)) continue;
      cs.push_back(w);
    }
    std::sort(cs.begin(), cs.end(), [&](int32_t l, int32_t r) {
      if (deg_[l] != deg_[r]) return deg_[l] < deg_[r];
      return l < r;
    });
  }

  const flip_graph& g_;
  int32_t s_, t_;
  search_options opt_;
  int32_t n_verts_;
  std::vector<uint8_t> visited_;
  std::vector<int32_t> deg_;
  std::vector<uint8_t> cls_;
  std::vector<int> cnt_;
  std::vector<int32_t> path_;
  std::vector<std::vector<int32_t>> cands_;
  std::vector<size_t> idx_;
  std::vector<uint32_t> stamp_, bfs_mark_;
  uint32_t stamp_counter_ = 0, bfs_counter_ = 0;
  std::vector<int32_t> bfs_queue_;
  bool alternation_ = false, start_is_1_ = false;
  bool deadline_set_ = false;
  clock_type::time_point deadline_;
  long long nodes_ = 0;
};

int flip_position(const vertex& x, const vertex& y) {
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i] != y[i]) return static_cast<int>(i) + 1;
  throw error("vertices do not differ beyond position 1");
}

ham_path path_from_ids(const flip_graph& g, const std::vector<int32_t>& ids, bool cycle) {
  ham_path cert;
  cert.a = g.a;
  cert.cycle = cycle;
  cert.start = g.verts[static_cast<size_t>(ids[0])];
  for (size_t i = 0; i + 1 < ids.size(); ++i)
    cert.flips.push_back(
        flip_position(g.verts[static_cast<size_t>(ids[i])], g.verts[static_cast<size_t>(ids[i + 1])]));
  if (cycle)
    cert.flips.push_back(
        flip_position(g.verts[static_cast<size_t>(ids.back())], g.verts[static_cast<size_t>(ids[0])]));
  return cert;
}

}  // namespace

search_result ham_path_search(const flip_graph& g, int32_t s, int32_t t,
                              const search_options& opt) {
  if (s == t) throw error("ham_path_search requires distinct endpoints");
  searcher sr(g, s, t, opt);
  return sr.run();
}

// ---------------------------------------------------------------------------
// Pair canonicalization under equal-frequency symbol relabelings.

namespace {

std::pair<vertex, vertex> apply_first_occurrence(const frequency_vector& a, const vertex& u,
                                                 const vertex& v, std::vector<int>& map_out) {
  int k = a.k();
  // blocks of equal frequency are consecutive since parts are non-increasing
  std::vector<int> block_base(static_cast<size_t>(k) + 1, 0), block_used(static_cast<size_t>(k) + 1, 0);
  for (int s = 1; s <= k; ++s) {
    if (s > 1 && a.part(s) == a.part(s - 1))
      block_base[static_cast<size_t>(s)] = block_base[static_cast<size_t>(s) - 1];
    else
      block_base[static_cast<size_t>(s)] = s;
  }
  std::vector<int> lbl(static_cast<size_t>(k) + 1, 0);
  auto feed = [&](const vertex& w) {
    for (uint8_t s : w) {
      if (lbl[s] == 0) {
        int base = block_base[s];
        lbl[s] = base + block_used[static_cast<size_t>(base)]++;
      }
    }
  };
  feed(u);
  feed(v);
  for (int s = 1; s <= k; ++s)
    if (lbl[static_cast<size_t>(s)] == 0) {
      int base = block_base[static_cast<size_t>(s)];
      lbl[static_cast<size_t>(s)] = base + block_used[static_cast<size_t>(base)]++;
    }
  auto apply = [&](const vertex& w) {
    vertex out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = static_cast<uint8_t>(lbl[w[i]]);
    return out;
  };
  map_out = lbl;
  return {apply(u), apply(v)};
}

}  // namespace

std::string canonical_pair::key() const {
  std::string s(x.begin(), x.end());
  s += '\x00';
  s.append(y.begin(), y.end());
  return s;
}

canonical_pair canonicalize_pair(const frequency_vector& a, const vertex& x, const vertex& y) {
  std::vector<int> m1, m2;
  auto c1 = apply_first_occurrence(a, x, y, m1);
  auto c2 = apply_first_occurrence(a, y, x, m2);
  canonical_pair out;
  bool take_second;
  if (c1.first != c2.first)
    take_second = c2.first < c1.first;
  else
    take_second = c2.second < c1.second;
  if (take_second) {
    out.x = c2.first;
    out.y = c2.second;
    out.relabel = m2;
    out.reversed = true;
  } else {
    out.x = c1.first;
    out.y = c1.second;
    out.relabel = m1;
    out.reversed = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ham_lab

ham_lab::ham_lab(lab_options opt) : opt_(std::move(opt)) {}

const flip_graph& ham_lab::graph(const frequency_vector& a) {
  std::lock_guard<std::mutex> lock(graphs_mutex_);
  auto it = graphs_.find(a.str());
  if (it == graphs_.end()) {
    auto g = std::make_unique<flip_graph>(build_graph(a, opt_.cap));
    it = graphs_.emplace(a.str(), std::move(g)).first;
  }
  return *it->second;
}

namespace {

std::string cache_file_name(const frequency_vector& a, const canonical_pair& cp) {
  std::string name = "a";
  std::string parts = a.str();
  for (char& c : parts)
    if (c == ',') c = '-';
  name += parts;
  name += '_';
  static const char* hexd = "0123456789abcdef";
  for (uint8_t s : cp.x) name += hexd[s & 0xf];
  name += '-';
  for (uint8_t s : cp.y) name += hexd[s & 0xf];
  name += ".cert";
  return name;
}

}  // namespace

std::optional<ham_path> ham_lab::cache_get(const frequency_vector& a, const vertex& x,
                                           const vertex& y) {
  if (opt_.cache_dir.empty()) return std::nullopt;
  canonical_pair cp = canonicalize_pair(a, x, y);
  std::filesystem::path file = std::filesystem::path(opt_.cache_dir) / cache_file_name(a, cp);
  std::string text;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    ham_path cert = from_text(text);
    if (cert.a != a || cert.start != cp.x) return std::nullopt;
    // undo the relabeling: relabel maps old->new, invert it
    std::vector<int> inv(cp.relabel.size(), 0);
    for (size_t old = 1; old < cp.relabel.size(); ++old)
      inv[static_cast<size_t>(cp.relabel[old])] = static_cast<int>(old);
    for (auto& s : cert.start) s = static_cast<uint8_t>(inv[s]);
    if (cp.reversed) cert = cert.reversed();
    if (cert.start != x || cert.end() != y) return std::nullopt;
    return cert;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ham_lab::cache_put(const frequency_vector& a, const ham_path& cert) {
  if (opt_.cache_dir.empty() || cert.cycle) return;
  canonical_pair cp = canonicalize_pair(a, cert.start, cert.end());
  ham_path canon = cp.reversed ? cert.reversed() : cert;
  for (auto& s : canon.start) s = static_cast<uint8_t>(cp.relabel[s]);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  std::error_code ec;
  std::filesystem::create_directories(opt_.cache_dir, ec);
  std::filesystem::path file = std::filesystem::path(opt_.cache_dir) / cache_file_name(a, cp);
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << to_text(canon);
  }
  std::filesystem::rename(tmp, file, ec);
}

path_outcome ham_lab::search_pair(const flip_graph& g, const vertex& x, const vertex& y,
                                  std::atomic<bool>* cancel) {
  path_outcome out;
  if (auto cached = cache_get(g.a, x, y)) {
    out.status = search_status::found;
    out.cert = std::move(*cached);
    return out;
  }
  search_options sopt;
  sopt.timeout_seconds = opt_.timeout_seconds;
  sopt.cancel = cancel;
  search_result res = ham_path_search(g, g.id_of(x), g.id_of(y), sopt);
  out.status = res.status;
  out.nodes = res.nodes;
  if (res.status == search_status::found) {
    out.cert = path_from_ids(g, res.path, false);
    cache_put(g.a, out.cert);
  }
  return out;
}

path_outcome ham_lab::find_ham_path(const frequency_vector& a, const vertex& x, const vertex& y) {
  if (x == y) throw error("find_ham_path requires distinct endpoints");
  if (!vertex_in(x, a) || !vertex_in(y, a)) throw error("endpoint outside Pi(a)");
  const flip_graph& g = graph(a);
  return search_pair(g, x, y, nullptr);
}

path_outcome ham_lab::find_ham_cycle(const frequency_vector& a) {
  path_outcome out;
  if (a.parts() == std::vector<int>{1, 1}) {
    // the single edge counts as a cycle
    out.status = search_status::found;
    out.cert.a = a;
    out.cert.cycle = true;
    out.cert.start = {1, 2};
    out.cert.flips = {2, 2};
    return out;
  }
  const flip_graph& g = graph(a);
  bool saw_timeout = false;
  const int32_t v0 = 0;
  for (const int32_t* p = g.nbr_begin(v0); p != g.nbr_end(v0); ++p) {
    search_options sopt;
    sopt.timeout_seconds = opt_.timeout_seconds;
    search_result res = ham_path_search(g, v0, *p, sopt);
    out.nodes += res.nodes;
    if (res.status == search_status::found) {
      out.status = search_status::found;
      out.cert = path_from_ids(g, res.path, true);
      return out;
    }
    if (res.status == search_status::timeout) saw_timeout = true;
  }
  out.status = saw_timeout ? search_status::timeout : search_status::none;
  return out;
}

// ---------------------------------------------------------------------------
// Pair families and property checks.

namespace {

bool all_ones(const frequency_vector& a) {
  for (int i = 1; i <= a.k(); ++i)
    if (a.part(i) != 1) return false;
  return true;
}

bool is_balanced_pair(const frequency_vector& a) { return a.k() == 2 && a.part(1) == a.part(2); }

// Orbit key for a=(alpha,alpha): class pattern + Hamming distance of the
// strings with the first entry dropped (the coordinate-permutation argument).
std::string aa_key(const vertex& x, const vertex& y) {
  int d = 0;
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i] != y[i]) ++d;
  char cl = (x[0] == y[0]) ? 's' : 'x';
  return std::string("aa") + cl + ":" + std::to_string(d);
}

int pq_value_p(int ell, int s, int t) { return (t == s || t == ell) ? ell : t; }

}  // namespace

std::vector<std::pair<vertex, vertex>> ham_lab::pair_family(const frequency_vector& a,
                                                            property_kind p, bool use_reduction) {
  const flip_graph& g = graph(a);
  const auto& V = g.verts;
  const int32_t N = static_cast<int32_t>(V.size());
  std::vector<std::pair<vertex, vertex>> out;
  std::unordered_set<std::string> seen;
  bool aa = is_balanced_pair(a);

  auto push = [&](const vertex& x, const vertex& y) {
    std::string key;
    if (use_reduction) {
      key = aa ? aa_key(x, y) : canonicalize_pair(a, x, y).key();
    } else {
      // unordered dedupe only
      std::string sx(x.begin(), x.end()), sy(y.begin(), y.end());
      key = std::min(sx, sy) + '\x00' + std::max(sx, sy);
    }
    if (seen.insert(key).second) out.emplace_back(x, y);
  };

  switch (p) {
    case property_kind::C:
      break;  // no pair family
    case property_kind::P:
    case property_kind::H:
      for (int32_t i = 0; i < N; ++i)
        for (int32_t j = i + 1; j < N; ++j) push(V[i], V[j]);
      break;
    case property_kind::E:
      for (int32_t i = 0; i < N; ++i)
        for (const int32_t* q = g.nbr_begin(i); q != g.nbr_end(i); ++q)
          if (i < *q) push(V[i], V[*q]);
      break;
    case property_kind::L: {
      if (all_ones(a)) {
        std::vector<int> par(N);
        for (int32_t i = 0; i < N; ++i) par[i] = word_inversion_parity(V[i]);
        for (int32_t i = 0; i < N; ++i)
          for (int32_t j = i + 1; j < N; ++j)
            if (par[i] != par[j]) push(V[i], V[j]);
      } else if (a.k() == 2) {
        for (int32_t i = 0; i < N; ++i)
          for (int32_t j = 0; j < N; ++j)
            if (V[i][0] == 1 && V[j][0] == 2) push(V[i], V[j]);
      }
      // non-bipartite: empty family, handled in check_property
      break;
    }
    case property_kind::L1:
      for (int32_t i = 0; i < N; ++i) {
        if (V[i][0] != 1) continue;
        for (int32_t j = 0; j < N; ++j)
          if (V[j][0] != 1) push(V[i], V[j]);
      }
      break;
    case property_kind::L12: {
      for (int ell : {3, 4}) {
        if (ell > a.k()) continue;
        for (int s = 1; s <= 2; ++s)
          for (int t : {1, 2, ell}) {
            int pv = pq_value_p(ell, s, t);
            int qv = s;
            for (int32_t i = 0; i < N; ++i) {
              if (V[i][0] != s) continue;
              for (int32_t j = 0; j < N; ++j) {
                if (j == i || V[j][0] != t) continue;
                bool ok = false;
                for (size_t pos = 1; pos < V[i].size() && !ok; ++pos)
                  ok = V[i][pos] == pv && V[j][pos] == qv;
                if (ok) push(V[i], V[j]);
              }
            }
          }
      }
      break;
    }
  }
  return out;
}

property_report ham_lab::check_property(const frequency_vector& a, property_kind p,
                                        bool use_reduction) {
  property_report rep;
  rep.kind = p;
  const flip_graph& g = graph(a);

  if (p == property_kind::C) {
    path_outcome out = find_ham_cycle(a);
    rep.pairs_total = rep.pairs_checked = 1;
    rep.holds = out.status == search_status::found;
    rep.definitive = out.status != search_status::timeout;
    return rep;
  }
  if (p == property_kind::L && a.k() >= 3 && !all_ones(a)) {
    rep.holds = false;
    rep.definitive = true;
    rep.note = "not bipartite (contains G(2,1,1), which has an odd cycle)";
    return rep;
  }

  auto pairs = pair_family(a, p, use_reduction);
  rep.pairs_total = static_cast<long long>(pairs.size());
  if (pairs.empty()) {
    rep.holds = p != property_kind::P;  // vacuous families hold; P needs a witness pair
    if (p == property_kind::P && g.verts.size() == 1) rep.holds = true;
    return rep;
  }

  bool existential = (p == property_kind::P);
  std::atomic<bool> stop{false};
  std::atomic<long long> next{0};
  std::atomic<long long> done{0};
  std::vector<int> results(pairs.size(), -1);  // -1 pending, 0 none, 1 found, 2 timeout
  int nthreads = std::max(1, opt_.threads);
  auto worker = [&]() {
    while (true) {
      long long i = next.fetch_add(1);
      if (i >= static_cast<long long>(pairs.size())) return;
      if (stop.load()) return;
      path_outcome out = search_pair(g, pairs[static_cast<size_t>(i)].first,
                                     pairs[static_cast<size_t>(i)].second, &stop);
      int r = out.status == search_status::found ? 1
              : out.status == search_status::none ? 0
                                                  : 2;
      results[static_cast<size_t>(i)] = r;
      long long d = done.fetch_add(1) + 1;
      if (opt_.progress && (d % 256 == 0)) {
        std::fprintf(stderr, "\r[%s %s] %lld/%zu", a.str().c_str(), property_name(p).c_str(), d,
                     pairs.size());
        std::fflush(stderr);
      }
      if (!existential && r == 0) stop.store(true);
      if (existential && r == 1) stop.store(true);
    }
  };
  std::vector<std::thread> threads;
  for (int i = 1; i < nthreads; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (opt_.progress) std::fprintf(stderr, "\r");

  long long checked = 0;
  bool any_timeout = false;
  long long first_fail = -1, first_found = -1;
  for (size_t i = 0; i < results.size(); ++i) {
    if (results[i] >= 0) ++checked;
    if (results[i] == 2) any_timeout = true;
    if (results[i] == 0 && first_fail < 0) first_fail = static_cast<long long>(i);
    if (results[i] == 1 && first_found < 0) first_found = static_cast<long long>(i);
  }
  rep.pairs_checked = checked;
  if (existential) {
    rep.holds = first_found >= 0;
    rep.definitive = rep.holds || (!any_timeout && checked == rep.pairs_total);
  } else {
    if (first_fail >= 0) {
      rep.holds = false;
      rep.definitive = true;
      rep.counterexample = pairs[static_cast<size_t>(first_fail)];
    } else if (any_timeout || checked < rep.pairs_total) {
      rep.holds = false;
      rep.definitive = false;
      rep.note = "timeout before a verdict";
    } else {
      rep.holds = true;
      rep.definitive = true;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Table 1.

std::vector<frequency_vector> partitions_of(int n) {
  std::vector<frequency_vector> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<table1_row> table1_report(
    ham_lab& lab, int max_n, const std::function<bool(const frequency_vector&)>& cycle_provider) {
  std::vector<table1_row> rows;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& a : partitions_of(n)) {
      if (a.k() < 2) continue;
      int d = delta(a);
      if (d != 0 && d != 1) continue;
      table1_row row;
      row.a = a;
      row.delta = d;
      row.vertices = vertex_count(a);
      if (n <= 8) {
        property_report rH = lab.check_property(a, property_kind::H);
        if (!rH.definitive) {
          row.verdict = "unknown (timeout)";
        } else if (rH.holds) {
          row.verdict = "H";
          row.pairs_checked = rH.pairs_total;
        } else {
          property_report rL1 = lab.check_property(a, property_kind::L1);
          if (!rL1.definitive) {
            row.verdict = "unknown (timeout)";
          } else if (rL1.holds) {
            row.verdict = a.k() == 2 ? "L1=L but not H" : "L1 but not H";
            row.pairs_checked = rL1.pairs_total;
          } else {
            property_report rE = lab.check_property(a, property_kind::E);
            if (!rE.definitive) {
              row.verdict = "unknown (timeout)";
            } else if (rE.holds) {
              row.verdict = "E but not L";
              row.pairs_checked = rE.pairs_total;
            } else {
              property_report rC = lab.check_property(a, property_kind::C);
              row.verdict = !rC.definitive ? "unknown (timeout)" : (rC.holds ? "C" : "P?");
            }
          }
        }
      } else {
        if (cycle_provider) {
          row.verdict = cycle_provider(a) ? "C (cycle verified)" : "cycle not verified";
        } else {
          row.verdict = "(cycle existence not tested)";
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace stargray
