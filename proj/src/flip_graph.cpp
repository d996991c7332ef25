#include "stargray/flip_graph.hpp"

#include <algorithm>
#include <sstream>

namespace stargray {

std::string vertex_str(const vertex& x, int k) {
  std::string out;
  if (k <= 9) {
    for (uint8_t s : x) out += static_cast<char>('0' + s);
  } else {
    for (size_t i = 0; i < x.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(static_cast<int>(x[i]));
    }
  }
  return out;
}

vertex parse_vertex(const std::string& text, const frequency_vector& a) {
  vertex x;
  if (a.k() <= 9 && text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw error("bad vertex digit in '" + text + "'");
      x.push_back(static_cast<uint8_t>(c - '0'));
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) x.push_back(static_cast<uint8_t>(std::stoi(item)));
  }
  if (!vertex_in(x, a)) throw error("vertex '" + text + "' is not in Pi(" + a.str() + ")");
  return x;
}

bool vertex_in(const vertex& x, const frequency_vector& a) {
  if (static_cast<int>(x.size()) != a.n()) return false;
  std::vector<int> cnt(static_cast<size_t>(a.k()) + 1, 0);
  for (uint8_t s : x) {
    if (s < 1 || s > a.k()) return false;
    cnt[s]++;
  }
  for (int i = 1; i <= a.k(); ++i)
    if (cnt[static_cast<size_t>(i)] != a.part(i)) return false;
  return true;
}

vertex star_flip(const vertex& x, int pos) {
  vertex y = x;
  std::swap(y[0], y[static_cast<size_t>(pos) - 1]);
  return y;
}

std::vector<vertex> star_neighbors(const vertex& x) {
  std::vector<vertex> out;
  for (size_t i = 1; i < x.size(); ++i) {
    if (x[i] != x[0]) out.push_back(star_flip(x, static_cast<int>(i) + 1));
  }
  return out;
}

std::vector<vertex> enumerate_vertices(const frequency_vector& a, size_t cap) {
  if (a.k() < 2) throw error("enumerate requires k >= 2");
  mpz_class total = vertex_count(a);
  if (total > static_cast<unsigned long>(cap))
    throw error("instance " + a.str() + " exceeds vertex cap (" + total.get_str() + " > " +
                std::to_string(cap) + ")");
  vertex x;
  for (int s = 1; s <= a.k(); ++s)
    for (int c = 0; c < a.part(s); ++c) x.push_back(static_cast<uint8_t>(s));
  std::vector<vertex> out;
  out.reserve(total.get_ui());
  do {
    out.push_back(x);
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

int word_inversion_parity(const vertex& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) inv ^= 1;
  return inv;
}

int inversion_parity(const vertex& x, const frequency_vector& a) {
  for (int i = 1; i <= a.k(); ++i)
    if (a.part(i) != 1) throw error("inversion parity asks all a_i = 1 (Lemma: not bipartite otherwise)");
  return word_inversion_parity(x);
}

subgraph_view::subgraph_view(frequency_vector base, std::vector<std::pair<int, int>> fixed)
    : base_(std::move(base)), fixed_(std::move(fixed)) {
  std::sort(fixed_.begin(), fixed_.end());
  std::vector<int> counts(static_cast<size_t>(base_.k()) + 1, 0);
  for (int s = 1; s <= base_.k(); ++s) counts[static_cast<size_t>(s)] = base_.part(s);
  for (size_t i = 0; i < fixed_.size(); ++i) {
    auto [pos, sym] = fixed_[i];
    if (pos <= 1 || pos > base_.n()) throw error("restrict: position out of range");
    if (i > 0 && fixed_[i - 1].first == pos) throw error("restrict: duplicate position");
    if (sym < 1 || sym > base_.k()) throw error("restrict: bad symbol");
    if (counts[static_cast<size_t>(sym)] == 0) throw error("restrict: symbol count exhausted");
    counts[static_cast<size_t>(sym)]--;
  }
  // Relabel surviving symbols by (new frequency desc, old symbol asc).
  std::vector<int> order;
  for (int s = 1; s <= base_.k(); ++s)
    if (counts[static_cast<size_t>(s)] > 0) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return counts[static_cast<size_t>(l)] > counts[static_cast<size_t>(r)];
  });
  relabel_.assign(static_cast<size_t>(base_.k()) + 1, 0);
  unrelabel_.assign(order.size() + 1, 0);
  std::vector<int> reduced_parts;
  for (size_t i = 0; i < order.size(); ++i) {
    relabel_[static_cast<size_t>(order[i])] = static_cast<int>(i) + 1;
    unrelabel_[i + 1] = order[i];
    reduced_parts.push_back(counts[static_cast<size_t>(order[i])]);
  }
  reduced_ = frequency_vector(reduced_parts);
}

bool subgraph_view::contains(const vertex& x) const {
  for (auto [pos, sym] : fixed_)
    if (x[static_cast<size_t>(pos) - 1] != sym) return false;
  return true;
}

vertex subgraph_view::reduce(const vertex& x) const {
  vertex y;
  y.reserve(x.size() - fixed_.size());
  size_t fi = 0;
  for (int pos = 1; pos <= base_.n(); ++pos) {
    if (fi < fixed_.size() && fixed_[fi].first == pos) {
      if (x[static_cast<size_t>(pos) - 1] != fixed_[fi].second)
        throw error("reduce: vertex not in view");
      ++fi;
      continue;
    }
    int nl = relabel_[x[static_cast<size_t>(pos) - 1]];
    if (nl == 0) throw error("reduce: symbol eliminated by view");
    y.push_back(static_cast<uint8_t>(nl));
  }
  return y;
}

vertex subgraph_view::lift(const vertex& y) const {
  vertex x;
  x.reserve(y.size() + fixed_.size());
  size_t fi = 0, yi = 0;
  for (int pos = 1; pos <= base_.n(); ++pos) {
    if (fi < fixed_.size() && fixed_[fi].first == pos) {
      x.push_back(static_cast<uint8_t>(fixed_[fi].second));
      ++fi;
    } else {
      x.push_back(static_cast<uint8_t>(unrelabel_[y[yi]]));
      ++yi;
    }
  }
  return x;
}

int subgraph_view::lift_pos(int reduced_pos) const {
  int pos = reduced_pos;
  for (auto [fpos, fsym] : fixed_) {
    (void)fsym;
    if (fpos <= pos) ++pos;
  }
  return pos;
}

int32_t flip_graph::id_of(const vertex& x) const {
  auto it = index.find(std::string(x.begin(), x.end()));
  if (it == index.end()) throw error("vertex not in graph");
  return it->second;
}

flip_graph build_graph(const frequency_vector& a, size_t cap) {
  flip_graph g;
  g.a = a;
  g.verts = enumerate_vertices(a, cap);
  g.index.reserve(g.verts.size() * 2);
  for (size_t i = 0; i < g.verts.size(); ++i)
    g.index.emplace(std::string(g.verts[i].begin(), g.verts[i].end()), static_cast<int32_t>(i));
  g.adj_off.assign(g.verts.size() + 1, 0);
  std::vector<std::vector<int32_t>> tmp(g.verts.size());
  for (size_t i = 0; i < g.verts.size(); ++i) {
    const vertex& x = g.verts[i];
    for (size_t p = 1; p < x.size(); ++p) {
      if (x[p] == x[0]) continue;
      vertex y = x;
      std::swap(y[0], y[p]);
      tmp[i].push_back(g.id_of(y));
    }
    std::sort(tmp[i].begin(), tmp[i].end());
    tmp[i].erase(std::unique(tmp[i].begin(), tmp[i].end()), tmp[i].end());
  }
  for (size_t i = 0; i < g.verts.size(); ++i)
    g.adj_off[i + 1] = g.adj_off[i] + static_cast<int32_t>(tmp[i].size());
  g.adj.reserve(static_cast<size_t>(g.adj_off.back()));
  for (auto& row : tmp) g.adj.insert(g.adj.end(), row.begin(), row.end());
  return g;
}

std::string to_dot(const flip_graph& g) {
  if (g.verts.size() > 500) throw error("DOT export limited to 500 vertices");
  static const char* palette[] = {"lightblue", "salmon",    "palegreen", "gold",     "plum",
                                  "tan",       "lightgray", "cyan",      "orchid",   "wheat"};
  std::ostringstream os;
  os << "graph G {\n  node [style=filled];\n";
  for (size_t i = 0; i < g.verts.size(); ++i) {
    int c = (g.verts[i][0] - 1) % 10;
    os << "  v" << i << " [label=\"" << vertex_str(g.verts[i], g.a.k()) << "\", fillcolor=\""
       << palette[c] << "\"];\n";
  }
  for (size_t i = 0; i < g.verts.size(); ++i)
    for (const int32_t* p = g.nbr_begin(static_cast<int32_t>(i));
         p != g.nbr_end(static_cast<int32_t>(i)); ++p)
      if (static_cast<int32_t>(i) < *p) os << "  v" << i << " -- v" << *p << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace stargray
