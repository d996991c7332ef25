#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stargray/partition.hpp"

namespace stargray {

/// A multiset permutation: length-n string over {1..k}, symbol i appearing a_i times.
/// Positions are 1-indexed in all interfaces (entry i lives at sym[i-1]).
using vertex = std::vector<uint8_t>;

std::string vertex_str(const vertex& x, int k);
vertex parse_vertex(const std::string& text, const frequency_vector& a);

bool vertex_in(const vertex& x, const frequency_vector& a);

/// Swap entries at positions 1 and pos (pos in 2..n).
vertex star_flip(const vertex& x, int pos);

/// One neighbor per position i>1 with x_i != x_1.
std::vector<vertex> star_neighbors(const vertex& x);

/// All of Pi(a) in lexicographic order. Throws when the count exceeds cap.
std::vector<vertex> enumerate_vertices(const frequency_vector& a, size_t cap = 2000000);

/// Inversion parity for permutations (all a_i = 1). 0 = even, 1 = odd.
int inversion_parity(const vertex& x, const frequency_vector& a);

/// Parity of the plain inversion count of an arbitrary word.
int word_inversion_parity(const vertex& w);

/// Lazy view of G(a) restricted by fixing symbols at positions > 1.
/// The reduction deletes the fixed positions, decrements counts, and relabels
/// symbols canonically by (new frequency desc, old symbol asc).
class subgraph_view {
 public:
  subgraph_view(frequency_vector base, std::vector<std::pair<int, int>> fixed);

  const frequency_vector& base() const { return base_; }
  const frequency_vector& reduced() const { return reduced_; }
  const std::vector<std::pair<int, int>>& fixed() const { return fixed_; }

  bool contains(const vertex& x) const;
  /// Old symbol -> new symbol (1..k').
  int relabel(int old_symbol) const { return relabel_.at(static_cast<size_t>(old_symbol)); }
  int unrelabel(int new_symbol) const { return unrelabel_.at(static_cast<size_t>(new_symbol)); }

  vertex reduce(const vertex& x) const;
  vertex lift(const vertex& y) const;
  /// Position in the reduced string -> position in the base string.
  int lift_pos(int reduced_pos) const;

 private:
  frequency_vector base_;
  std::vector<std::pair<int, int>> fixed_;  // sorted by position
  frequency_vector reduced_;
  std::vector<int> relabel_;    // [0..k], relabel_[old] = new
  std::vector<int> unrelabel_;  // [0..k'], unrelabel_[new] = old
};

/// Materialized flip graph for exhaustive work. Vertex ids index `verts` (lex order).
struct flip_graph {
  frequency_vector a;
  std::vector<vertex> verts;
  std::vector<int32_t> adj;      // CSR neighbour lists, each sorted
  std::vector<int32_t> adj_off;  // size verts.size()+1
  std::unordered_map<std::string, int32_t> index;

  int degree(int32_t v) const { return adj_off[v + 1] - adj_off[v]; }
  const int32_t* nbr_begin(int32_t v) const { return adj.data() + adj_off[v]; }
  const int32_t* nbr_end(int32_t v) const { return adj.data() + adj_off[v + 1]; }
  int32_t id_of(const vertex& x) const;
};

flip_graph build_graph(const frequency_vector& a, size_t cap = 2000000);

/// DOT export, colored by first symbol. Rejects graphs over 500 vertices.
std::string to_dot(const flip_graph& g);

}  // namespace stargray
