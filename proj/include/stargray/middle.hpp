#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "stargray/certificate.hpp"
#include "stargray/partition.hpp"

namespace stargray::middle {

/// Reparametrized strings: length 2n-1 over {0..k}, n zeros and n non-zero
/// symbols (a_i copies of symbol i) with one entry suppressed.
using word = std::vector<uint8_t>;

struct instance {
  frequency_vector a;  // non-zero symbol frequencies; n := a.n()
  int n = 0;
  int len = 0;  // 2n-1
  explicit instance(const frequency_vector& fv) : a(fv), n(fv.n()), len(2 * fv.n() - 1) {}
};

std::string word_str(const word& w);
word parse_word(const std::string& s);

/// Indicator bitstring: non-zero entries become 1.
word hat(const word& x);
bool is_dyck(const word& bits);

/// Membership in Pi_n(a)^-; fills the suppressed symbol when asked.
bool member(const word& x, const instance& inst, int* suppressed_out = nullptr);
int suppressed(const word& x, const instance& inst);

word rotate_left(const word& x, int l);

/// The unique shift l with a Dyck prefix (suppressed != 0) or Dyck suffix
/// (suppressed == 0) after rotation.
int shift_of(const word& x, const instance& inst);
/// Tree word t(x) of length 2n-2.
word tree_of(const word& x, const instance& inst);

word f_step(const word& x, const instance& inst);
word g_step(const word& x, const instance& inst);
/// Position (1-based) rewritten by f.
int f_flip_pos(const word& x, const instance& inst);

/// Suppressed root label of a D_n(a) tree word (s(x 0)).
int tree_suppressed(const word& t, const instance& inst);
/// Labeled tree rotation: b u 0 v -> u a v 0 with a the suppressed root label.
word rho_rotate(const word& t, const instance& inst);
std::vector<word> rho_orbit(const word& t, const instance& inst);
word canon_tree(const word& t, const instance& inst);

/// Minimum over vertices of the summed distances to all other vertices.
int potential(const word& t);

/// The cycle factor C_n(a), indexed by canonical labeled plane trees.
struct cycle_factor {
  instance inst;
  std::vector<word> reps;  // canonical class representatives, sorted
  std::unordered_map<std::string, int> rep_id;

  explicit cycle_factor(const instance& i) : inst(i) {}
  int id_of_tree(const word& t) const;
  int id_of_vertex(const word& v) const;  // cycle through any vertex of Pi^-
  std::vector<word> cycle_vertices(int id) const;
};

cycle_factor build_factor(const frequency_vector& a, size_t cap = 2000000);

/// Labeled gluing tuple (Eq. shapes x1=bc0u0v ... y2=b0au0v).
struct gluing_tuple {
  word x1, x2, x3, x4, y1, y2;
};

/// The 12-cycle (or 6-cycle when the two halves coincide) induced by a tuple.
/// Every consecutive pair (cyclically) differs in exactly one position.
std::vector<word> gluing_cycle(const gluing_tuple& t, const instance& inst);

/// Gluing pairs (x,y) = (110u0v, 101u0v) whose classes form a spanning tree on
/// plane trees, with potential(y) = potential(x) - 1, one pair per non-star
/// class. Deterministic: lexicographically smallest qualifying rooting.
std::vector<std::pair<word, word>> spanning_gluing_set(int n);

/// The explicit alternating path from x_1 to y_i (2i vertices plus the detour
/// when i >= n-1); Hamming distance d(x_1, y_i) = 2i-1. Verified on build.
std::vector<word> alternating_path(int n, int i);

/// h(x_1..x_{2n-1}) = (~x_{2n-2}, ..., ~x_1, ~x_{2n-1}); maps C_n onto itself.
word automorphism_h(const word& x);

/// Coordinate permutation (1-based, image[i] = target position of i) mapping
/// (x1,y1) onto (x2,y2); requires equal Hamming distances and weights.
std::vector<int> map_pair_coords(const word& x1, const word& y1, const word& x2, const word& y2);
word apply_coords(const std::vector<int>& perm, const word& x);

/// Hamilton path in G_n(n) between x (n-1 ones) and y (n ones), n >= 5.
/// Middle-form certificate over a = (n).
ham_path laceable_path(int n, const word& x, const word& y);

/// Hamilton cycle in G_n(n-1,1), n >= 4. Middle-form certificate.
ham_path cycle_m_prime(int n);

/// Full-form wrapper: Hamilton path in G(alpha,alpha) for alpha >= 5.
ham_path laceable_full(int alpha, const vertex& x, const vertex& y);

/// Factor summary for the CLI.
struct factor_summary {
  frequency_vector a;
  int n = 0;
  long long vertex_total = 0;
  struct entry {
    std::string rep;
    int orbit = 0;
    int potential = 0;
    long long cycle_length = 0;
  };
  std::vector<entry> cycles;
};
factor_summary summarize_factor(const frequency_vector& a, size_t cap = 2000000);

}  // namespace stargray::middle
