#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stargray/certificate.hpp"
#include "stargray/flip_graph.hpp"
#include "stargray/partition.hpp"

namespace stargray {

enum class property_kind { C, P, E, L, L1, L12, H };
std::string property_name(property_kind p);
std::optional<property_kind> parse_property(const std::string& s);

enum class search_status { found, none, timeout };

struct search_options {
  long long node_budget = -1;      // expansions; -1 unlimited
  double timeout_seconds = -1;     // wall clock; -1 unlimited
  std::atomic<bool>* cancel = nullptr;
};

struct search_result {
  search_status status = search_status::none;
  std::vector<int32_t> path;
  long long nodes = 0;
};

/// Exhaustive Hamilton path search between two vertex ids. Backtracking with
/// least-degree-first successor ordering, a connectivity/degree cut, per-class
/// counting bounds, and (for Delta=0 instances with endpoints in different
/// first-symbol classes) the hard alternation constraint.
search_result ham_path_search(const flip_graph& g, int32_t s, int32_t t,
                              const search_options& opt = {});

struct path_outcome {
  search_status status = search_status::none;
  ham_path cert;  // valid when status == found
  long long nodes = 0;
};

struct property_report {
  property_kind kind = property_kind::P;
  bool holds = false;
  bool definitive = true;  // false when a timeout/cap prevented a verdict
  long long pairs_total = 0;
  long long pairs_checked = 0;
  std::optional<std::pair<vertex, vertex>> counterexample;
  std::string note;
};

struct lab_options {
  size_t cap = 20000;
  double timeout_seconds = -1;
  int threads = 1;
  std::string cache_dir;  // empty disables the disk cache
  bool progress = false;
};

/// Canonical form of an endpoint pair under relabelings that permute
/// equal-frequency symbols (first-occurrence order, unordered pair).
struct canonical_pair {
  vertex x, y;
  std::vector<int> relabel;  // old symbol -> new symbol
  bool reversed = false;
  std::string key() const;
};
canonical_pair canonicalize_pair(const frequency_vector& a, const vertex& x, const vertex& y);

class ham_lab {
 public:
  explicit ham_lab(lab_options opt = {});

  lab_options& options() { return opt_; }
  const flip_graph& graph(const frequency_vector& a);

  path_outcome find_ham_path(const frequency_vector& a, const vertex& x, const vertex& y);
  path_outcome find_ham_cycle(const frequency_vector& a);

  property_report check_property(const frequency_vector& a, property_kind p,
                                 bool use_reduction = true);

  /// The definitionally required endpoint-pair family for a property, reduced
  /// modulo the automorphism group (exposed for tests).
  std::vector<std::pair<vertex, vertex>> pair_family(const frequency_vector& a, property_kind p,
                                                     bool use_reduction = true);

 private:
  path_outcome search_pair(const flip_graph& g, const vertex& x, const vertex& y,
                           std::atomic<bool>* cancel);
  std::optional<ham_path> cache_get(const frequency_vector& a, const vertex& x, const vertex& y);
  void cache_put(const frequency_vector& a, const ham_path& cert);

  lab_options opt_;
  std::mutex graphs_mutex_;
  std::map<std::string, std::unique_ptr<flip_graph>> graphs_;
  std::mutex cache_mutex_;
};

struct table1_row {
  frequency_vector a;
  int delta = 0;
  mpz_class vertices;
  std::string verdict;
  long long pairs_checked = 0;
};

/// Rows for all partitions with Delta in {0,1} and n <= max_n, in Table-1
/// order. Full property columns for n <= 8; n = 9 rows report cycle existence
/// via `cycle_provider` (a constructive source; may be null to skip them).
std::vector<table1_row> table1_report(
    ham_lab& lab, int max_n,
    const std::function<bool(const frequency_vector&)>& cycle_provider = nullptr);

/// All partitions of n (non-increasing), lexicographically descending.
std::vector<frequency_vector> partitions_of(int n);

}  // namespace stargray
