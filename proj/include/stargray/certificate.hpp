#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stargray/flip_graph.hpp"
#include "stargray/partition.hpp"

namespace stargray {

/// A Hamilton path/cycle certificate: start vertex plus flip positions.
/// For full-form certificates a flip at position p transposes entries 1 and p.
/// For middle-form certificates (reparametrized strings over {0..k}) a flip
/// rewrites the single entry at position p.
struct ham_path {
  frequency_vector a;
  vertex start;
  std::vector<int> flips;
  bool cycle = false;        // when true, the last flip returns to start
  bool middle_form = false;  // vertices are length-(2n-1) strings over {0..k}

  size_t vertex_count() const { return flips.size() + (cycle ? 0 : 1); }
  std::vector<vertex> vertices() const;  // cycle: start omitted at the end
  vertex end() const;
  ham_path reversed() const;
};

enum class expectation { path, cycle, laceable_endpoints, l1_endpoints };

struct verify_report {
  bool ok = false;
  std::string message;          // empty when ok
  long long failing_index = -1; // first failing flip index, when applicable
};

/// Checks flip validity, vertex coverage and distinctness, closure for cycles,
/// and endpoint class conditions. O(n * |Pi|).
verify_report verify(const ham_path& cert, expectation expect);

/// Convenience: verify as path with prescribed endpoints.
verify_report verify_path_between(const ham_path& cert, const vertex& x, const vertex& y);

std::string to_text(const ham_path& cert);
std::string to_json(const ham_path& cert);
std::string to_flips(const ham_path& cert);
ham_path from_text(const std::string& text);
ham_path from_json(const std::string& text);

}  // namespace stargray
