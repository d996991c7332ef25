#pragma once

#include <optional>

#include "stargray/certificate.hpp"
#include "stargray/flip_graph.hpp"
#include "stargray/ham_lab.hpp"
#include "stargray/matching.hpp"
#include "stargray/partition.hpp"

namespace stargray {

/// Recursive Hamilton-path construction over the partition lattice. Base cases
/// come from the exhaustive lab (with its disk cache); balanced two-symbol
/// instances with parts >= 5 come from the middle-levels engine. Every
/// composed certificate is verified before it is returned.
class composer {
 public:
  explicit composer(ham_lab& lab) : lab_(lab) {}

  /// Hamilton path from x to y in G(a). Throws when no such path exists or
  /// the instance cannot be served.
  ham_path path(const frequency_vector& a, const vertex& x, const vertex& y);

  /// Hamilton cycle in G(a) (deterministic start).
  ham_path cycle(const frequency_vector& a);

  /// Theorem-dispatch front end: classifier gate, default endpoints.
  ham_path gray_code(const frequency_vector& a, std::optional<vertex> x, std::optional<vertex> y,
                     bool cycle_mode);

  /// Set when a Delta=0 instance outside the computer-verified base family was
  /// served by search (conjecture-dependent coverage).
  bool used_conditional() const { return conditional_; }
  void reset_flags() { conditional_ = false; }

  ham_lab& lab() { return lab_; }

 private:
  ham_path lab_path(const frequency_vector& a, const vertex& x, const vertex& y);
  ham_path via_view(const subgraph_view& view, const vertex& u, const vertex& v);
  ham_path dispatch(const frequency_vector& a, const vertex& x, const vertex& y);

  ham_path compose_H2(const frequency_vector& a, const vertex& x, const vertex& y);
  // variant: 0 plain H1, 1 = (alpha,alpha-1,2), 2 = (alpha,alpha-1,1,1)
  ham_path compose_H1_family(const frequency_vector& a, const vertex& x, const vertex& y,
                             int variant);
  ham_path compose_H2p(const frequency_vector& a, const vertex& x, const vertex& y);
  ham_path compose_H2pp(const frequency_vector& a, const vertex& x, const vertex& y);
  ham_path compose_L12(const frequency_vector& a, const vertex& x, const vertex& y);
  ham_path compose_T1k(const frequency_vector& a, const vertex& x, const vertex& y);
  ham_path compose_Tp(const frequency_vector& a, const vertex& x, const vertex& y);

  ham_lab& lab_;
  bool conditional_ = false;
};

/// Deterministic default endpoints for `gen` without --from/--to.
std::pair<vertex, vertex> default_endpoints(const frequency_vector& a);

}  // namespace stargray
