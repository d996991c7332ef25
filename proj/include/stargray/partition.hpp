#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace stargray {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Frequency vector a = (a_1,...,a_k), non-increasing positive parts.
/// Canonical by construction: every constructor sorts and strips zeros.
class frequency_vector {
 public:
  frequency_vector() = default;
  explicit frequency_vector(std::vector<int> parts);

  int k() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int part(int i) const { return parts_.at(static_cast<size_t>(i) - 1); }  // 1-indexed
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const frequency_vector& o) const { return parts_ == o.parts_; }
  bool operator!=(const frequency_vector& o) const { return parts_ != o.parts_; }
  bool operator<(const frequency_vector& o) const { return parts_ < o.parts_; }

  /// "4,3,1" form; also accepts "3^4" exponent shorthand mixed with commas.
  static frequency_vector parse(const std::string& text);
  std::string str() const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

enum class regime { negative, zero, positive };

struct classification {
  regime r;
  int delta;
  bool hamilton_cycle_possible;
  bool hamilton_path_possible;
};

/// Delta(a) = n - 2*a_1.
int delta(const frequency_vector& a);

/// phi: sort non-increasingly, drop zeros. Rejects all-zero input.
frequency_vector sort_desc(const std::vector<int>& seq);

/// All covers b of a: decrement one decrementable part (a_i > a_{i+1}, a_{k+1}=0).
/// May return k=1 partitions; zeros are dropped.
std::vector<frequency_vector> covers(const frequency_vector& a);

/// Partition class sizes s_1 >= ... >= s_k (multinomials over n-1 positions).
std::vector<mpz_class> class_sizes(const frequency_vector& a);

/// multinomial(n; a_1..a_k) = |Pi(a)|.
mpz_class vertex_count(const frequency_vector& a);

/// Sign-of-Delta regimes with the negative-side verdicts.
classification classify(const frequency_vector& a);

}  // namespace stargray
