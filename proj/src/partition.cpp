#include "stargray/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stargray {

frequency_vector::frequency_vector(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw error("negative part in frequency vector");
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) throw error("empty partition: no positive part");
  parts_ = std::move(parts);
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

frequency_vector frequency_vector::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw error("bad partition syntax: '" + text + "'");
    size_t caret = item.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(item));
      } else {
        int base = std::stoi(item.substr(0, caret));
        int rep = std::stoi(item.substr(caret + 1));
        if (rep < 0) throw error("bad exponent in '" + item + "'");
        for (int i = 0; i < rep; ++i) parts.push_back(base);
      }
    } catch (const std::invalid_argument&) {
      throw error("bad partition syntax: '" + text + "'");
    } catch (const std::out_of_range&) {
      throw error("partition entry out of range: '" + item + "'");
    }
  }
  if (parts.empty()) throw error("empty partition string");
  return frequency_vector(std::move(parts));
}

std::string frequency_vector::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int delta(const frequency_vector& a) { return a.n() - 2 * a.part(1); }

frequency_vector sort_desc(const std::vector<int>& seq) { return frequency_vector(seq); }

std::vector<frequency_vector> covers(const frequency_vector& a) {
  std::vector<frequency_vector> out;
  const auto& p = a.parts();
  for (int i = 0; i < a.k(); ++i) {
    int next = (i + 1 < a.k()) ? p[i + 1] : 0;
    if (p[i] > next) {
      std::vector<int> q = p;
      q[i] -= 1;
      if (q[i] == 0) q.erase(q.begin() + i);
      if (q.empty()) continue;  // a=(1) has no cover
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

std::vector<mpz_class> class_sizes(const frequency_vector& a) {
  if (a.k() < 2) throw error("class_sizes requires k >= 2");
  std::vector<mpz_class> out;
  out.reserve(a.k());
  for (int i = 1; i <= a.k(); ++i) {
    mpz_class s = 1;
    // multinomial(n-1; ..., a_i - 1, ...)
    int remaining = a.n() - 1;
    for (int j = 1; j <= a.k(); ++j) {
      int c = a.part(j) - (j == i ? 1 : 0);
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(remaining),
                   static_cast<unsigned long>(c));
      s *= binom;
      remaining -= c;
    }
    out.push_back(s);
  }
  return out;
}

mpz_class vertex_count(const frequency_vector& a) {
  mpz_class total = 1;
  int remaining = a.n();
  for (int j = 1; j <= a.k(); ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(remaining),
                 static_cast<unsigned long>(a.part(j)));
    total *= binom;
    remaining -= a.part(j);
  }
  return total;
}

classification classify(const frequency_vector& a) {
  if (a.k() < 2) throw error("classify requires k >= 2");
  classification c;
  c.delta = delta(a);
  if (c.delta < 0) {
    c.r = regime::negative;
    c.hamilton_cycle_possible = false;
    c.hamilton_path_possible = (a.parts() == std::vector<int>{2, 1});
  } else {
    c.r = (c.delta == 0) ? regime::zero : regime::positive;
    c.hamilton_cycle_possible = true;
    c.hamilton_path_possible = true;
  }
  return c;
}

}  // namespace stargray
