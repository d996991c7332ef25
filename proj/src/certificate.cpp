#include "stargray/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace stargray {

namespace {

frequency_vector middle_full_partition(const frequency_vector& a) {
  std::vector<int> parts = a.parts();
  parts.push_back(a.n());  // the zeros
  return frequency_vector(parts);
}

// Membership in Pi_n(a)^-: length 2n-1, one symbol occurrence suppressed.
bool middle_member(const vertex& x, const frequency_vector& a, int* suppressed = nullptr) {
  int n = a.n();
  if (static_cast<int>(x.size()) != 2 * n - 1) return false;
  std::vector<int> cnt(static_cast<size_t>(a.k()) + 1, 0);
  for (uint8_t s : x) {
    if (s > a.k()) return false;
    cnt[s]++;
  }
  int deficit = -1;
  if (cnt[0] == n - 1)
    deficit = 0;
  else if (cnt[0] != n)
    return false;
  for (int i = 1; i <= a.k(); ++i) {
    if (cnt[static_cast<size_t>(i)] == a.part(i) - 1) {
      if (deficit >= 0) return false;
      deficit = i;
    } else if (cnt[static_cast<size_t>(i)] != a.part(i)) {
      return false;
    }
  }
  if (deficit < 0) return false;
  if (suppressed) *suppressed = deficit;
  return true;
}

std::string mstr(const vertex& x) {
  std::string s;
  for (uint8_t c : x) s += static_cast<char>('0' + c);
  return s;
}

}  // namespace

std::vector<vertex> ham_path::vertices() const {
  std::vector<vertex> out;
  out.reserve(vertex_count());
  vertex cur = start;
  out.push_back(cur);
  size_t steps = flips.size() - (cycle ? 1 : 0);
  for (size_t i = 0; i < steps; ++i) {
    int p = flips[i];
    if (middle_form) {
      // the replacement symbol is forced: the suppressed one, or 0 if none
      int sup = 0;
      middle_member(cur, a, &sup);
      cur[static_cast<size_t>(p) - 1] = static_cast<uint8_t>(sup);
    } else {
      std::swap(cur[0], cur[static_cast<size_t>(p) - 1]);
    }
    out.push_back(cur);
  }
  return out;
}

vertex ham_path::end() const {
  if (cycle) return start;
  auto vs = vertices();
  return vs.back();
}

ham_path ham_path::reversed() const {
  if (cycle) throw error("reversing a cycle certificate is not supported");
  ham_path r;
  r.a = a;
  r.middle_form = middle_form;
  r.start = end();
  r.flips.assign(flips.rbegin(), flips.rend());
  return r;
}

verify_report verify(const ham_path& cert, expectation expect) {
  verify_report rep;
  const frequency_vector& a = cert.a;
  bool want_cycle = (expect == expectation::cycle);
  if (want_cycle != cert.cycle) {
    rep.message = "certificate kind mismatch";
    return rep;
  }

  mpz_class expected =
      cert.middle_form ? vertex_count(middle_full_partition(a)) : vertex_count(a);
  if (expected != static_cast<unsigned long>(cert.vertex_count())) {
    rep.message = "vertex count mismatch: have " + std::to_string(cert.vertex_count()) +
                  ", want " + expected.get_str();
    return rep;
  }

  // Walk flips, checking each step and collecting vertices.
  vertex cur = cert.start;
  if (cert.middle_form ? !middle_member(cur, a, nullptr) : !vertex_in(cur, a)) {
    rep.message = "start vertex outside the instance";
    return rep;
  }
  std::unordered_set<std::string> seen;
  seen.reserve(cert.vertex_count() * 2);
  seen.insert(std::string(cur.begin(), cur.end()));
  int n_positions = cert.middle_form ? 2 * a.n() - 1 : a.n();
  for (size_t i = 0; i < cert.flips.size(); ++i) {
    int p = cert.flips[i];
    int min_pos = cert.middle_form ? 1 : 2;
    if (p < min_pos || p > n_positions) {
      rep.message = "flip position out of range";
      rep.failing_index = static_cast<long long>(i);
      return rep;
    }
    if (cert.middle_form) {
      int sup = 0;
      middle_member(cur, a, &sup);
      uint8_t old = cur[static_cast<size_t>(p) - 1];
      if (old == static_cast<uint8_t>(sup)) {
        rep.message = "flip does not change the vertex";
        rep.failing_index = static_cast<long long>(i);
        return rep;
      }
      cur[static_cast<size_t>(p) - 1] = static_cast<uint8_t>(sup);
      if (!middle_member(cur, a, nullptr)) {
        rep.message = "flip leaves the vertex set";
        rep.failing_index = static_cast<long long>(i);
        return rep;
      }
    } else {
      if (cur[static_cast<size_t>(p) - 1] == cur[0]) {
        rep.message = "flip swaps equal symbols (not an edge)";
        rep.failing_index = static_cast<long long>(i);
        return rep;
      }
      std::swap(cur[0], cur[static_cast<size_t>(p) - 1]);
    }
    bool last = (i + 1 == cert.flips.size());
    if (cert.cycle && last) {
      if (cur != cert.start) {
        rep.message = "closure flip does not return to start";
        rep.failing_index = static_cast<long long>(i);
        return rep;
      }
    } else if (!seen.insert(std::string(cur.begin(), cur.end())).second) {
      rep.message = "vertex revisited";
      rep.failing_index = static_cast<long long>(i);
      return rep;
    }
  }

  if (expect == expectation::laceable_endpoints || expect == expectation::l1_endpoints) {
    vertex x = cert.start;
    vertex y = cur;  // final vertex
    if (expect == expectation::l1_endpoints) {
      bool x1, y1;
      if (cert.middle_form) {
        int sx = 0, sy = 0;
        middle_member(x, a, &sx);
        middle_member(y, a, &sy);
        x1 = (sx == 0);
        y1 = (sy == 0);
      } else {
        x1 = (x[0] == 1);
        y1 = (y[0] == 1);
      }
      if (x1 == y1) {
        rep.message = "endpoints violate the 1-laceable class condition";
        return rep;
      }
    } else {
      bool all_ones = true;
      for (int i = 1; i <= a.k(); ++i) all_ones = all_ones && a.part(i) == 1;
      bool cross;
      if (cert.middle_form) {
        int sx = 0, sy = 0;
        middle_member(x, a, &sx);
        middle_member(y, a, &sy);
        cross = (sx == 0) != (sy == 0);
      } else if (all_ones) {
        cross = word_inversion_parity(x) != word_inversion_parity(y);
      } else if (a.k() == 2) {
        cross = x[0] != y[0];
      } else {
        rep.message = "laceable expectation on a non-bipartite instance";
        return rep;
      }
      if (!cross) {
        rep.message = "endpoints lie in the same bipartition class";
        return rep;
      }
    }
  }

  rep.ok = true;
  return rep;
}

verify_report verify_path_between(const ham_path& cert, const vertex& x, const vertex& y) {
  verify_report rep = verify(cert, expectation::path);
  if (!rep.ok) return rep;
  if (cert.start != x || cert.end() != y) {
    rep.ok = false;
    rep.message = "endpoint mismatch";
  }
  return rep;
}

std::string to_text(const ham_path& cert) {
  std::ostringstream os;
  os << "stargray v1 a=" << cert.a.str() << " kind=" << (cert.cycle ? "cycle" : "path");
  if (cert.middle_form) os << " form=middle";
  os << "\n";
  os << (cert.middle_form ? mstr(cert.start) : vertex_str(cert.start, cert.a.k())) << "\n";
  for (size_t i = 0; i < cert.flips.size(); ++i) {
    if (i) os << ' ';
    os << cert.flips[i];
  }
  os << "\n";
  return os.str();
}

std::string to_flips(const ham_path& cert) {
  std::ostringstream os;
  for (size_t i = 0; i < cert.flips.size(); ++i) {
    if (i) os << ' ';
    os << cert.flips[i];
  }
  os << "\n";
  return os.str();
}

std::string to_json(const ham_path& cert) {
  nlohmann::json j;
  j["partition"] = cert.a.str();
  j["kind"] = cert.cycle ? "cycle" : "path";
  j["start"] = cert.middle_form ? mstr(cert.start) : vertex_str(cert.start, cert.a.k());
  j["flips"] = cert.flips;
  if (cert.middle_form) j["form"] = "middle";
  return j.dump() + "\n";
}

namespace {

vertex parse_any_vertex(const std::string& s, const frequency_vector& a, bool middle) {
  if (middle) {
    vertex x;
    for (char c : s) {
      if (c < '0' || c > '9') throw error("bad middle vertex '" + s + "'");
      x.push_back(static_cast<uint8_t>(c - '0'));
    }
    if (!middle_member(x, a, nullptr)) throw error("vertex '" + s + "' outside Pi_n(a)^-");
    return x;
  }
  return parse_vertex(s, a);
}

}  // namespace

ham_path from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header, startline, flipline;
  if (!std::getline(is, header)) throw error("empty certificate");
  std::getline(is, startline);
  std::getline(is, flipline);
  std::istringstream hs(header);
  std::string tag, ver, tok;
  hs >> tag >> ver;
  if (tag != "stargray" || ver != "v1") throw error("bad certificate header");
  ham_path cert;
  std::string aval, kindval;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw error("bad header token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "a")
      aval = val;
    else if (key == "kind")
      kindval = val;
    else if (key == "form")
      cert.middle_form = (val == "middle");
    else
      throw error("unknown header key '" + key + "'");
  }
  cert.a = frequency_vector::parse(aval);
  if (kindval != "path" && kindval != "cycle") throw error("bad kind '" + kindval + "'");
  cert.cycle = (kindval == "cycle");
  cert.start = parse_any_vertex(startline, cert.a, cert.middle_form);
  std::istringstream fs(flipline);
  int p;
  while (fs >> p) cert.flips.push_back(p);
  return cert;
}

ham_path from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ham_path cert;
  cert.a = frequency_vector::parse(j.at("partition").get<std::string>());
  cert.cycle = j.at("kind").get<std::string>() == "cycle";
  cert.middle_form = j.value("form", std::string("full")) == "middle";
  cert.start =
      parse_any_vertex(j.at("start").get<std::string>(), cert.a, cert.middle_form);
  cert.flips = j.at("flips").get<std::vector<int>>();
  return cert;
}

}  // namespace stargray
