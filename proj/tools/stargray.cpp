#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stargray/composer.hpp"
#include "stargray/ham_lab.hpp"
#include "stargray/middle.hpp"

using namespace stargray;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 precondition/classifier
// rejection, 3 timeout/cap
constexpr int EXIT_VERIFY = 1;
constexpr int EXIT_PRECOND = 2;
constexpr int EXIT_LIMIT = 3;

struct global_opts {
  std::string cache_dir;
  double timeout = -1;
  long long cap = 20000;
  int threads = 1;
  bool json = false;
};

int classify_error_code(const std::string& msg) {
  if (msg.find("timeout") != std::string::npos || msg.find("cap") != std::string::npos ||
      msg.find("exceeds") != std::string::npos)
    return EXIT_LIMIT;
  if (msg.find("verification") != std::string::npos || msg.find("verify") != std::string::npos)
    return EXIT_VERIFY;
  return EXIT_PRECOND;
}

void emit_error(const global_opts& g, const std::string& msg, int code) {
  if (g.json) {
    nlohmann::json j;
    j["error"] = msg;
    j["exit"] = code;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  std::exit(code);
}

void print_cert(const ham_path& cert, const std::string& format) {
  if (format == "json")
    std::cout << to_json(cert);
  else if (format == "flips")
    std::cout << to_flips(cert);
  else
    std::cout << to_text(cert);
}

ham_lab make_lab(const global_opts& g) {
  lab_options opt;
  opt.cache_dir = g.cache_dir;
  opt.timeout_seconds = g.timeout;
  opt.cap = static_cast<size_t>(g.cap);
  opt.threads = g.threads;
  return ham_lab(opt);
}

middle::word middle_pair_x(int n) {
  middle::word x(static_cast<size_t>(2 * n - 1), 0);
  for (int i = 0; i < n - 1; ++i) x[static_cast<size_t>(n + i)] = 1;
  return x;
}

middle::word middle_pair_y(const middle::word& x, int d) {
  middle::word y = x;
  int zeros_to_flip = (d + 1) / 2, ones_to_flip = d / 2;
  for (size_t i = 0; i < y.size() && zeros_to_flip > 0; ++i)
    if (y[i] == 0) {
      y[i] = 1;
      --zeros_to_flip;
    }
  for (size_t i = 0; i < y.size() && ones_to_flip > 0; ++i)
    if (y[i] == 1 && x[i] == 1) {
      y[i] = 0;
      --ones_to_flip;
    }
  return y;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-transposition Gray codes for multiset permutations"};
  app.require_subcommand(1);

  global_opts g;
  if (const char* env = std::getenv("STARGRAY_CACHE")) g.cache_dir = env;
  app.add_option("--cache", g.cache_dir, "certificate cache directory");
  app.add_option("--timeout", g.timeout, "per-search timeout in seconds");
  app.add_option("--cap", g.cap, "vertex cap for exhaustive work");
  app.add_option("--threads", g.threads, "parallel workers for property checks");
  app.add_flag("--json", g.json, "machine-readable output");

  // ---- classify ----
  std::string arg_partition;
  auto* c_classify = app.add_subcommand("classify", "Delta regime and Theorem-N verdicts");
  c_classify->add_option("partition", arg_partition)->required();

  // ---- solve ----
  std::string s_from, s_to, s_format = "txt";
  bool s_cycle = false;
  auto* c_solve = app.add_subcommand("solve", "exhaustive Hamilton path/cycle search");
  c_solve->add_option("partition", arg_partition)->required();
  c_solve->add_option("--from", s_from);
  c_solve->add_option("--to", s_to);
  c_solve->add_flag("--cycle", s_cycle);
  c_solve->add_option("--format", s_format)->check(CLI::IsMember({"txt", "json", "flips"}));

  // ---- check ----
  std::string k_prop;
  bool k_noreduce = false;
  auto* c_check = app.add_subcommand("check", "Hamiltonicity property check");
  c_check->add_option("partition", arg_partition)->required();
  c_check->add_option("--property", k_prop)->required();
  c_check->add_flag("--no-reduction", k_noreduce);

  // ---- table1 ----
  int t_maxn = 8;
  auto* c_table1 = app.add_subcommand("table1", "base-case table report");
  c_table1->add_option("--max-n", t_maxn);

  // ---- gen ----
  std::string g_from, g_to, g_format = "txt";
  bool g_cycle = false;
  auto* c_gen = app.add_subcommand("gen", "construct a Gray-code certificate");
  c_gen->add_option("partition", arg_partition)->required();
  c_gen->add_option("--from", g_from);
  c_gen->add_option("--to", g_to);
  c_gen->add_flag("--cycle", g_cycle);
  c_gen->add_option("--format", g_format)->check(CLI::IsMember({"txt", "json", "flips"}));

  // ---- warmup ----
  int w_maxa1 = 4, w_maxn = 8;
  auto* c_warmup = app.add_subcommand("warmup", "precompute Delta=0 base-case paths");
  c_warmup->add_option("max-a1", w_maxa1);
  c_warmup->add_option("--max-n", w_maxn);

  // ---- middle ----
  int m_n = 0, m_distance = -1;
  std::string m_a;
  bool m_mprime = false;
  std::string m_format = "txt";
  auto* c_middle = app.add_subcommand("middle", "middle-levels constructions");
  c_middle->add_option("--n", m_n)->required();
  c_middle->add_option("--a", m_a);
  c_middle->add_option("--distance", m_distance);
  c_middle->add_flag("--cycle-mprime", m_mprime);
  c_middle->add_option("--format", m_format)->check(CLI::IsMember({"txt", "json", "flips"}));

  // ---- factor ----
  int f_n = 0;
  std::string f_a;
  auto* c_factor = app.add_subcommand("factor", "cycle factor summary (JSON)");
  c_factor->add_option("--n", f_n)->required();
  c_factor->add_option("--a", f_a);

  // ---- verify ----
  std::string v_file = "-";
  auto* c_verify = app.add_subcommand("verify", "verify a certificate (file or '-')");
  c_verify->add_option("file", v_file);

  // ---- export ----
  std::string e_format = "dot";
  auto* c_export = app.add_subcommand("export", "DOT export of a flip graph");
  c_export->add_option("partition", arg_partition)->required();
  c_export->add_option("--format", e_format)->check(CLI::IsMember({"dot"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      frequency_vector a = frequency_vector::parse(arg_partition);
      classification cls = classify(a);
      if (g.json) {
        nlohmann::json j;
        j["partition"] = a.str();
        j["delta"] = cls.delta;
        j["regime"] = cls.r == regime::negative ? "negative"
                      : cls.r == regime::zero   ? "zero"
                                                : "positive";
        j["hamilton_cycle_possible"] = cls.hamilton_cycle_possible;
        j["hamilton_path_possible"] = cls.hamilton_path_possible;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "a=(" << a.str() << ") Delta=" << cls.delta << "\n";
        if (cls.r == regime::negative) {
          std::cout << "Delta=" << cls.delta << ": no Hamilton cycle"
                    << (cls.hamilton_path_possible ? "; a Hamilton path exists (the path on three vertices)"
                                                   : " or path")
                    << "\n";
        } else if (cls.r == regime::zero) {
          std::cout << "boundary regime: Hamilton cycles possible; 1-laceability per the base table\n";
        } else {
          std::cout << "positive regime: Hamilton-connected by the constructive theorems (a_1 <= 4 unconditional)\n";
        }
      }
      return cls.r == regime::negative ? EXIT_PRECOND : 0;
    }

    if (c_solve->parsed()) {
      frequency_vector a = frequency_vector::parse(arg_partition);
      ham_lab lab = make_lab(g);
      path_outcome out;
      if (s_cycle) {
        out = lab.find_ham_cycle(a);
      } else {
        vertex x = s_from.empty() ? default_endpoints(a).first : parse_vertex(s_from, a);
        vertex y = s_to.empty() ? default_endpoints(a).second : parse_vertex(s_to, a);
        out = lab.find_ham_path(a, x, y);
      }
      if (out.status == search_status::none) emit_error(g, "no Hamilton " + std::string(s_cycle ? "cycle" : "path") + " exists (exhausted search)", EXIT_PRECOND);
      if (out.status == search_status::timeout) emit_error(g, "search timeout", EXIT_LIMIT);
      verify_report rep = verify(out.cert, s_cycle ? expectation::cycle : expectation::path);
      if (!rep.ok) emit_error(g, "internal verification failed: " + rep.message, EXIT_VERIFY);
      print_cert(out.cert, s_format);
      return 0;
    }

    if (c_check->parsed()) {
      frequency_vector a = frequency_vector::parse(arg_partition);
      auto p = parse_property(k_prop);
      if (!p) emit_error(g, "unknown property '" + k_prop + "'", EXIT_PRECOND);
      ham_lab lab = make_lab(g);
      property_report rep = lab.check_property(a, *p, !k_noreduce);
      if (g.json) {
        nlohmann::json j;
        j["partition"] = a.str();
        j["property"] = property_name(*p);
        j["holds"] = rep.holds;
        j["definitive"] = rep.definitive;
        j["pairs_total"] = rep.pairs_total;
        j["pairs_checked"] = rep.pairs_checked;
        if (rep.counterexample) {
          j["counterexample"] = {vertex_str(rep.counterexample->first, a.k()),
                                 vertex_str(rep.counterexample->second, a.k())};
        }
        if (!rep.note.empty()) j["note"] = rep.note;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << property_name(*p) << "(" << a.str() << ") = "
                  << (rep.definitive ? (rep.holds ? "holds" : "fails") : "unknown")
                  << "  [pairs " << rep.pairs_checked << "/" << rep.pairs_total << "]";
        if (rep.counterexample)
          std::cout << "  counterexample: " << vertex_str(rep.counterexample->first, a.k()) << " -> "
                    << vertex_str(rep.counterexample->second, a.k());
        if (!rep.note.empty()) std::cout << "  (" << rep.note << ")";
        std::cout << "\n";
      }
      if (!rep.definitive) return EXIT_LIMIT;
      return 0;
    }

    if (c_table1->parsed()) {
      ham_lab lab = make_lab(g);
      composer comp(lab);
      auto provider = [&](const frequency_vector& a) {
        try {
          ham_path c = comp.cycle(a);
          return verify(c, expectation::cycle).ok;
        } catch (const error&) {
          return false;
        }
      };
      auto rows = table1_report(lab, t_maxn, provider);
      if (g.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
          nlohmann::json j;
          j["n"] = r.a.n();
          j["partition"] = r.a.str();
          j["delta"] = r.delta;
          j["vertices"] = r.vertices.get_str();
          j["verdict"] = r.verdict;
          j["pairs"] = r.pairs_checked;
          arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
      } else {
        std::cout << "n\tpartition\tDelta\tvertices\tverdict\tpairs\n";
        for (const auto& r : rows)
          std::cout << r.a.n() << "\t(" << r.a.str() << ")\t" << r.delta << "\t"
                    << r.vertices.get_str() << "\t" << r.verdict << "\t" << r.pairs_checked
                    << "\n";
      }
      return 0;
    }

    if (c_gen->parsed()) {
      frequency_vector a = frequency_vector::parse(arg_partition);
      ham_lab lab = make_lab(g);
      composer comp(lab);
      std::optional<vertex> x, y;
      if (!g_from.empty()) x = parse_vertex(g_from, a);
      if (!g_to.empty()) y = parse_vertex(g_to, a);
      ham_path cert = comp.gray_code(a, x, y, g_cycle);
      if (comp.used_conditional())
        std::cerr << "note: coverage is conditional (Delta=0 instance beyond the verified base family)\n";
      print_cert(cert, g_format);
      return 0;
    }

    if (c_warmup->parsed()) {
      ham_lab lab = make_lab(g);
      lab.options().progress = !g.json;
      for (int n = 2; n <= w_maxn; ++n) {
        for (const auto& a : partitions_of(n)) {
          if (a.k() < 2 || delta(a) != 0 || a.part(1) > w_maxa1) continue;
          property_report rep = lab.check_property(a, property_kind::L1);
          std::cout << "L1(" << a.str() << ") = " << (rep.holds ? "holds" : "fails") << " ["
                    << rep.pairs_total << " pairs]\n";
        }
      }
      return 0;
    }

    if (c_middle->parsed()) {
      frequency_vector a = m_a.empty() ? frequency_vector({m_n}) : frequency_vector::parse(m_a);
      if (m_mprime) {
        if (!m_a.empty() && a.parts() != std::vector<int>{m_n - 1, 1})
          emit_error(g, "--cycle-mprime uses a=(n-1,1)", EXIT_PRECOND);
        ham_path cert = middle::cycle_m_prime(m_n);
        print_cert(cert, m_format);
        return 0;
      }
      int d = m_distance < 0 ? 1 : m_distance;
      if (d % 2 == 0 || d > 2 * m_n - 1) emit_error(g, "--distance must be odd and <= 2n-1", EXIT_PRECOND);
      if (!m_a.empty() && a.parts() != std::vector<int>{m_n})
        emit_error(g, "laceable paths are built for a=(n)", EXIT_PRECOND);
      middle::word x = middle_pair_x(m_n);
      middle::word y = middle_pair_y(x, d);
      ham_path cert = middle::laceable_path(m_n, x, y);
      print_cert(cert, m_format);
      return 0;
    }

    if (c_factor->parsed()) {
      frequency_vector a = f_a.empty() ? frequency_vector({f_n}) : frequency_vector::parse(f_a);
      if (a.n() != f_n) emit_error(g, "--a must be a partition of --n", EXIT_PRECOND);
      auto sum = middle::summarize_factor(a, static_cast<size_t>(g.cap) * 100);
      nlohmann::json j;
      j["n"] = sum.n;
      j["a"] = sum.a.str();
      j["vertices"] = sum.vertex_total;
      j["cycle_count"] = sum.cycles.size();
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : sum.cycles) {
        arr.push_back({{"representative", e.rep},
                       {"orbit", e.orbit},
                       {"potential", e.potential},
                       {"cycle_length", e.cycle_length}});
      }
      j["cycles"] = arr;
      std::cout << j.dump(g.json ? -1 : 2) << "\n";
      return 0;
    }

    if (c_verify->parsed()) {
      std::string text;
      if (v_file == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(v_file);
        if (!in) emit_error(g, "cannot open '" + v_file + "'", EXIT_PRECOND);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      size_t first = text.find_first_not_of(" \t\r\n");
      ham_path cert =
          (first != std::string::npos && text[first] == '{') ? from_json(text) : from_text(text);
      verify_report rep = verify(cert, cert.cycle ? expectation::cycle : expectation::path);
      if (g.json) {
        nlohmann::json j;
        j["ok"] = rep.ok;
        if (!rep.ok) {
          j["message"] = rep.message;
          if (rep.failing_index >= 0) j["failing_index"] = rep.failing_index;
        }
        std::cout << j.dump() << "\n";
      } else if (rep.ok) {
        std::cout << "OK: valid Hamilton " << (cert.cycle ? "cycle" : "path") << " on G("
                  << cert.a.str() << "), " << cert.vertex_count() << " vertices\n";
      } else {
        std::cout << "INVALID: " << rep.message;
        if (rep.failing_index >= 0) std::cout << " (flip index " << rep.failing_index << ")";
        std::cout << "\n";
      }
      return rep.ok ? 0 : EXIT_VERIFY;
    }

    if (c_export->parsed()) {
      frequency_vector a = frequency_vector::parse(arg_partition);
      flip_graph gr = build_graph(a, 500);
      std::cout << to_dot(gr);
      return 0;
    }
  } catch (const error& e) {
    emit_error(g, e.what(), classify_error_code(e.what()));
  } catch (const std::exception& e) {
    emit_error(g, e.what(), EXIT_PRECOND);
  }
  return 0;
}
