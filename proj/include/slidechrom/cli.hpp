#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the slidechrom executable. Each
 * command returns a status, a JSON payload and a human-readable rendering.
 */

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "compositions.hpp"
#include "dyck.hpp"
#include "keys.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "slide.hpp"

namespace slidechrom::cli {

enum class Status { ok, mismatch, error };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::mismatch:
      return "mismatch";
    default:
      return "error";
  }
}

inline int exit_code(Status s) { return s == Status::ok ? 0 : s == Status::mismatch ? 1 : 2; }

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload = nlohmann::json::object();
  std::string text;
};

inline CommandResult error_result(const std::string& message) {
  CommandResult r;
  r.status = Status::error;
  r.payload = {{"status", "error"}, {"message", message}};
  r.text = "error: " + message + "\n";
  return r;
}

inline nlohmann::json expansion_json(const BasisExpansion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [a, c] : e.terms())
    arr.push_back({{"composition", to_json(a)}, {"text", a.to_string()}, {"t", to_json(c)}});
  return arr;
}

inline std::string expansion_text(const BasisExpansion& e, const char* symbol) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : e.terms()) {
    os << (first ? "" : " + ");
    first = false;
    std::string cs = c.to_string();
    if (cs != "1") os << '(' << cs << ")*";
    os << symbol << '[' << a.to_string() << ']';
  }
  if (first) os << '0';
  return os.str();
}

inline nlohmann::json window_json(const Window& w) { return {w.lo, w.hi}; }

inline CommandResult cmd_graph(const std::string& literal) {
  try {
    auto D = parse_path_literal(literal);
    auto G = dyck_graph(D);
    auto rho = restriction_map(D);
    CommandResult res;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : G.edges()) edges.push_back({i, j});
    res.payload = {{"status", "ok"}, {"path", D.literal()}, {"n", D.n()}, {"r", D.r()},
                   {"edges", edges},  {"rho", rho},         {"dot", to_dot(G, rho)}};
    std::ostringstream os;
    os << "path  " << D.literal() << "\nedges";
    for (auto [i, j] : G.edges()) os << ' ' << i << j;
    os << "\nrho  ";
    for (int v : rho) os << ' ' << v;
    os << '\n';
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

enum class ChromaticMode { brute, theorem, both };

inline CommandResult cmd_chromatic(const std::string& literal, std::optional<Window> window, ChromaticMode mode) {
  try {
    auto D = parse_path_literal(literal);
    Window w = window.value_or(Window(1, D.r()));
    CommandResult res;
    res.payload = {{"path", D.literal()}, {"window", window_json(w)}};
    std::ostringstream os;
    os << "path    " << D.literal() << "\nwindow  [" << w.lo << ", " << w.hi << "]\n";
    if (mode == ChromaticMode::brute) {
      auto p = chromatic_brute(D, w);
      res.payload["brute"] = to_json(p);
      os << "brute   " << p.to_string() << '\n';
    } else if (mode == ChromaticMode::theorem) {
      auto th = chromatic_theorem(D, w);
      res.payload["theorem"] = to_json(th.polynomial);
      res.payload["slide_expansion"] = expansion_json(th.expansion);
      res.payload["slide_positive"] = th.expansion.is_positive();
      if (!th.expansion.is_positive()) res.status = Status::mismatch;
      os << "theorem " << th.polynomial.to_string() << "\nslides  " << expansion_text(th.expansion, "S") << '\n';
    } else {
      auto rep = verify_theorem(D, w);
      res.payload["brute"] = to_json(rep.brute);
      res.payload["theorem"] = to_json(rep.theorem);
      res.payload["equal"] = rep.equal;
      res.payload["slide_positive"] = rep.slide_positive;
      res.payload["slide_expansion"] = expansion_json(rep.slide_expansion);
      nlohmann::json mism = nlohmann::json::array();
      for (const auto& m : rep.mismatch_terms) mism.push_back({{"exp", to_json(m.exponent)}, {"t", to_json(m.difference)}});
      res.payload["mismatch_terms"] = mism;
      if (!rep.equal || !rep.slide_positive) res.status = Status::mismatch;
      os << "brute   " << rep.brute.to_string() << "\ntheorem " << rep.theorem.to_string() << "\nslides  "
         << expansion_text(rep.slide_expansion, "S") << "\nequal   " << (rep.equal ? "yes" : "NO") << "\npositive "
         << (rep.slide_positive ? "yes" : "NO") << '\n';
    }
    res.payload["status"] = status_name(res.status);
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

/// Slide expansion of a polynomial given in the JSON polynomial schema.
inline CommandResult cmd_slides(const nlohmann::json& poly, std::optional<Window> window) {
  try {
    auto p = tpolynomial_from_json(poly);
    Window w = window.value_or(p.window());
    auto e = expand_in_slides(p, w);
    CommandResult res;
    res.payload = {{"status", "ok"}, {"window", window_json(w)}, {"expansion", expansion_json(e)}, {"positive", e.is_positive()}};
    res.text = expansion_text(e, "S") + "\n";
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

/// Per-permutation table: inversions, P_D-descents, barrho and rdes.
inline CommandResult cmd_rdes(const std::string& literal) {
  try {
    auto D = parse_path_literal(literal);
    auto G = dyck_graph(D);
    auto rho = restriction_map(D);
    auto P = incomparability_poset(G);
    CommandResult res;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream os;
    os << "pi\tinv\tDes_P\tbarrho\trdes\n";
    for_each_permutation(D.n(), [&](const Permutation& pi) {
      auto des = p_descents(P, pi);
      auto bar = barrho(pi, rho, P);
      auto a = rdes(pi, rho, P);
      rows.push_back({{"pi", permutation_string(pi)},
                      {"inv", inv_g(G, pi)},
                      {"p_descents", std::vector<int>(des.begin(), des.end())},
                      {"barrho", bar},
                      {"rdes", to_json(a)},
                      {"rdes_text", a.to_string()}});
      os << permutation_string(pi) << '\t' << inv_g(G, pi) << "\t{";
      bool first = true;
      for (int d : des) os << (first ? "" : ",") << d, first = false;
      os << "}\t(";
      for (std::size_t k = 0; k < bar.size(); ++k) os << (k ? "," : "") << bar[k];
      os << ")\t" << a.to_string() << '\n';
    });
    res.payload = {{"status", "ok"}, {"path", D.literal()}, {"rows", rows}};
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

/**
 * With a path literal: brute coloring over [1 - m, r] against the slide sum
 * over the same window. With a composition: the tail-strong decomposition
 * and its truncated product identity over [1 - m, r].
 */
inline CommandResult cmd_backstable(const std::string& arg, int r, int m) {
  try {
    if (m < 1) throw std::invalid_argument("m must be positive");
    CommandResult res;
    std::ostringstream os;
    if (arg.find('@') != std::string::npos) {
      auto D = parse_path_literal(arg);
      Window w(1 - m, D.r());
      auto rep = verify_theorem(D, w);
      res.payload = {{"path", D.literal()}, {"window", window_json(w)}, {"equal", rep.equal},
                     {"brute", to_json(rep.brute)}, {"slide_expansion", expansion_json(rep.slide_expansion)}};
      if (!rep.equal) res.status = Status::mismatch;
      os << "path   " << D.literal() << "\nwindow [" << w.lo << ", " << w.hi << "]\nslides " << expansion_text(rep.slide_expansion, "S")
         << "\nequal  " << (rep.equal ? "yes" : "NO") << '\n';
    } else {
      auto a = WeakComposition::parse(arg);
      auto terms = backstable_decompose(a, r);
      nlohmann::json arr = nlohmann::json::array();
      TPolynomial rhs(Window(1 - m, r));
      os << "S[" << a.to_string() << "] =";
      bool first = true;
      for (const auto& t : terms) {
        arr.push_back({{"fundamental", t.fundamental.parts}, {"slide", to_json(t.slide)}, {"slide_text", t.slide.to_string()}});
        rhs += fundamental_qsym(t.fundamental, Window(1 - m, 0)) * slide_poly(t.slide, Window(1, r));
        os << (first ? " " : " + ") << "F" << t.fundamental.to_string() << "*S[" << t.slide.to_string() << "]";
        first = false;
      }
      bool ok = slide_poly(a, Window(1 - m, r)) == rhs;
      if (!ok) res.status = Status::mismatch;
      res.payload = {{"composition", to_json(a)}, {"r", r}, {"m", m}, {"terms", arr}, {"identity_holds", ok},
                     {"eta0", eta0_of_backstable_slide(a).parts}};
      os << "\ntruncated identity on [" << 1 - m << ", " << r << "]: " << (ok ? "holds" : "FAILS") << '\n';
    }
    res.payload["status"] = status_name(res.status);
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

/// Fundamental quasisymmetric expansion of the stable limit, checked on [1 - m, 0].
inline CommandResult cmd_qsym(const std::string& literal, std::optional<int> m_opt) {
  try {
    auto D = parse_path_literal(literal);
    int m = m_opt.value_or(std::max(D.n(), 1));
    auto e = chromatic_qsym_fundamental(D);
    bool ok = verify_corollary(D, m);
    CommandResult res;
    res.status = ok ? Status::ok : Status::mismatch;
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream os;
    os << "X =";
    bool first = true;
    for (const auto& [alpha, c] : e) {
      arr.push_back({{"alpha", alpha.parts}, {"t", to_json(c)}});
      os << (first ? " " : " + ") << '(' << c.to_string() << ")*F" << alpha.to_string();
      first = false;
    }
    os << "\ncheck on [" << 1 - m << ", 0]: " << (ok ? "equal" : "DIFFERENT") << '\n';
    res.payload = {{"status", status_name(res.status)}, {"path", D.literal()}, {"m", m}, {"expansion", arr}, {"verified", ok}};
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

inline std::optional<std::filesystem::path> fixtures_dir() {
  if (const char* env = std::getenv("SLIDECHROM_FIXTURES"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

/// Reads every *.json fixture file (an array of records) in a directory, sorted by name.
inline std::vector<CounterexampleRecord> load_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CounterexampleRecord> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    auto j = nlohmann::json::parse(in);
    for (const auto& rec : j) out.push_back(counterexample_from_json(rec));
  }
  return out;
}

/// True iff the record's coefficient is reproduced by a fresh key expansion.
inline bool replay(const CounterexampleRecord& rec) {
  return chromatic_key_expansion(rec.path, rec.path.r()).coefficient(rec.composition) == rec.coefficient;
}

/// Key expansion of X_D(x_r; t); with replay=true, checks every stored fixture instead.
inline CommandResult cmd_keys(const std::string& literal, bool replay_fixtures) {
  try {
    CommandResult res;
    std::ostringstream os;
    if (replay_fixtures) {
      auto dir = fixtures_dir();
      if (!dir) throw std::invalid_argument("SLIDECHROM_FIXTURES is not set");
      auto recs = load_fixtures(*dir);
      nlohmann::json arr = nlohmann::json::array();
      bool all = true;
      for (const auto& rec : recs) {
        bool ok = replay(rec);
        all = all && ok;
        arr.push_back({{"path", rec.path.literal()}, {"composition", rec.composition.to_string()}, {"reproduced", ok}});
        os << rec.path.literal() << "  K[" << rec.composition.to_string() << "] " << rec.coefficient.to_string() << "  "
           << (ok ? "reproduced" : "NOT REPRODUCED") << '\n';
      }
      res.status = all ? Status::ok : Status::mismatch;
      res.payload = {{"status", status_name(res.status)}, {"fixtures", arr}};
      res.text = os.str();
      return res;
    }
    auto D = parse_path_literal(literal);
    if (D.r() < 1) throw std::invalid_argument("keys: r must be positive");
    auto e = chromatic_key_expansion(D, D.r());
    bool positive = is_key_positive(e);
    res.payload = {{"status", "ok"}, {"path", D.literal()}, {"expansion", expansion_json(e)}, {"key_positive", positive}};
    os << "K-expansion " << expansion_text(e, "K") << "\nkey-positive " << (positive ? "yes" : "no") << '\n';
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

enum class SweepMode { theorem, backstable, corollary, keys };

struct SweepOptions {
  int n = 0;
  int r = 0;
  SweepMode mode = SweepMode::theorem;
  int m = 1;
  unsigned threads = 1;
  bool force = false;
  bool record = false;  ///< keys mode: write findings to $SLIDECHROM_FIXTURES
};

/**
 * theorem/backstable/corollary: every path of P_{n,r} must pass.
 * keys: every path of P_{n,r'} with r' <= r is searched; negative key
 * coefficients are findings, not failures.
 */
inline CommandResult cmd_sweep(const SweepOptions& opt) {
  try {
    if (opt.n > 6 && !opt.force) throw std::invalid_argument("refusing n > 6 without --force");
    CommandResult res;
    std::ostringstream os;
    if (opt.mode == SweepMode::keys) {
      auto recs = search_counterexamples(opt.n, opt.r, opt.threads);
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& rec : recs) {
        arr.push_back(to_json(rec));
        os << rec.path.literal() << "  K[" << rec.composition.to_string() << "]  " << rec.coefficient.to_string() << '\n';
      }
      os << recs.size() << " negative key coefficient(s)\n";
      if (opt.record && !recs.empty()) {
        auto dir = fixtures_dir();
        if (!dir) throw std::invalid_argument("--record needs SLIDECHROM_FIXTURES");
        std::filesystem::create_directories(*dir);
        std::ofstream out(*dir / ("keys_n" + std::to_string(opt.n) + "_r" + std::to_string(opt.r) + ".json"));
        out << arr.dump(2) << '\n';
      }
      res.payload = {{"status", "ok"}, {"mode", "keys"}, {"n", opt.n}, {"r_max", opt.r}, {"findings", arr}};
      res.text = os.str();
      return res;
    }
    auto paths = enumerate_paths(opt.n, opt.r);
    auto verdicts = parallel_map<int>(paths.size(), opt.threads, [&](std::size_t k) -> int {
      const auto& D = paths[k];
      switch (opt.mode) {
        case SweepMode::theorem: {
          auto rep = verify_theorem(D, Window(1, D.r()));
          return rep.equal && rep.slide_positive;
        }
        case SweepMode::backstable:
          return verify_theorem(D, Window(1 - opt.m, D.r())).equal;
        default:
          return verify_corollary(D, opt.m);
      }
    });
    nlohmann::json rows = nlohmann::json::array();
    std::size_t failures = 0;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      bool pass = verdicts[k] != 0;
      failures += pass ? 0 : 1;
      rows.push_back({{"path", paths[k].literal()}, {"pass", pass}});
      os << paths[k].literal() << "  " << (pass ? "pass" : "FAIL") << '\n';
    }
    os << paths.size() - failures << "/" << paths.size() << " passed\n";
    res.status = failures == 0 ? Status::ok : Status::mismatch;
    const char* mode = opt.mode == SweepMode::theorem ? "theorem" : opt.mode == SweepMode::backstable ? "backstable" : "corollary";
    res.payload = {{"status", status_name(res.status)}, {"mode", mode}, {"n", opt.n}, {"r", opt.r}, {"rows", rows}};
    if (opt.mode != SweepMode::theorem) res.payload["m"] = opt.m;
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

inline CommandResult cmd_paths(int n, int r, bool count_only) {
  try {
    auto paths = enumerate_paths(n, r);
    CommandResult res;
    std::ostringstream os;
    res.payload = {{"status", "ok"}, {"n", n}, {"r", r}, {"count", paths.size()}};
    if (!count_only) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& D : paths) {
        arr.push_back(D.literal());
        os << D.literal() << '\n';
      }
      res.payload["paths"] = arr;
    }
    os << paths.size() << " path(s)\n";
    res.text = os.str();
    return res;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

}  // namespace slidechrom::cli
