// Command-line front end. Every subcommand parses flags, calls one library entry point and
// prints the serialized result.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vmvt/congruence.hpp"
#include "vmvt/errors.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/iteration.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/serialize.hpp"
#include "vmvt/verify.hpp"
#include "vmvt/waring.hpp"

using namespace vmvt;
using nlohmann::json;

namespace {

enum Exit { ok = 0, internal = 1, invalid = 2, budget = 3, finding = 4 };

struct Globals {
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 20240601;
  std::uint64_t max_keys = Budget{}.max_keys;
  std::uint64_t max_loop = Budget{}.max_loop;
  bool witnesses = false;
  int threads = 0;
  std::string batch;

  Budget budget() const { return Budget{max_keys, max_loop}; }
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int exit_for(const std::exception& e) {
  if (auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::invalid_params: return invalid;
      case ErrorKind::budget_exceeded: return budget;
      case ErrorKind::bound_violation: return finding;
      case ErrorKind::internal: return internal;
    }
  }
  if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const json::exception*>(&e)) return invalid;
  return internal;
}

std::string kind_name(int code) {
  switch (code) {
    case invalid: return "invalid-params";
    case budget: return "budget-exceeded";
    case finding: return "bound-violation";
    default: return "internal-error";
  }
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    require(used == item.size(), "not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

MixedKind parse_which(const std::string& w) {
  if (w == "I") return MixedKind::I;
  if (w == "K") return MixedKind::K;
  throw InvalidParams("--which must be I or K");
}

EtaMode parse_mode(const std::string& m) {
  if (m == "families") return EtaMode::families;
  if (m == "envelope") return EtaMode::envelope;
  throw InvalidParams("--mode must be families or envelope");
}

json triple(int k, int r, int t) { return {{"k", k}, {"r", r}, {"t", t}}; }

/// One batch line: {"op": ..., <params>} or {"op": ..., "params": {...}}.
CountRecord run_batch_line(const json& line, const Budget& budget) {
  const std::string op = line.at("op").get<std::string>();
  const json& p = line.contains("params") ? line.at("params") : line;
  if (op == "count-j") return count_J(p.at("s"), p.at("k"), p.at("X"), budget);
  if (op == "count-diagonal") return count_diagonal(p.at("s"), p.at("X"));
  if (op == "weyl-moment") return count_weyl_moment(p.at("s"), p.at("k"), p.at("X"), budget);
  if (op == "count-shifted") {
    return count_shifted(p.at("s"), p.at("m"), p.at("k"), p.at("X"), p.at("q"), p.at("b"), budget);
  }
  if (op == "count-mixed") {
    MixedMeanParams mp{p.at("k"), p.at("r"), p.at("t"), p.at("p"), p.at("a"), p.at("b"),
                       p.value("xi", 0L), p.at("eta"), p.at("X")};
    return count_mixed(mp, parse_which(p.at("which")), budget);
  }
  throw InvalidParams("batch: unsupported op '" + op + "'");
}

int run_batch(const Globals& g) {
  std::ifstream in(g.batch);
  if (!in) throw InvalidParams("cannot open batch file " + g.batch);
  int status = ok;
  std::string text;
  while (std::getline(in, text)) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      emit(io::to_json(run_batch_line(json::parse(text), g.budget())));
    } catch (const std::exception& e) {
      const int code = exit_for(e);
      emit({{"error", kind_name(code)}, {"message", e.what()}, {"input", text}});
      if (status == ok) status = code;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exponent calculator and desk-scale counting laboratory for Vinogradov's mean value theorem"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output where CSV is the default");
  app.add_flag("--csv", g.csv, "CSV output where available");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--budget", g.max_keys, "maximum multiplicity-map entries");
  app.add_option("--max-loop", g.max_loop, "maximum enumeration iterations");
  app.add_flag("--witnesses", g.witnesses, "include class witnesses in congruence reports");
  app.add_option("--threads", g.threads, "cap on worker threads");
  app.add_option("--batch", g.batch, "JSON-lines file of counting requests");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  int k = 0, r = 0, t = 0, m = 0, s = 0, w = 0, N = 0;
  long v = 0, X = 0, q = 1, b_shift = 0, n = 0, p = 0, xi = 0, eta = 0;
  int a = 0, b = 0;
  std::string mode = "families", which, case_name, m_list, h_list, n_range, search = "families";
  int k_min = 12, k_max = 20, alpha = 1, beta = 1, level = 1, Q = 50, h_minus1 = 0, samples = 0;
  bool explain = false, random_h = false;
  std::vector<std::string> polys;
  std::string profile;

  auto add_krt = [&](CLI::App* c) {
    c->add_option("--k", k)->required();
    c->add_option("--r", r)->required();
    c->add_option("--t", t)->required();
  };

  {
    auto* c = sub("kappa", "kappa(r,t,k)");
    add_krt(c);
    c->callback([&] {
      action = [&] {
        VinogradovParams vp{k, r, t};
        emit(io::value_record("kappa", triple(k, r, t), kappa(vp), "closed-form"));
        return ok;
      };
    });
  }
  {
    auto* c = sub("mu-nu", "coefficients mu and nu");
    add_krt(c);
    c->callback([&] {
      action = [&] {
        const auto mn = mu_nu(VinogradovParams{k, r, t});
        emit({{"op", "mu-nu"}, {"params", triple(k, r, t)}, {"mu", mn.mu}, {"nu", mn.nu}});
        return ok;
      };
    });
  }
  {
    auto* c = sub("delta", "large-s bound delta_{k,m} with its threshold");
    c->add_option("--k", k)->required();
    c->add_option("--m", m)->required();
    c->add_option("--case", case_name, "i (pronic threshold) or ii (square-minus-one threshold)")->required();
    c->callback([&] {
      action = [&] {
        require(case_name == "i" || case_name == "ii", "--case must be i or ii");
        const auto which_case = case_name == "i" ? DeltaCase::pronic : DeltaCase::square_minus_one;
        const auto d = delta(k, m, which_case);
        json j = io::value_record("delta", {{"k", k}, {"m", m}, {"case", case_name}}, d.value,
                                  case_name == "i" ? "pronic-threshold" : "square-minus-one-threshold");
        j["threshold"] = d.threshold;
        emit(j);
        return ok;
      };
    });
  }
  {
    auto* c = sub("eta", "best known bound for eta(s,k)");
    c->add_option("--s", v)->required();
    c->add_option("--k", k)->required();
    c->add_option("--mode", mode);
    c->callback([&] {
      action = [&] {
        json j = io::to_json(eta_known(v, k, parse_mode(mode)));
        j["params"]["mode"] = mode;
        emit(j);
        return ok;
      };
    });
  }
  {
    auto* c = sub("s0", "s_0(k,v,w)");
    c->add_option("--k", k)->required();
    c->add_option("--v", v)->required();
    c->add_option("--w", w)->required();
    c->callback([&] {
      action = [&] {
        const Rational ds = delta_star(v, k);
        json j = io::value_record("s0", {{"k", k}, {"v", v}, {"w", w}}, s0(k, v, w), "closed-form");
        j["delta_star"] = io::to_json(ds);
        emit(j);
        return ok;
      };
    });
  }
  {
    auto* c = sub("s1", "s_1(k) with its minimiser");
    c->add_option("--k", k)->required();
    c->add_option("--search", search, "families or all-v");
    c->callback([&] {
      action = [&] {
        require(search == "families" || search == "all-v", "--search must be families or all-v");
        emit(io::to_json(s1(k, search == "all-v" ? S1Search::all_v : S1Search::families)));
        return ok;
      };
    });
  }
  {
    auto* c = sub("gtilde-table", "table of s_1(k) and G~(k) bounds");
    c->add_option("--k-min", k_min);
    c->add_option("--k-max", k_max);
    c->add_flag("--explain", explain, "describe each minimiser");
    c->callback([&] {
      action = [&] {
        require(3 <= k_min && k_min <= k_max, "need 3 <= k-min <= k-max");
        std::vector<S1Result> rows;
        for (int kk = k_min; kk <= k_max; ++kk) rows.push_back(s1(kk));
        if (g.json) {
          json arr = json::array();
          for (const auto& row : rows) arr.push_back(io::to_json(row));
          emit({{"op", "gtilde-table"}, {"rows", arr}});
        } else {
          std::cout << io::gtilde_csv(rows);
        }
        if (explain) {
          for (const auto& row : rows) {
            std::cout << "k=" << row.k << ": s1 = " << row.value << " at m=" << row.m << ", w=" << row.w
                      << ", v=" << row.v << " (" << to_string(row.family) << " family, Delta* = "
                      << delta_star(row.v, row.k) << "); G~(" << row.k << ") <= " << row.gtilde
                      << (row.k >= 12 && row.k <= 20 ? " (published table)" : " (not in the published table)")
                      << '\n';
          }
        }
        return ok;
      };
    });
  }
  {
    auto* c = sub("count-j", "J_{s,k}(X)");
    c->add_option("--s", s)->required();
    c->add_option("--k", k)->required();
    c->add_option("--X", X)->required();
    c->callback([&] { action = [&] { emit(io::to_json(count_J(s, k, X, g.budget()))); return ok; }; });
  }
  {
    auto* c = sub("count-diagonal", "diagonal solutions");
    c->add_option("--s", s)->required();
    c->add_option("--X", X)->required();
    c->callback([&] { action = [&] { emit(io::to_json(count_diagonal(s, X))); return ok; }; });
  }
  {
    auto* c = sub("weyl-moment", "I_s(X)");
    c->add_option("--s", s)->required();
    c->add_option("--k", k)->required();
    c->add_option("--X", X)->required();
    c->callback([&] { action = [&] { emit(io::to_json(count_weyl_moment(s, k, X, g.budget()))); return ok; }; });
  }
  {
    auto* c = sub("count-shifted", "I_{s,m}(X;q,b)");
    c->add_option("--s", s)->required();
    c->add_option("--m", m)->required();
    c->add_option("--k", k)->required();
    c->add_option("--X", X)->required();
    c->add_option("--q", q)->required();
    c->add_option("--b", b_shift)->required();
    c->callback([&] {
      action = [&] { emit(io::to_json(count_shifted(s, m, k, X, q, b_shift, g.budget()))); return ok; };
    });
  }
  {
    auto* c = sub("count-mixed", "mixed mean values I_{a,b} and K_{a,b}");
    c->add_option("--which", which, "I or K")->required();
    add_krt(c);
    c->add_option("--p", p)->required();
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    c->add_option("--xi", xi);
    c->add_option("--eta", eta)->required();
    c->add_option("--X", X)->required();
    c->callback([&] {
      action = [&] {
        MixedMeanParams mp{k, r, t, p, a, b, xi, eta, X};
        emit(io::to_json(count_mixed(mp, parse_which(which), g.budget())));
        return ok;
      };
    });
  }
  {
    auto* c = sub("enum-b", "solutions and equivalence classes of one congruence system");
    add_krt(c);
    c->add_option("--p", p)->required();
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    c->add_option("--xi", xi);
    c->add_option("--eta", eta)->required();
    c->add_option("--m", m_list, "comma-separated m_1..m_k")->required();
    c->callback([&] {
      action = [&] {
        CongruenceInstance inst{k, r, t, p, a, b, xi, eta, parse_list(m_list)};
        const auto census = count_classes(inst, g.witnesses, g.budget());
        emit(io::to_json(census, g.witnesses));
        const bool violated = census.hypotheses_hold && BigInt((unsigned long)census.class_count) > census.bound;
        return violated ? finding : ok;
      };
    });
  }
  {
    auto* c = sub("max-b", "maximal class count over every xi, eta and m");
    add_krt(c);
    c->add_option("--p", p)->required();
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    c->callback([&] {
      action = [&] {
        const auto census = max_B(k, r, t, p, a, b, g.budget());
        emit(io::to_json(census));
        return census.hypotheses_hold && !census.bound_respected ? finding : ok;
      };
    });
  }
  {
    auto* c = sub("hensel", "non-singular solutions of a square polynomial system");
    c->add_option("--poly", polys, "polynomial in x1..xd; repeat once per equation")->required();
    c->add_option("--prime", p)->required();
    c->add_option("--level", level)->required();
    c->callback([&] {
      action = [&] {
        std::vector<IntPoly> system;
        for (const auto& text : polys) system.push_back(parse_poly(text, int(polys.size())));
        const auto res = hensel_count(system, p, level, g.budget());
        json j = io::to_json(res);
        j["params"] = {{"polys", polys}, {"prime", p}, {"level", level}};
        emit(j);
        return res.bound_respected ? ok : finding;
      };
    });
  }
  {
    auto* c = sub("lemma32", "integer solution of the elimination identity");
    c->add_option("--alpha", alpha)->required();
    c->add_option("--beta", beta)->required();
    c->callback([&] {
      action = [&] {
        const auto id = solve_elimination_identity(alpha, beta);
        emit(io::to_json(id));
        return verify_identity(id) ? ok : finding;
      };
    });
  }
  {
    auto* c = sub("iterate", "trace of the congruencing recursion");
    add_krt(c);
    c->add_option("--N", N)->required();
    c->add_option("--h-minus1", h_minus1);
    c->add_option("--h-values", h_list, "comma-separated h_0..h_{N-1}; zeros when omitted");
    c->add_flag("--random", random_h, "draw h from the seeded generator");
    c->callback([&] {
      action = [&] {
        IterationConfig cfg = random_h ? random_config(k, r, t, N, g.seed) : zero_config(k, r, t, N);
        if (!random_h) {
          cfg.h_minus1 = h_minus1;
          if (!h_list.empty()) {
            cfg.h.clear();
            for (long h : parse_list(h_list)) cfg.h.push_back(BigInt(h));
          }
        }
        const auto trace = run_iteration(cfg);
        if (g.json) {
          emit(io::summary_json(trace));
        } else {
          std::cout << io::trace_csv(trace);
          for (const auto& check : trace.checks) {
            if (!check.ok) std::cerr << "check " << check.name << " failed at n=" << check.first_failure << '\n';
          }
        }
        return trace.all_ok() ? ok : finding;
      };
    });
  }
  {
    auto* c = sub("lambda-cap", "cap on Lambda together with theta and delta");
    c->add_option("--s", v)->required();
    c->add_option("--t", t)->required();
    c->add_option("--N", N)->required();
    c->callback([&] {
      action = [&] {
        const auto cap = lambda_cap(v, t, N);
        const auto td = theta_delta(t, N);
        emit({{"op", "lambda-cap"}, {"params", {{"s", v}, {"t", t}, {"N", N}}}, {"cap", io::to_json(cap)},
              {"theta_delta", io::to_json(td)}});
        return cap.ok && td.ok ? ok : finding;
      };
    });
  }
  {
    auto* c = sub("waring-count", "R_{s,k}(n)");
    c->add_option("--s", s)->required();
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->callback([&] { action = [&] { emit(io::to_json(count_R(s, k, n, g.budget()))); return ok; }; });
  }
  {
    auto* c = sub("singular-series", "truncated singular series");
    c->add_option("--s", s)->required();
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--Q", Q);
    c->callback([&] {
      action = [&] {
        const auto val = singular_series(s, k, n, Q);
        emit(io::to_json(val));
        return std::abs(val.imag) < 1e-6 ? ok : finding;
      };
    });
  }
  {
    auto* c = sub("waring-compare", "R_{s,k}(n) against the conjectured main term (exploratory)");
    c->add_option("--s", s)->required();
    c->add_option("--k", k)->required();
    c->add_option("--n-range", n_range, "lo:hi or lo:hi:step")->required();
    c->add_option("--samples", samples, "draw this many n from the range with --seed instead of stepping");
    c->add_option("--Q", Q);
    c->callback([&] {
      action = [&] {
        std::vector<long> bounds;
        std::stringstream ss(n_range);
        std::string item;
        while (std::getline(ss, item, ':')) bounds.push_back(std::stol(item));
        require(bounds.size() == 2 || bounds.size() == 3, "--n-range must be lo:hi or lo:hi:step");
        require(bounds[0] >= 1 && bounds[0] <= bounds[1], "--n-range needs 1 <= lo <= hi");
        std::vector<long> ns;
        if (samples > 0) {
          std::mt19937_64 rng(g.seed);
          std::uniform_int_distribution<long> dist(bounds[0], bounds[1]);
          for (int i = 0; i < samples; ++i) ns.push_back(dist(rng));
        } else {
          const long step = bounds.size() == 3 ? bounds[2] : 1;
          require(step >= 1, "--n-range step must be positive");
          for (long nn = bounds[0]; nn <= bounds[1]; nn += step) ns.push_back(nn);
        }
        const auto rows = waring_compare(s, k, ns, Q, g.budget());
        if (g.json) {
          json arr = json::array();
          for (const auto& row : rows) {
            arr.push_back({{"n", row.n}, {"R", row.R.get_str()}, {"main_term", row.main}, {"ratio", row.ratio},
                           {"singular_series", row.series.value}});
          }
          emit({{"op", "waring-compare"}, {"params", {{"s", s}, {"k", k}, {"Q", Q}}}, {"rows", arr}});
        } else {
          std::cout << io::compare_csv(rows);
        }
        return ok;
      };
    });
  }
  {
    auto* c = sub("verify-all", "run the invariant suite");
    c->add_option("--profile", profile, "quick or full; default from VMVT_PROFILE, else quick");
    c->callback([&] {
      action = [&] {
        if (profile.empty()) {
          const char* env = std::getenv("VMVT_PROFILE");
          profile = env != nullptr && *env != '\0' ? env : "quick";
        }
        const auto report = verify_all(parse_profile(profile), g.seed);
        std::cout << report.to_json().dump(2) << '\n';
        return report.all_ok() ? ok : finding;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  }

  try {
    set_thread_count(g.threads);
    if (!g.batch.empty()) return run_batch(g);
    if (!action) {
      std::cout << app.help();
      return invalid;
    }
    return action();
  } catch (const std::exception& e) {
    const int code = exit_for(e);
    std::cerr << "vmvt: " << kind_name(code) << ": " << e.what() << '\n';
    return code;
  }
}
