/* q3c: command-line driver for the rational 3-cycle toolkit.
 *
 * Results go to standard output (JSON with fixed field order, or DOT for the
 * graph commands); progress notes go to standard error.  Exit codes:
 * 0 success, 2 invalid input (domain_error), 3 violated internal invariant
 * (internal_error and anything else unexpected).
 *
 * A key=value config file may be named with --config or the Q3C_CONFIG
 * environment variable; individual --<key> flags override file values.
 */

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "q3c/config.hpp"
#include "q3c/errors.hpp"
#include "q3c/forms.hpp"
#include "q3c/graph.hpp"
#include "q3c/intmath.hpp"
#include "q3c/json_out.hpp"
#include "q3c/padic.hpp"
#include "q3c/pairs.hpp"
#include "q3c/thue.hpp"

namespace {

using namespace q3c;

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

BigInt int_arg(const std::string& s, const char* what) {
  try {
    return big_from(s);
  } catch (const std::exception&) {
    throw domain_error(std::string(what) + ": not an integer: '" + s + "'");
  }
}

std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    try {
      out.push_back(std::stoull(item, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    require(used == item.size() && !item.empty(),
            "primes: not an integer list: '" + s + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  require(!out.empty(), "primes: empty list");
  return out;
}

/* Config keys, each doubled as an --override flag (underscores dashed). */
constexpr const char* kConfigKeys[] = {
    "window",       "k_assoc",    "box",          "solver",
    "mt_prime_limit", "rho_budget", "max_vertices", "max_bits",
    "scan_kmax",    "n_max",      "format",       "parallelism"};
constexpr std::size_t kNumKeys = std::size(kConfigKeys);

RunConfig make_config(const std::string& config_path,
                      const std::array<std::optional<std::string>, kNumKeys>&
                          overrides) {
  RunConfig cfg;
  if (!config_path.empty()) cfg = load_config_file(config_path);
  for (std::size_t i = 0; i < kNumKeys; ++i)
    if (overrides[i]) apply_config_kv(cfg, kConfigKeys[i], *overrides[i]);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"exact arithmetic of rational 3-cycles of x^2 + c"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file")
      ->envname("Q3C_CONFIG");

  std::array<std::optional<std::string>, kNumKeys> overrides;
  for (std::size_t i = 0; i < kNumKeys; ++i) {
    std::string flag = "--" + std::string(kConfigKeys[i]);
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    app.add_option(flag, overrides[i],
                   std::string("override config key ") + kConfigKeys[i]);
  }

  // param m n
  std::string s_m, s_n;
  auto* c_param =
      app.add_subcommand("param", "cycle record of the allowable pair (m,n)");
  c_param->add_option("m", s_m, "first coordinate")->required();
  c_param->add_option("n", s_n, "second coordinate")->required();

  // cycle a1 a2 a3
  std::string s_a1, s_a2, s_a3;
  auto* c_cycle = app.add_subcommand(
      "cycle", "recover the witness pair of a numerator triple");
  c_cycle->add_option("a1", s_a1, "first numerator")->required();
  c_cycle->add_option("a2", s_a2, "second numerator")->required();
  c_cycle->add_option("a3", s_a3, "third numerator")->required();

  // thue a
  std::string s_ta;
  auto* c_thue =
      app.add_subcommand("thue", "all allowable pairs with t1(m,n) = a");
  c_thue->add_option("a", s_ta, "target value (positive)")->required();

  // solve-a k
  std::string s_k;
  auto* c_solvea =
      app.add_subcommand("solve-a", "all allowable pairs with A(m,n) = k");
  c_solvea->add_option("k", s_k, "target value (positive)")->required();

  // scan-c1 [k_max]
  std::optional<std::uint64_t> opt_kmax;
  auto* c_scan = app.add_subcommand(
      "scan-c1", "census of solution counts of A over k <= k_max");
  c_scan->add_option("k_max", opt_kmax, "scan horizon (default: config)");

  // graph component / graph special
  auto* c_graph = app.add_subcommand("graph", "numerator-graph exploration");
  c_graph->require_subcommand(1);
  std::string s_root;
  auto* c_gcomp = c_graph->add_subcommand(
      "component", "connected component containing a vertex");
  c_gcomp->add_option("--root", s_root, "starting vertex (positive)")
      ->required();
  std::string s_x, s_y;
  auto* c_gspec = c_graph->add_subcommand(
      "special", "three-triangle vertex of the two-parameter family");
  c_gspec->add_option("--x", s_x, "family parameter x")->required();
  c_gspec->add_option("--y", s_y, "family parameter y")->required();

  // classify {c|t} m n
  std::string s_which, s_cm, s_cn;
  auto* c_classify = app.add_subcommand(
      "classify", "prime classes of the numerator forms at (m,n)");
  c_classify
      ->add_option("which", s_which, "'c' for the form A, 't' for t1,t2,t3")
      ->required()
      ->check(CLI::IsMember({"c", "t"}));
  c_classify->add_option("m", s_cm, "first coordinate")->required();
  c_classify->add_option("n", s_cn, "second coordinate")->required();

  // padic cycles / exclude / table2 / nbound
  auto* c_padic =
      app.add_subcommand("padic", "reduction mod p and period exclusion");
  c_padic->require_subcommand(1);
  std::uint64_t arg_p = 0, arg_c = 0;
  auto* c_pcyc =
      c_padic->add_subcommand("cycles", "cycles of x -> x^2 + c on Z/p");
  c_pcyc->add_option("--p", arg_p, "prime modulus")->required();
  c_pcyc->add_option("--c", arg_c, "constant term (reduced mod p)")
      ->required();
  std::string s_pm, s_pn, s_primes;
  bool no_poonen = false;
  auto* c_pexc = c_padic->add_subcommand(
      "exclude", "exact period exclusion for the cycle of the pair (m,n)");
  c_pexc->add_option("--m", s_pm, "first coordinate")->required();
  c_pexc->add_option("--n", s_pn, "second coordinate")->required();
  c_pexc->add_option("--primes", s_primes, "comma-separated primes")
      ->required();
  c_pexc->add_flag("--no-poonen", no_poonen,
                   "keep periods 1 and 2 instead of assuming them impossible");
  auto* c_pt2 = c_padic->add_subcommand(
      "table2", "mod-29 cycle census with finite period candidates");
  std::uint64_t arg_pmax = 500;
  auto* c_pnb = c_padic->add_subcommand(
      "nbound", "period-3 residue counts against the proven bound");
  c_pnb->add_option("--pmax", arg_pmax, "largest prime checked (default 500)");

  // certify --norm a
  std::string s_na;
  auto* c_cert = app.add_subcommand(
      "certify", "norm-class representatives with completeness certificates");
  c_cert->add_option("--norm", s_na, "norm target (positive)")->required();

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();
  for (auto* sub : {c_gcomp, c_gspec, c_pcyc, c_pexc, c_pt2, c_pnb})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg = make_config(config_path, overrides);

    if (app.got_subcommand(c_param)) {
      ParamPair p(int_arg(s_m, "m"), int_arg(s_n, "n"));
      print_json(json_cycle(cycle_of_pair(p)));
    } else if (app.got_subcommand(c_cycle)) {
      BigInt a1 = int_arg(s_a1, "a1"), a2 = int_arg(s_a2, "a2"),
             a3 = int_arg(s_a3, "a3");
      std::optional<ParamPair> p = pair_from_triangle(a1, a2, a3);
      ojson j;
      j["triple"] = {to_dec(a1), to_dec(a2), to_dec(a3)};
      j["found"] = p.has_value();
      if (p) j["record"] = json_cycle(cycle_of_pair(*p));
      print_json(j);
    } else if (app.got_subcommand(c_thue)) {
      print_json(json_thue(solve_t1(int_arg(s_ta, "a"), cfg)));
    } else if (app.got_subcommand(c_solvea)) {
      BigInt k = int_arg(s_k, "k");
      print_json(json_solve_A(k, solve_A(k)));
    } else if (app.got_subcommand(c_scan)) {
      std::uint64_t km = opt_kmax.value_or(cfg.scan_kmax);
      std::cerr << "scan-c1: scanning k <= " << km << "\n";
      ScanC1Result r = scan_conjecture1(km, cfg.parallelism);
      ojson j;
      j["k_max"] = r.k_max;
      j["k_with_solutions"] = r.k_with_solutions;
      j["counterexamples"] = r.counterexamples;
      print_json(j);
    } else if (app.got_subcommand(c_graph)) {
      if (c_graph->got_subcommand(c_gcomp)) {
        GraphLimits lim{cfg.max_vertices, cfg.max_bits};
        GammaGraph g;
        ComponentReport rep =
            component_of(int_arg(s_root, "root"), lim, &g, cfg);
        std::cerr << "graph: " << rep.n_vertices << " vertices, "
                  << rep.n_triangles << " triangles\n";
        if (cfg.format == "dot")
          std::cout << export_graph(g, GraphFormat::dot);
        else
          print_json(json_component(rep, g));
      } else {
        SpecialVertex sv =
            special_vertex(int_arg(s_x, "x"), int_arg(s_y, "y"));
        std::cerr << "graph: special vertex " << to_dec(sv.a) << "\n";
        StarReport star = conjecture2_check(sv.a, cfg);
        ojson j = json_special(sv);
        j["star"] = json_star(star);
        print_json(j);
      }
    } else if (app.got_subcommand(c_classify)) {
      ParamPair p(int_arg(s_cm, "m"), int_arg(s_cn, "n"));
      ojson j;
      j["m"] = to_dec(p.m);
      j["n"] = to_dec(p.n);
      if (s_which == "c") {
        j["target"] = "A";
        j["report"] = json_class_report(classify_A_value(eval_A(p)));
      } else {
        j["target"] = "t";
        ojson reports = ojson::array();
        for (int i = 1; i <= 3; ++i)
          reports.push_back(json_class_report(classify_t_value(eval_t(i, p))));
        j["reports"] = reports;
      }
      print_json(j);
    } else if (app.got_subcommand(c_padic)) {
      if (c_padic->got_subcommand(c_pcyc)) {
        require(arg_p >= 2, "p must be at least 2");
        std::uint64_t cc = arg_c % arg_p;
        print_json(json_cycles_mod_p(arg_p, cc, cycles_mod_p(arg_p, cc)));
      } else if (c_padic->got_subcommand(c_pexc)) {
        ParamPair p(int_arg(s_pm, "m"), int_arg(s_pn, "n"));
        ExcludeReport rep =
            exclude_periods(p, parse_prime_list(s_primes), !no_poonen);
        print_json(json_exclude(rep));
      } else if (c_padic->got_subcommand(c_pt2)) {
        print_json(json_table2(table2()));
      } else {
        require(arg_pmax >= 3 && arg_pmax <= 2000,
                "pmax must be in [3, 2000]");
        ojson rows = ojson::array();
        bool all_within = true;
        std::uint64_t n_equality = 0;
        for (std::uint32_t p :
             primes_up_to(static_cast<std::uint32_t>(arg_pmax))) {
          if (p == 2) continue;
          ShapeDetail d = phi3_shape_mod_p(p);
          all_within = all_within && d.within;
          if (d.equality) ++n_equality;
          rows.push_back(json_shape(d));
        }
        std::cerr << "nbound: " << rows.size() << " odd primes checked\n";
        ojson j;
        j["p_max"] = arg_pmax;
        j["all_within"] = all_within;
        j["n_equality"] = n_equality;
        j["rows"] = rows;
        print_json(j);
      }
    } else if (app.got_subcommand(c_cert)) {
      ThueResult r = solve_t1(int_arg(s_na, "norm"), cfg);
      ojson j = json_thue(r);
      ojson classes = ojson::array();
      for (const CubicInt& u : r.classes.representatives)
        classes.push_back({to_dec(u.a), to_dec(u.b), to_dec(u.c)});
      j["classes"] = classes;
      j["classes_complete"] = r.classes.complete;
      print_json(j);
    }
    return 0;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
