// delbound: bounds, LPs, exact search and reference tables for
// deletion-correcting codes.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "delbound/bounds.hpp"
#include "delbound/codebooks.hpp"
#include "delbound/errors.hpp"
#include "delbound/exact_search.hpp"
#include "delbound/hypergraph.hpp"
#include "delbound/lp.hpp"
#include "delbound/reports.hpp"
#include "delbound/rll.hpp"

using namespace delbound;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kResource = 3;

struct Globals {
  long max_vertices = ReportOptions{}.max_vertices;
  std::string lp_mode = "float";
  long budget_nodes = MisOptions{}.budget_nodes;
  std::string out;
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

LpMode parse_mode(const std::string& mode) { return mode == "exact" ? LpMode::Exact : LpMode::Float; }

ReportOptions report_options(const Globals& g) {
  ReportOptions o;
  o.max_vertices = g.max_vertices;
  o.lp_mode = parse_mode(g.lp_mode);
  o.budget_nodes = g.budget_nodes;
  return o;
}

void write_report(std::ostream& os, const BoundReport& rep) {
  os << "q,s,n,bound,value,floor\n";
  for (const auto& [name, e] : rep.entries)
    os << rep.q << ',' << rep.s << ',' << rep.n << ',' << name << ',' << e.exact.str() << ',' << to_string(e.floored)
       << '\n';
}

DeletionHypergraph hypergraph_for(int q, int s, int n, int rll_d, const Globals& g) {
  if (rll_d > 0) return build_constrained(rll_set({n, rll_d}), s);
  return build(q, s, n, static_cast<std::uint64_t>(g.max_vertices) * static_cast<std::uint64_t>(q < 2 ? 2 : q));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and codes for the q-ary deletion channel"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-vertices", g.max_vertices, "Vertex cap for LP columns and hypergraphs")
      ->capture_default_str();
  app.add_option("--lp-mode", g.lp_mode, "LP arithmetic")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--budget-nodes", g.budget_nodes, "Branch-and-bound node budget")->capture_default_str();
  app.add_option("-o,--out", g.out, "Output file (default stdout)");

  int q = 2, s = 1, n = 8, d = 0, a = 0, beta = 0, gamma = 0;
  double tau = 0.0, step = 1e-3;
  std::string name, path, format = "mps";
  bool integer = false, transversal = false, seed_best = false;
  std::function<int()> action;

  auto* bound = app.add_subcommand("bound", "Closed-form bounds")->require_subcommand(1);
  auto* single = bound->add_subcommand("single", "Single-deletion bounds for (q, n)");
  single->add_option("-q", q)->capture_default_str();
  single->add_option("-n", n)->capture_default_str();
  single->callback([&] {
    action = [&] {
      Output out(g.out);
      write_report(out.get(), make_bound_report(q, 1, n));
      return kOk;
    };
  });
  auto* multi = bound->add_subcommand("multi", "All bounds for (q, s, n)");
  multi->add_option("-q", q)->capture_default_str();
  multi->add_option("-s", s)->capture_default_str();
  multi->add_option("-n", n)->capture_default_str();
  multi->callback([&] {
    action = [&] {
      Output out(g.out);
      write_report(out.get(), make_bound_report(q, s, n));
      return kOk;
    };
  });
  auto* rate = bound->add_subcommand("rate", "Asymptotic rate bound at deletion fraction tau");
  rate->add_option("-q", q)->capture_default_str();
  rate->add_option("--tau", tau)->required();
  rate->callback([&] {
    action = [&] {
      Output out(g.out);
      const double r = rate_bound(q, tau);
      out.get() << "q,tau,bound\n" << q << ',' << format_float(tau) << ',' << format_float(r) << '\n';
      return kOk;
    };
  });
  auto* rll = bound->add_subcommand("rll", "Single-deletion bounds for (d, inf)-RLL strings");
  rll->add_option("-n", n)->capture_default_str();
  rll->add_option("-d", d)->required();
  rll->callback([&] {
    action = [&] {
      Output out(g.out);
      ConstrainedOptions options;
      options.budget_nodes = g.budget_nodes;
      options.max_sources = static_cast<int>(g.max_vertices);
      auto rep = constrained_bounds(rll_set({n, d}), 1, options);
      rep.add("closed_sum", rll_bound(n, d));
      rep.add("direct_sum", rll_direct_sum(n, d));
      write_report(out.get(), rep);
      return kOk;
    };
  });

  auto* lp = app.add_subcommand("lp", "Fractional matching and transversal LPs")->require_subcommand(1);
  auto* solve = lp->add_subcommand("solve", "Solve nu* (or tau*) and print the solution as JSON");
  auto* exportc = lp->add_subcommand("export", "Write the matching LP as MPS or the incidence as JSON");
  for (auto* c : {solve, exportc}) {
    c->add_option("-q", q)->capture_default_str();
    c->add_option("-s", s)->capture_default_str();
    c->add_option("-n", n)->capture_default_str();
    c->add_option("--rll-d", d, "Restrict sources to (d, inf)-RLL strings");
  }
  solve->add_flag("--transversal", transversal, "Solve the covering side");
  solve->callback([&] {
    action = [&] {
      const auto h = hypergraph_for(q, s, n, d, g);
      LpOptions options;
      options.mode = parse_mode(g.lp_mode);
      const auto sol = transversal ? solve_fractional_transversal(h, options) : solve_fractional_matching(h, options);
      Output out(g.out);
      write_solution_json(out.get(), sol);
      return sol.status == LpStatus::Optimal ? kOk : kResource;
    };
  });
  exportc->add_option("--format", format)->check(CLI::IsMember({"mps", "json"}))->capture_default_str();
  exportc->add_flag("--integer", integer, "Mark columns binary (MPS only)");
  exportc->callback([&] {
    action = [&] {
      const auto h = hypergraph_for(q, s, n, d, g);
      Output out(g.out);
      if (format == "mps") write_matching_mps(out.get(), h, integer);
      else write_incidence_json(out.get(), h);
      return kOk;
    };
  });

  auto* exact = app.add_subcommand("exact", "Exact search")->require_subcommand(1);
  auto* mis = exact->add_subcommand("mis", "Largest code: maximum independent set of the confusion graph");
  mis->add_option("-q", q)->capture_default_str();
  mis->add_option("-s", s)->capture_default_str();
  mis->add_option("-n", n)->capture_default_str();
  mis->add_option("--rll-d", d, "Restrict sources to (d, inf)-RLL strings");
  mis->add_flag("--seed-best", seed_best, "Start from the best constructed code");
  mis->callback([&] {
    action = [&] {
      const auto h = hypergraph_for(q, s, n, d, g);
      MisOptions options;
      options.budget_nodes = g.budget_nodes;
      if (seed_best && d == 0 && s == 1)
        for (const auto& x : best_known_size(q, n).code.members) options.seed.push_back(static_cast<int>(h.edges.index_of(x)));
      const auto result = max_independent_set(line_graph(h, static_cast<int>(g.max_vertices) * q), options);
      Output out(g.out);
      nlohmann::ordered_json j;
      j["q"] = q;
      j["s"] = s;
      j["n"] = n;
      j["size"] = result.size;
      j["proven_optimal"] = result.proven_optimal;
      j["upper_bound"] = result.upper_bound;
      j["nodes"] = result.nodes;
      j["witness"] = nlohmann::ordered_json::array();
      for (const auto& x : result.witness) j["witness"].push_back(x.str());
      out.get() << j.dump(2) << '\n';
      return result.proven_optimal ? kOk : kResource;
    };
  });

  auto* codes = app.add_subcommand("codes", "Code constructions and verification")->require_subcommand(1);
  auto* vt = codes->add_subcommand("vt", "Varshamov-Tenengolts code VT_a(n)");
  vt->add_option("-n", n)->capture_default_str();
  vt->add_option("-a", a)->capture_default_str();
  vt->callback([&] {
    action = [&] {
      Output out(g.out);
      write_codebook(out.get(), vt_code(n, a));
      return kOk;
    };
  });
  auto* ten = codes->add_subcommand("tenengolts", "Tenengolts q-ary code");
  ten->add_option("-q", q)->capture_default_str();
  ten->add_option("-n", n)->capture_default_str();
  auto* beta_opt = ten->add_option("--beta", beta);
  auto* gamma_opt = ten->add_option("--gamma", gamma);
  ten->callback([&] {
    action = [&] {
      Output out(g.out);
      if (beta_opt->count() || gamma_opt->count()) write_codebook(out.get(), tenengolts_code(q, n, beta, gamma));
      else write_codebook(out.get(), best_known_size(q, n).code);
      return kOk;
    };
  });
  auto* verify = codes->add_subcommand("verify", "Check that a codebook corrects s deletions");
  verify->add_option("file", path, "Codebook text file, one string per line")->required();
  verify->add_option("-q", q)->capture_default_str();
  verify->add_option("-s", s)->capture_default_str();
  verify->callback([&] {
    action = [&] {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open " + path);
      const auto code = read_codebook(in, q, s);
      const auto check = verify_codebook(code, s);
      Output out(g.out);
      out.get() << "size,valid,cross_checked,violation\n"
                << code.size() << ',' << (check.valid ? 1 : 0) << ',' << (check.cross_checked ? 1 : 0) << ','
                << (check.violation ? check.violation->first.str() + " " + check.violation->second.str() : "") << '\n';
      return check.valid ? kOk : kMismatch;
    };
  });

  auto* table = app.add_subcommand("table", "Reference tables of single-deletion bounds (1a, 1b, 1c, 1d)");
  table->add_option("which", name)->required()->check(CLI::IsMember({"1a", "1b", "1c", "1d"}));
  table->callback([&] {
    action = [&] {
      const char which = name[1];
      const auto rows = table1(which, report_options(g));
      Output out(g.out);
      write_table_csv(out.get(), rows);
      // LP cells through n = 12 are required for q = 2; every row otherwise.
      const auto check = check_table(which, rows, which == 'a' ? 12 : table_max_length(which));
      for (const auto& m : check.mismatches) std::cerr << "mismatch: " << m << '\n';
      for (int row : check.skipped_required) std::cerr << "skipped required LP row n=" << row << '\n';
      if (!check.mismatches.empty()) return kMismatch;
      return check.skipped_required.empty() ? kOk : kResource;
    };
  });

  auto* fig = app.add_subcommand("fig", "Figure data (1: rate curves, 2: U against Levenshtein)");
  fig->add_option("which", name)->required()->check(CLI::IsMember({"1", "2"}));
  fig->add_option("--step", step, "tau grid step for figure 1")->capture_default_str();
  fig->callback([&] {
    action = [&] {
      Output out(g.out);
      if (name == "1") {
        write_fig1_csv(out.get(), fig1_data({2, 3, 4, 5}, uniform_grid(step)));
        return kOk;
      }
      const auto rows = fig2_data();
      write_fig2_csv(out.get(), rows);
      for (const auto& r : rows)
        if (!r.dominates()) {
          std::cerr << "U does not beat Levenshtein at s=" << r.s << " n=" << r.n << '\n';
          return kMismatch;
        }
      return kOk;
    };
  });

  auto* suite = app.add_subcommand("suite", "Self-check suites: invariants, oracles, duality, rll");
  suite->add_option("name", name)->required()->check(CLI::IsMember({"invariants", "oracles", "duality", "rll"}));
  suite->callback([&] {
    action = [&] {
      const auto result = run_suite(name);
      Output out(g.out);
      write_suite_json(out.get(), result);
      return result.passed() ? kOk : kMismatch;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
