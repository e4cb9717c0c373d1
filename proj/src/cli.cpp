#include "confcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "confcat/bounds_engine.hpp"
#include "confcat/cohen_ring.hpp"
#include "confcat/errors.hpp"
#include "confcat/report_io.hpp"
#include "confcat/vassiliev_trees.hpp"
#include "confcat/verify.hpp"

namespace confcat::cli {

namespace {

bounds::Range parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError(std::string(flag) + ": expected A..B, got '" + text +
                      "'");
  }
}

std::string ring_table(int n, int k) {
  const auto ctx = ring::make_ring(n, k);
  std::ostringstream os;
  os << "H^*(F(R^" << n << "," << k << ")): generator degree "
     << ctx.gen_degree() << " ("
     << (ctx.gen_parity() == ring::Parity::even ? "even" : "odd") << ")\n";
  os << std::left << std::setw(4) << "q" << std::setw(12) << "degree"
     << "rank\n";
  std::int64_t total = 0;
  for (const auto& row : ring::poincare_table(ctx)) {
    os << std::left << std::setw(4) << row.q << std::setw(12) << row.degree
       << row.rank << "\n";
    total += row.rank;
  }
  os << "total " << total << "\n";
  return os.str();
}

std::string ring_basis(int n, int k, int q) {
  const auto ctx = ring::make_ring(n, k);
  const auto b = ring::basis(ctx, q);
  std::ostringstream os;
  os << "basis of H^" << q * ctx.gen_degree() << "(F(R^" << n << "," << k
     << ")): " << b.size() << " monomials\n";
  for (const auto& m : b) os << ring::to_string(m.factors) << "\n";
  return os.str();
}

std::string trees_summary(int n, int k, bool search) {
  const auto mode = search ? trees::Mode::search : trees::Mode::closed_form;
  const auto me = trees::min_edges(n, k, mode);
  const auto range = trees::cell_dim_range(n, k);
  std::ostringstream os;
  os << "min_edges " << me.value << " ("
     << (search ? "search" : "closed_form") << ")\n";
  os << "trees " << me.witness.trees.size() << "\n";
  for (const auto& t : me.witness.trees) {
    os << "  " << trees::to_string(t) << " edges " << t.edges() << " depth "
       << t.depth() << "\n";
  }
  os << "cohdim_mod2 " << trees::cohdim_mod2(n, k) << "\n";
  os << "cell_dim_range " << range.min << ".." << range.max << "\n";
  return os.str();
}

std::string verify_report(const verify::VerifyOptions& opts, bool& ok) {
  std::ostringstream os;
  ok = true;
  for (const auto& s : verify::run_all(opts)) {
    os << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail
       << "\n";
    ok = ok && s.passed;
  }
  return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Topological invariants of Euclidean configuration spaces",
               "confcat"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int q = -1;
  bool dot = false;
  bool search = false;
  std::string invariant;
  std::string format = "md";
  std::string n_range;
  std::string k_range;
  verify::VerifyOptions vopts;

  auto* ring_cmd = app.add_subcommand(
      "ring", "Rank table or basis of the cohomology ring of F(R^n,k)");
  ring_cmd->add_option("--n", n, "ambient dimension (>= 2)")->required();
  ring_cmd->add_option("--k", k, "number of points (>= 1)")->required();
  ring_cmd->add_option("--q", q, "list the basis with q factors");

  auto* cup_cmd = app.add_subcommand("cuplength", "Integral cuplength");
  cup_cmd->add_option("--n", n)->required();
  cup_cmd->add_option("--k", k)->required();

  auto* trees_cmd = app.add_subcommand(
      "trees", "Minimal labeling-tree collections and mod 2 cohdim");
  trees_cmd->add_option("--n", n)->required();
  trees_cmd->add_option("--k", k)->required();
  trees_cmd->add_flag("--dot", dot, "emit the witness as DOT digraphs");
  trees_cmd->add_flag("--search", search, "exhaustive search, not the formula");

  auto* bounds_cmd = app.add_subcommand("bounds", "Certified interval");
  bounds_cmd->add_option("--invariant", invariant)
      ->required()
      ->check(CLI::IsMember({"cat_F", "cat_B", "secat"}));
  bounds_cmd->add_option("--n", n)->required();
  bounds_cmd->add_option("--k", k)->required();
  bounds_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "md"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Table over ranges of n, k");
  sweep_cmd->add_option("--n", n_range, "A..B")->required();
  sweep_cmd->add_option("--k", k_range, "C..D")->required();
  sweep_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "md"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suites");
  verify_cmd->add_option("--seed", vopts.seed, "seed for randomized suites");
  verify_cmd->add_option("--max-k", vopts.max_k, "largest k for ring suites");

  Outcome result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  std::ostringstream out;
  try {
    if (*ring_cmd) {
      out << (q >= 0 ? ring_basis(n, k, q) : ring_table(n, k));
    } else if (*cup_cmd) {
      const auto cl = ring::cuplength(ring::make_ring(n, k));
      out << cl.value << "\nwitness " << ring::to_string(cl.witness.factors)
          << "\n";
    } else if (*trees_cmd) {
      if (dot) {
        const auto mode = search ? trees::Mode::search : trees::Mode::closed_form;
        out << trees::to_dot(trees::min_edges(n, k, mode).witness);
      } else {
        out << trees_summary(n, k, search);
      }
    } else if (*bounds_cmd) {
      const auto r = bounds::evaluate(bounds::parse_invariant(invariant), n, k);
      if (format == "json") {
        out << bounds::to_json(r).dump(2) << "\n";
      } else {
        out << bounds::to_markdown(r);
      }
    } else if (*sweep_cmd) {
      const auto reports = bounds::sweep(parse_range(n_range, "--n"),
                                         parse_range(k_range, "--k"));
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(bounds::to_json(r));
        out << arr.dump(2) << "\n";
      } else {
        out << bounds::sweep_to_markdown(reports);
      }
    } else if (*verify_cmd) {
      bool ok = true;
      out << verify_report(vopts, ok);
      if (!ok) result.exit_code = kVerifyFailed;
    }
  } catch (const InconsistencyError& e) {
    result.exit_code = kInconsistency;
    result.err = std::string("internal inconsistency: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    // DomainError, OverflowError and friends.
    result.exit_code = kDomainError;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.out = out.str();
  return result;
}

}  // namespace confcat::cli
