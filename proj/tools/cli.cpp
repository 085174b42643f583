#include "cli.hpp"

#include <chrono>    // for steady_clock
#include <cstdlib>   // for getenv
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <thread>    // for thread

#include <CLI11.hpp>
#include <json.hpp>

#include "freegrowth/congruences.hpp"
#include "freegrowth/errors.hpp"
#include "freegrowth/golden.hpp"
#include "freegrowth/ideals.hpp"
#include "freegrowth/patterns.hpp"
#include "freegrowth/tree.hpp"

namespace freegrowth::cli {

  namespace {
    using clock = std::chrono::steady_clock;

    std::size_t default_threads() {
      if (char const* env = std::getenv("FREEGROWTH_THREADS");
          env != nullptr && *env != '\0') {
        try {
          std::size_t used = 0;
          auto const  v    = std::stoul(env, &used);
          if (used == std::string(env).size() && v > 0) {
            return v;
          }
        } catch (std::exception const&) {
        }
        throw Error("FREEGROWTH_THREADS must be a positive integer");
      }
      return std::max(1u, std::thread::hardware_concurrency());
    }

    std::optional<Deadline> deadline_from(std::string const& budget) {
      if (budget.empty()) {
        return std::nullopt;
      }
      return clock::now() + parse_budget(budget);
    }

    void check_deadline(std::optional<Deadline> const& deadline) {
      if (deadline && clock::now() > *deadline) {
        throw BudgetExhausted();
      }
    }

    nlohmann::json to_json(BigInt const& v) {
      if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(v);
      }
      return v.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // count
    ////////////////////////////////////////////////////////////////////////

    struct CountArgs {
      std::string kind = "subsemigroup";
      std::size_t rank = 0;
      std::size_t max_index = 0;
      std::size_t max_classes = 0;
      std::size_t threads = 0;
      std::string checkpoint;
      std::size_t checkpoint_depth = 0;
      std::string format = "csv";
      std::string budget;
      bool        long_run = false;
    };

    std::vector<BigInt> congruence_counts(std::size_t               rank,
                                          std::size_t               n_max,
                                          TableSearchOptions const& opts,
                                          std::optional<Deadline>   deadline) {
      std::vector<BigInt> out;
      for (std::size_t n = 1; n <= n_max; ++n) {
        check_deadline(deadline);
        out.push_back(count_congruences(n, rank, enumerate_T(n, opts)));
      }
      return out;
    }

    int cmd_count(CountArgs const& a, std::ostream& out) {
      auto const        start   = clock::now();
      std::size_t const threads = a.threads == 0 ? default_threads() : a.threads;
      auto const        deadline = deadline_from(a.budget);

      std::size_t n_max = a.kind == "congruence" && a.max_classes != 0
                              ? a.max_classes
                              : a.max_index;
      if (n_max == 0) {
        throw Error(a.kind == "congruence" ? "--max-classes is required"
                                           : "--max-index is required");
      }
      if (a.rank == 0) {
        throw Error("--rank must be at least 1");
      }

      std::vector<BigInt> values;
      if (a.kind == "subsemigroup" || a.kind == "ideal") {
        EnumerationOptions opts;
        opts.threads          = threads;
        opts.checkpoint_path  = a.checkpoint;
        opts.checkpoint_depth = a.checkpoint_depth;
        opts.deadline         = deadline;
        values = a.kind == "subsemigroup"
                     ? count_subsemigroups(a.rank, n_max, opts)
                     : count_two_sided_ideals(a.rank, n_max, opts);
      } else if (a.kind == "right-ideal") {
        for (std::size_t n = 1; n <= n_max; ++n) {
          values.push_back(fuss_catalan_right_ideals(n, a.rank));
        }
      } else {
        values = congruence_counts(
            a.rank, n_max, TableSearchOptions{threads, a.long_run}, deadline);
      }

      if (a.format == "csv") {
        out << "n,count\n";
        for (std::size_t n = 1; n <= values.size(); ++n) {
          out << n << ',' << values[n - 1] << '\n';
        }
      } else {
        nlohmann::json j;
        j["kind"] = a.kind;
        j["rank"] = a.rank;
        j["values"] = nlohmann::json::array();
        for (std::size_t n = 1; n <= values.size(); ++n) {
          j["values"].push_back({{"index", n}, {"count", to_json(values[n - 1])}});
        }
        j["meta"] = {{"threads", threads},
                     {"elapsed_ms",
                      std::chrono::duration_cast<std::chrono::milliseconds>(
                          clock::now() - start)
                          .count()},
                     {"version", FREEGROWTH_VERSION}};
        out << j.dump() << '\n';
      }
      return exit_code::ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // fit
    ////////////////////////////////////////////////////////////////////////

    int cmd_fit(std::string const& kind,
                std::size_t        n,
                std::size_t        threads,
                bool               long_run,
                std::ostream&      out) {
      if (n == 0) {
        throw Error("--index must be at least 1");
      }
      threads = threads == 0 ? default_threads() : threads;
      std::string lhs, rhs;
      if (kind == "subsemigroup") {
        lhs = "a_" + std::to_string(n) + "(FS_r)";
        rhs = polynomial_from_Z(n, threads).to_string();
      } else if (kind == "ideal") {
        lhs = "a_" + std::to_string(n) + "^I(FS_r)";
        rhs = ideal_polynomial_from_Z(n, threads).to_string();
      } else if (kind == "right-ideal") {
        lhs = "a_" + std::to_string(n) + "^RI(FS_r)";
        rhs = right_ideal_polynomial(n).to_string();
      } else {
        lhs = "a_" + std::to_string(n) + "^C(FS_r)";
        rhs = congruence_exponential_form(
                  enumerate_T(n, TableSearchOptions{threads, long_run}))
                  .to_string();
      }
      out << lhs << " = " << rhs << '\n';
      return exit_code::ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    std::ostream& operator<<(std::ostream& os, GrowthPolynomial const& p) {
      return os << p.to_string();
    }

    std::ostream& operator<<(std::ostream& os, ExponentialForm const& e) {
      return os << e.to_string();
    }

    class Report {
     public:
      explicit Report(std::ostream& out) : _out(out) {}

      template <typename T>
      void cell(std::string const& label, T const& expected, T const& actual) {
        ++_checked;
        bool const same = expected == actual;
        if (!same) {
          ++_mismatches;
        }
        _out << label << ": " << (same ? "ok" : "MISMATCH");
        if (!same) {
          _out << " (expected " << expected << ", computed " << actual << ')';
        }
        _out << '\n';
      }

      void summary(bool partial) const {
        _out << (partial ? "partial: " : "") << _checked << " cells checked, "
             << _mismatches << " mismatches\n";
      }

      std::size_t mismatches() const noexcept {
        return _mismatches;
      }

     private:
      std::ostream& _out;
      std::size_t   _checked    = 0;
      std::size_t   _mismatches = 0;
    };

    std::string rn(std::size_t r, std::size_t n) {
      return "r=" + std::to_string(r) + " n=" + std::to_string(n);
    }

    struct VerifyContext {
      GoldenData              golden;
      std::size_t             threads;
      bool                    long_run;
      std::optional<Deadline> deadline;
      Report&                 report;

      EnumerationOptions tree_options() const {
        EnumerationOptions opts;
        opts.threads  = threads;
        opts.deadline = deadline;
        return opts;
      }
    };

    void verify_tree_rows(VerifyContext&     ctx,
                          std::string const& scope,
                          TreeKind           kind,
                          std::map<std::pair<std::size_t, std::size_t>,
                                   BigInt> const& table,
                          std::size_t        rank,
                          std::size_t        n_max) {
      check_deadline(ctx.deadline);
      auto const counts = kind == TreeKind::subsemigroup
                              ? count_subsemigroups(rank, n_max, ctx.tree_options())
                              : count_two_sided_ideals(rank, n_max,
                                                       ctx.tree_options());
      for (std::size_t n = 1; n <= n_max; ++n) {
        ctx.report.cell(scope + " " + rn(rank, n), table.at({rank, n}),
                        counts[n - 1]);
      }
    }

    void verify_polynomials(VerifyContext&     ctx,
                            std::string const& scope,
                            TreeKind           kind,
                            std::map<std::size_t, GrowthPolynomial> const& published,
                            std::map<std::pair<std::size_t, std::size_t>,
                                     BigInt> const& table,
                            std::size_t        n_max) {
      check_deadline(ctx.deadline);
      auto const levels = compute_Z_sets(kind, n_max, ctx.threads);
      for (std::size_t n = 1; n <= n_max; ++n) {
        check_deadline(ctx.deadline);
        GrowthPolynomial const p = polynomial_from_Z(levels[n - 1]);
        ctx.report.cell(scope + " polynomial n=" + std::to_string(n),
                        published.at(n), p);
        for (auto const& [key, value] : table) {
          if (key.second == n) {
            ctx.report.cell(scope + " polynomial " + rn(key.first, n) , value,
                            p.evaluate(key.first));
          }
        }
      }
    }

    void verify_appendix_a(VerifyContext& ctx) {
      auto const& t = ctx.golden.subsemigroups;
      verify_tree_rows(ctx, "appendix-a", TreeKind::subsemigroup, t, 1,
                       ctx.long_run ? 9 : 6);
      verify_tree_rows(ctx, "appendix-a", TreeKind::subsemigroup, t, 2,
                       ctx.long_run ? 9 : 6);
      verify_tree_rows(ctx, "appendix-a", TreeKind::subsemigroup, t, 3, 6);
      verify_polynomials(ctx, "appendix-a", TreeKind::subsemigroup,
                         ctx.golden.subsemigroup_polynomials, t,
                         ctx.long_run ? 5 : 4);
    }

    void verify_appendix_b(VerifyContext& ctx) {
      auto const& t = ctx.golden.ideals;
      for (std::size_t r = 1; r <= 4; ++r) {
        verify_tree_rows(ctx, "appendix-b", TreeKind::ideal, t, r,
                         r == 2 ? 12 : 8);
      }
      verify_polynomials(ctx, "appendix-b", TreeKind::ideal,
                         ctx.golden.ideal_polynomials, t, ctx.long_run ? 6 : 4);
    }

    std::map<std::size_t, std::vector<BigInt>> table_counts(VerifyContext& ctx,
                                                            std::size_t n_max) {
      std::map<std::size_t, std::vector<BigInt>> out;
      for (std::size_t n = 1; n <= n_max; ++n) {
        check_deadline(ctx.deadline);
        out[n] = enumerate_T(n, TableSearchOptions{ctx.threads, ctx.long_run});
      }
      return out;
    }

    void verify_appendix_c(VerifyContext& ctx) {
      auto const t = table_counts(ctx, ctx.long_run ? 5 : 4);
      for (auto const& [n, counts] : t) {
        ExponentialForm const e = congruence_exponential_form(counts);
        ctx.report.cell("appendix-c exponential n=" + std::to_string(n),
                        ctx.golden.congruence_forms.at(n), e);
        for (std::size_t r = 1; r <= 10; ++r) {
          BigInt const& expected = ctx.golden.congruences.at({r, n});
          ctx.report.cell("appendix-c stirling " + rn(r, n), expected,
                          count_congruences(n, r, counts));
          ctx.report.cell("appendix-c exponential " + rn(r, n), expected,
                          e.evaluate(r));
        }
      }
    }

    void verify_appendix_d(VerifyContext& ctx) {
      check_deadline(ctx.deadline);
      auto const rows = central_binomial_comparison(
          ctx.golden.central_binomial.size(), ctx.tree_options());
      for (auto const& row : ctx.golden.central_binomial) {
        auto const& got   = rows.at(row.n - 1);
        std::string label = "appendix-d n=" + std::to_string(row.n);
        ctx.report.cell(label + " a_I", row.ideals, got.ideals);
        ctx.report.cell(label + " central_binomial", row.central_binomial,
                        got.central_binomial);
        ctx.report.cell(label + " difference", row.difference, got.difference);
      }
    }

    void verify_table_1(VerifyContext& ctx) {
      auto const t = table_counts(ctx, ctx.long_run ? 5 : 4);
      for (auto const& [n, counts] : t) {
        for (std::size_t k = 1; k <= n; ++k) {
          ctx.report.cell("table-1 n=" + std::to_string(n)
                              + " k=" + std::to_string(k),
                          ctx.golden.tables.at({n, k}), counts[k - 1]);
        }
      }
    }

    int cmd_verify(std::string const& scope,
                   std::string const& budget,
                   std::size_t        threads,
                   bool               long_run,
                   std::string const& data_dir,
                   std::ostream&      out) {
      Report        report(out);
      VerifyContext ctx{load_golden(data_dir.empty() ? default_data_dir()
                                                     : std::filesystem::path(data_dir)),
                        threads == 0 ? default_threads() : threads,
                        long_run,
                        deadline_from(budget),
                        report};
      try {
        if (scope == "appendix-a" || scope == "all") {
          verify_appendix_a(ctx);
        }
        if (scope == "appendix-b" || scope == "all") {
          verify_appendix_b(ctx);
        }
        if (scope == "appendix-c" || scope == "all") {
          verify_appendix_c(ctx);
        }
        if (scope == "appendix-d" || scope == "all") {
          verify_appendix_d(ctx);
        }
        if (scope == "table-1" || scope == "all") {
          verify_table_1(ctx);
        }
      } catch (BudgetExhausted const&) {
        report.summary(true);
        return exit_code::budget_exhausted;
      }
      report.summary(false);
      return report.mismatches() == 0 ? exit_code::ok : exit_code::mismatch;
    }
  }  // namespace

  std::chrono::seconds parse_budget(std::string const& text) {
    if (text.empty()) {
      throw Error("empty budget");
    }
    std::size_t   used = 0;
    unsigned long value;
    try {
      value = std::stoul(text, &used);
    } catch (std::exception const&) {
      throw Error("malformed budget \"" + text + "\"");
    }
    std::string const unit = text.substr(used);
    if (unit.empty() || unit == "s") {
      return std::chrono::seconds(value);
    } else if (unit == "m") {
      return std::chrono::minutes(value);
    } else if (unit == "h") {
      return std::chrono::hours(value);
    }
    throw Error("malformed budget \"" + text + "\" (use e.g. 30s, 10m, 2h)");
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Growth of subsemigroups, ideals and congruences of free "
                 "semigroups",
                 "freegrowth"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FREEGROWTH_VERSION);

    std::vector<std::string> const kinds{"subsemigroup", "ideal", "right-ideal",
                                         "congruence"};

    CountArgs count;
    auto*     c = app.add_subcommand("count", "Count a_1 .. a_n for one rank");
    c->add_option("--kind", count.kind)->check(CLI::IsMember(kinds));
    c->add_option("--rank,-r", count.rank, "Rank r of FS_r")->required();
    c->add_option("--max-index,-n", count.max_index);
    c->add_option("--max-classes", count.max_classes);
    c->add_option("--threads,-t", count.threads, "Default: $FREEGROWTH_THREADS");
    c->add_option("--checkpoint", count.checkpoint, "Checkpoint file to resume or create");
    c->add_option("--checkpoint-depth", count.checkpoint_depth);
    c->add_option("--format", count.format)
        ->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--budget", count.budget, "Time budget, e.g. 30s or 10m");
    c->add_flag("--long", count.long_run, "Allow long runs (order-5 tables)");

    std::string fit_kind = "subsemigroup";
    std::size_t fit_n = 0, fit_threads = 0;
    bool        fit_long = false;
    auto*       f = app.add_subcommand("fit", "Exact growth formula for one index");
    f->add_option("--kind", fit_kind)->check(CLI::IsMember(kinds));
    f->add_option("--index,-n", fit_n)->required();
    f->add_option("--threads,-t", fit_threads);
    f->add_flag("--long", fit_long);

    std::string scope = "all", budget, data_dir;
    std::size_t verify_threads = 0;
    bool        verify_long    = false;
    auto*       v = app.add_subcommand("verify", "Recompute the published tables");
    v->add_option("--scope", scope)
        ->check(CLI::IsMember({"appendix-a", "appendix-b", "appendix-c",
                               "appendix-d", "table-1", "all"}));
    v->add_option("--budget", budget);
    v->add_option("--threads,-t", verify_threads);
    v->add_flag("--long", verify_long);
    v->add_option("--data-dir", data_dir);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForVersion const&) {
      out << FREEGROWTH_VERSION << '\n';
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      err << "freegrowth: " << e.what() << '\n';
      return exit_code::invalid_flags;
    }

    try {
      if (!count.budget.empty()) {
        parse_budget(count.budget);
      }
      if (!budget.empty()) {
        parse_budget(budget);
      }
      if (c->parsed()) {
        return cmd_count(count, out);
      } else if (f->parsed()) {
        return cmd_fit(fit_kind, fit_n, fit_threads, fit_long, out);
      } else {
        return cmd_verify(scope, budget, verify_threads, verify_long, data_dir,
                          out);
      }
    } catch (BudgetExhausted const& e) {
      err << "freegrowth: " << e.what() << '\n';
      return exit_code::budget_exhausted;
    } catch (ResourceLimit const& e) {
      err << "freegrowth: resource limit: " << e.what() << '\n';
      return exit_code::resource_limit;
    } catch (InternalError const& e) {
      err << "freegrowth: internal error: " << e.what() << '\n';
      return exit_code::internal_error;
    } catch (Error const& e) {
      err << "freegrowth: " << e.what() << '\n';
      return exit_code::invalid_flags;
    } catch (std::exception const& e) {
      err << "freegrowth: internal error: " << e.what() << '\n';
      return exit_code::internal_error;
    }
  }

}  // namespace freegrowth::cli
