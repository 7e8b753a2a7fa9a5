#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "luroth/construction.hpp"
#include "luroth/errors.hpp"
#include "luroth/expansion.hpp"
#include "luroth/experiments.hpp"
#include "luroth/moran.hpp"
#include "luroth/rational.hpp"
#include "luroth/runlength.hpp"

namespace luroth::cli {

namespace {

using nlohmann::json;

// ── output plumbing ─────────────────────────────────────────────────────────

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string cell_to_csv(const json& v) {
  if (v.is_string()) return csv_quote(v.get<std::string>());
  if (v.is_null()) return "";
  return v.dump();
}

/// One table per invocation: provenance + header + typed rows. CSV renders
/// provenance as '#' comment lines; JSON carries it in a params object.
class Table {
 public:
  explicit Table(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, const json& value) { params_[key] = value; }
  void columns(std::vector<std::string> cols) { columns_ = std::move(cols); }
  void row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  /// headerless digit payload (`expand`, `construct`): the digits
  /// themselves form the CSV record
  void digits_payload(const DigitString& d) { digits_ = d; }

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json doc;
      doc["command"] = command_;
      doc["params"] = params_;
      if (digits_) {
        doc["digits"] = *digits_;
      } else {
        doc["columns"] = columns_;
        doc["rows"] = rows_;
      }
      os << doc.dump(2) << "\n";
      return;
    }
    os << "# command=" << command_ << "\n";
    for (auto it = params_.begin(); it != params_.end(); ++it)
      os << "# " << it.key() << "=" << (it.value().is_string()
                                            ? it.value().get<std::string>()
                                            : it.value().dump())
         << "\n";
    if (digits_) {
      os << format_digits(*digits_) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
      os << (i ? "," : "") << csv_quote(columns_[i]);
    os << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_to_csv(r[i]);
      os << "\n";
    }
  }

 private:
  std::string command_;
  json params_ = json::object();
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
  std::optional<DigitString> digits_;
};

struct Output {
  std::string format = "csv";
  std::string path;

  void emit(const Table& t, std::ostream& fallback) const {
    if (path.empty()) {
      t.write(fallback, format);
      return;
    }
    std::ofstream f(path);
    if (!f) throw domain_error("cannot open output file '" + path + "'");
    t.write(f, format);
  }
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.path, "write output to this file instead of stdout");
}

// ── shared argument groups ──────────────────────────────────────────────────

struct SchedArgs {
  std::string alpha, beta;
  std::int64_t M = 3;
  int k_max = 6;
  std::int64_t digit_budget = 1'000'000;
};

void add_sched_options(CLI::App* cmd, SchedArgs& a) {
  cmd->add_option("--alpha", a.alpha, "liminf target, rational or decimal")->required();
  cmd->add_option("--beta", a.beta, "limsup target, rational or decimal")->required();
  cmd->add_option("--M", a.M, "digit alphabet bound, >= 3")->capture_default_str();
  cmd->add_option("--k-max", a.k_max, "number of schedule blocks")->capture_default_str();
  cmd->add_option("--digit-budget", a.digit_budget, "cap on schedule entries")
      ->capture_default_str();
}

construction::Schedule make_schedule(const SchedArgs& a, Table& t) {
  t.param("alpha", a.alpha);
  t.param("beta", a.beta);
  t.param("M", a.M);
  t.param("k_max", a.k_max);
  return construction::build_schedule(parse_rational(a.alpha), parse_rational(a.beta), a.M,
                                      a.k_max, a.digit_budget);
}

unsigned env_precision_bits() {
  const char* env = std::getenv("LUROTH_PRECISION_BITS");
  if (!env) return 53;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw domain_error("LUROTH_PRECISION_BITS must be a positive integer");
  return static_cast<unsigned>(v);
}

std::string dim_case_name(moran::DimCase c) {
  switch (c) {
    case moran::DimCase::one: return "one";
    case moran::DimCase::middle: return "middle";
    case moran::DimCase::zero: return "zero";
  }
  return "?";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Luroth expansions, run-length statistics, certified pressure roots,\n"
               "and the run-profile point construction with its measure and gap checks"};
  app.require_subcommand(1);
  std::vector<std::function<void()>> actions;

  unsigned precision_bits = 53;

  // expand ------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("expand", "digit string of a rational point");
    auto x = std::make_shared<std::string>();
    auto n = std::make_shared<std::int64_t>(10);
    auto o = std::make_shared<Output>();
    cmd->add_option("--x", *x, "point in (0,1], as p/q")->required();
    cmd->add_option("--n", *n, "number of digits")->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("expand");
      t.param("x", *x);
      t.param("n", *n);
      if (*n < 1) throw domain_error("--n must be >= 1");
      t.digits_payload(expansion::digits(parse_rational(*x), static_cast<std::size_t>(*n)));
      o->emit(t, out);
    });
  }

  // reconstruct ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("reconstruct", "exact value of a finite digit string");
    auto d = std::make_shared<std::string>();
    auto o = std::make_shared<Output>();
    cmd->add_option("--digits", *d, "comma-separated digits, each >= 2")->required();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("reconstruct");
      t.param("digits", *d);
      t.columns({"value"});
      t.row({to_string(expansion::evaluate(parse_digits(*d)))});
      o->emit(t, out);
    });
  }

  // cylinder ------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("cylinder", "cylinder interval of a digit string");
    auto d = std::make_shared<std::string>();
    auto o = std::make_shared<Output>();
    cmd->add_option("--digits", *d)->required();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("cylinder");
      t.param("digits", *d);
      const auto word = parse_digits(*d);
      const auto iv = expansion::cylinder(word);
      t.columns({"left", "right", "length"});
      t.row({to_string(iv.left), to_string(iv.right), to_string(iv.length())});
      o->emit(t, out);
    });
  }

  // runlength -------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("runlength", "run-length trajectory of a digit string");
    auto d = std::make_shared<std::string>();
    auto scale = std::make_shared<std::string>("linear");
    auto tail = std::make_shared<double>(0.0);
    auto o = std::make_shared<Output>();
    cmd->add_option("--digits", *d)->required();
    cmd->add_option("--scale", *scale)->check(CLI::IsMember({"linear", "log2"}))
        ->capture_default_str();
    cmd->add_option("--tail", *tail, "tail fraction for the inf/sup estimate");
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("runlength");
      t.param("digits", *d);
      t.param("scale", *scale);
      const auto word = parse_digits(*d);
      const auto traj = runlength::run_trajectory(word);
      const auto sc = *scale == "linear" ? runlength::RatioScale::linear
                                         : runlength::RatioScale::log2;
      const auto ratios = runlength::growth_ratios(traj, sc);
      const std::size_t first_n = *scale == "linear" ? 1 : 2;
      t.columns({"n", "ell_n", "ratio"});
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        const std::size_t n = first_n + i;
        t.row({static_cast<std::int64_t>(n), traj[n - 1], ratios[i]});
      }
      if (*tail > 0) {
        const auto [lo, hi] = runlength::inf_sup_estimate(ratios, *tail);
        t.param("tail", *tail);
        t.param("inf_estimate", lo);
        t.param("sup_estimate", hi);
      }
      o->emit(t, out);
    });
  }

  // solve-s -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("solve-s",
                                   "certified pressure-equation root (full or truncated alphabet)");
    auto u = std::make_shared<double>();
    auto M = std::make_shared<std::int64_t>(0);
    auto tol = std::make_shared<double>(1e-10);
    auto o = std::make_shared<Output>();
    cmd->add_option("--u", *u, "exponential weight")->required();
    cmd->add_option("--M", *M, "alphabet cutoff; omit for the full series");
    cmd->add_option("--tol", *tol)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out, &precision_bits]() {
      Table t("solve-s");
      t.param("u", *u);
      t.param("tol", *tol);
      t.param("precision_bits", precision_bits);
      moran::SolveOptions opts{};
      opts.tol = *tol;
      opts.precision_bits = precision_bits;
      const auto c = *M >= 2 ? moran::solve_sM(*u, *M, opts) : moran::solve_s(*u, opts);
      if (*M >= 2) t.param("M", *M);
      t.columns({"value", "error_bound"});
      t.row({c.value, c.error_bound});
      o->emit(t, out);
    });
  }

  // dim -----------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dim", "dimension of the exceptional set for (alpha, beta)");
    auto alpha = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-10);
    auto o = std::make_shared<Output>();
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--beta", *beta)->required();
    cmd->add_option("--tol", *tol)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out, &precision_bits]() {
      Table t("dim");
      t.param("alpha", *alpha);
      t.param("beta", *beta);
      t.param("tol", *tol);
      const Rational a = parse_rational(*alpha), b = parse_rational(*beta);
      moran::SolveOptions opts{};
      opts.tol = *tol;
      opts.precision_bits = precision_bits;
      const auto c = moran::dim_E(a, b, opts);
      t.columns({"alpha", "beta", "case", "dim", "err"});
      t.row({to_string(a), to_string(b), dim_case_name(moran::dim_case(a, b)), c.value,
             c.error_bound});
      o->emit(t, out);
    });
  }

  // dim-surface -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dim-surface", "dimension over a (alpha, beta) grid");
    auto grid = std::make_shared<std::int64_t>(11);
    auto tol = std::make_shared<double>(1e-8);
    auto o = std::make_shared<Output>();
    cmd->add_option("--grid", *grid, "points per axis")->capture_default_str();
    cmd->add_option("--tol", *tol)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out, &precision_bits]() {
      Table t("dim-surface");
      t.param("grid", *grid);
      t.param("tol", *tol);
      moran::SolveOptions opts{};
      opts.tol = *tol;
      opts.precision_bits = precision_bits;
      t.columns({"alpha", "beta", "case", "dim", "err"});
      for (const auto& r : experiments::dim_surface(*grid, opts)) {
        if (!r.valid) {
          t.row({to_string(r.alpha), to_string(r.beta), "", nullptr, nullptr});
        } else {
          t.row({to_string(r.alpha), to_string(r.beta), dim_case_name(r.dim_case),
                 r.dim.value, r.dim.error_bound});
        }
      }
      o->emit(t, out);
    });
  }

  // schedule ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("schedule", "block schedule for (alpha, beta, M)");
    auto a = std::make_shared<SchedArgs>();
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("schedule");
      const auto s = make_schedule(*a, t);
      if (o->format == "json") {
        json rec;
        rec["alpha"] = to_string(s.alpha);
        rec["beta"] = to_string(s.beta);
        rec["M"] = s.M;
        rec["k_max"] = s.k_max;
        rec["n"] = s.n;
        rec["m"] = s.m;
        rec["p"] = s.p;
        rec["n_prime"] = s.n_prime;
        json us = json::array();
        for (const auto& u : s.u) us.push_back(to_string(u));
        rec["u"] = us;
        rec["point_horizon"] = s.point_horizon;
        rec["word_horizon"] = s.word_horizon;
        json doc;
        doc["command"] = "schedule";
        doc["schedule"] = rec;
        if (o->path.empty()) {
          out << doc.dump(2) << "\n";
        } else {
          std::ofstream f(o->path);
          if (!f) throw domain_error("cannot open output file '" + o->path + "'");
          f << doc.dump(2) << "\n";
        }
        return;
      }
      t.columns({"k", "n", "m", "p", "n_prime", "u"});
      for (int k = 1; k <= s.k_max; ++k) {
        t.row({k, s.n_at(k), s.m_at(k),
               k < s.k_max ? json(s.p_at(k)) : json(nullptr), s.n_prime_at(k),
               to_string(s.u_at(k))});
      }
      o->emit(t, out);
    });
  }

  // construct -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("construct",
                                   "generate a point of the schedule's digit set");
    auto a = std::make_shared<SchedArgs>();
    auto depth = std::make_shared<std::int64_t>();
    auto fill = std::make_shared<std::string>("seeded");
    auto fill_c = std::make_shared<std::int64_t>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto emit = std::make_shared<std::string>("point");
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    cmd->add_option("--depth", *depth, "number of digits to generate")->required();
    cmd->add_option("--fill", *fill)->check(CLI::IsMember({"seeded", "constant"}))
        ->capture_default_str();
    cmd->add_option("--c", *fill_c, "constant fill digit")->capture_default_str();
    auto* seed_opt = cmd->add_option("--seed", *seed, "required for seeded fill");
    cmd->add_option("--emit", *emit)->check(CLI::IsMember({"point", "image", "profile"}))
        ->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("construct");
      const auto s = make_schedule(*a, t);
      construction::Fill f;
      if (*fill == "constant") {
        f = construction::Fill::constant(*fill_c);
        t.param("fill", "constant");
        t.param("c", *fill_c);
      } else {
        if (seed_opt->count() == 0)
          throw domain_error("--seed is required for the seeded fill");
        f = construction::Fill::seeded(*seed);
        t.param("fill", "seeded");
        t.param("seed", *seed);
      }
      t.param("depth", *depth);
      t.param("emit", *emit);
      const DigitString pt = construction::generate_point(s, f, *depth);
      if (*emit == "point") {
        t.digits_payload(pt);
      } else if (*emit == "image") {
        t.digits_payload(construction::project_f(s, pt));
      } else {
        const auto rep = construction::run_profile_check(s, pt);
        t.columns({"k", "m_over_nk_mk", "m_over_nk1_mk", "u_k", "profile_ok",
                   "first_mismatch_n"});
        for (const auto& r : rep.ratios)
          t.row({r.k, r.m_over_nk_mk, r.m_over_nk1_mk, r.u_k, rep.ok,
                 rep.ok ? json(nullptr) : json(rep.first_mismatch_n)});
      }
      o->emit(t, out);
    });
  }

  // enumerate -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("enumerate",
                                   "admissible words with interval, mass and gap data");
    auto a = std::make_shared<SchedArgs>();
    auto depth = std::make_shared<std::int64_t>();
    auto tol = std::make_shared<double>(1e-10);
    auto budget = std::make_shared<std::int64_t>(std::int64_t{1} << 22);
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    cmd->add_option("--depth", *depth)->required();
    cmd->add_option("--tol", *tol)->capture_default_str();
    cmd->add_option("--enum-budget", *budget)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out, &precision_bits]() {
      Table t("enumerate");
      const auto s = make_schedule(*a, t);
      t.param("depth", *depth);
      t.param("tol", *tol);
      moran::SolveOptions opts{};
      opts.tol = *tol;
      opts.precision_bits = precision_bits;
      const auto params = construction::measure_params(s, opts);
      const auto words = construction::enumerate_D_n(s, *depth, *budget);
      const auto gaps = construction::gap_table(s, *depth, *budget);
      t.columns({"word", "left", "length", "mu", "gap"});
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto J = construction::fundamental_interval(s, words[i]);
        const auto mu = construction::measure_mu(s, params, words[i]);
        t.row({format_digits(words[i]), to_string(J.interval.left), to_string(J.length),
               mu.value, to_string(gaps[i])});
      }
      o->emit(t, out);
    });
  }

  // mu-check ------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("mu-check",
                                   "measure additivity and total-mass scan at a depth");
    auto a = std::make_shared<SchedArgs>();
    auto depth = std::make_shared<std::int64_t>();
    auto tol = std::make_shared<double>(1e-12);
    auto budget = std::make_shared<std::int64_t>(std::int64_t{1} << 22);
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    cmd->add_option("--depth", *depth)->required();
    cmd->add_option("--tol", *tol)->capture_default_str();
    cmd->add_option("--enum-budget", *budget)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out, &precision_bits]() {
      Table t("mu-check");
      const auto s = make_schedule(*a, t);
      t.param("depth", *depth);
      t.param("tol", *tol);
      moran::SolveOptions opts{};
      opts.tol = *tol;
      opts.precision_bits = precision_bits;
      const auto params = construction::measure_params(s, opts);
      const auto rep = construction::check_mu_consistency(s, params, *depth, *budget);
      t.columns({"depth", "words", "nodes", "max_node_gap", "total_mass", "mass_err_bound",
                 "min_log_ratio"});
      t.row({*depth, rep.words, rep.nodes, rep.max_node_gap, rep.total_mass,
             rep.mass_err_bound, rep.min_log_ratio});
      o->emit(t, out);
    });
  }

  // gap-check -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("gap-check",
                                   "exact gap lower bound over all words up to a depth");
    auto a = std::make_shared<SchedArgs>();
    auto depth = std::make_shared<std::int64_t>();
    auto budget = std::make_shared<std::int64_t>(std::int64_t{1} << 22);
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    cmd->add_option("--depth", *depth, "check depths 1..depth")->required();
    cmd->add_option("--enum-budget", *budget)->capture_default_str();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("gap-check");
      const auto s = make_schedule(*a, t);
      t.param("depth", *depth);
      t.columns({"depth", "words", "ok", "min_gap_over_length"});
      for (std::int64_t n = 1; n <= *depth; ++n) {
        const auto words = construction::enumerate_D_n(s, n, *budget);
        const auto gaps = construction::gap_table(s, n, *budget);
        bool ok = true;
        double min_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < words.size(); ++i) {
          const auto J = construction::fundamental_interval(s, words[i]);
          if (gaps[i] * (s.M - 1) < J.length) ok = false;  // exact comparison
          min_ratio = std::min(min_ratio, to_double(gaps[i] / J.length));
        }
        t.row({n, static_cast<std::int64_t>(words.size()), ok, min_ratio});
      }
      o->emit(t, out);
    });
  }

  // holder --------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("holder",
                                   "log-distance slope of the separator deletion map");
    auto a = std::make_shared<SchedArgs>();
    auto depth = std::make_shared<std::int64_t>(40);
    auto pairs = std::make_shared<std::int64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>();
    auto o = std::make_shared<Output>();
    add_sched_options(cmd, *a);
    cmd->add_option("--depth", *depth)->capture_default_str();
    cmd->add_option("--pairs", *pairs)->capture_default_str();
    cmd->add_option("--seed", *seed)->required();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("holder");
      const auto s = make_schedule(*a, t);
      t.param("depth", *depth);
      t.param("pairs", *pairs);
      t.param("seed", *seed);
      const auto rep = construction::holder_estimate(s, *depth, *pairs, *seed);
      t.columns({"slope", "intercept", "pairs_used", "min_log_dist", "max_log_dist",
                 "inflation_ok", "max_inflation"});
      t.row({rep.slope, rep.intercept, rep.pairs_used, rep.min_log_dist, rep.max_log_dist,
             rep.inflation_ok, rep.max_inflation});
      o->emit(t, out);
    });
  }

  // lln -----------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("lln",
                                   "run-length law of large numbers over seeded trials");
    auto n = std::make_shared<std::int64_t>();
    auto trials = std::make_shared<std::int64_t>();
    auto seed = std::make_shared<std::uint64_t>();
    auto o = std::make_shared<Output>();
    cmd->add_option("--n", *n, "digits per trial")->required();
    cmd->add_option("--trials", *trials)->required();
    cmd->add_option("--seed", *seed)->required();
    add_output_options(cmd, *o);
    cmd->callback([=, &out]() {
      Table t("lln");
      t.param("n", *n);
      t.param("trials", *trials);
      t.param("seed", *seed);
      const auto s = experiments::lln_experiment({*seed, *trials, *n});
      t.columns({"n", "trials", "mean", "median", "q25", "q75", "min", "max"});
      t.row({s.n, s.trials, s.mean, s.median, s.q25, s.q75, s.min, s.max});
      o->emit(t, out);
    });
  }

  try {
    precision_bits = env_precision_bits();
    std::reverse(args.begin(), args.end());
    app.parse(args);
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const budget_error& e) {
    err << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace luroth::cli
