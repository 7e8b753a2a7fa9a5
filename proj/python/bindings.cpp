// pybind11 surface over the core library; rationals cross the boundary as
// exact "p/q" strings, digit strings as lists of ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "luroth/construction.hpp"
#include "luroth/errors.hpp"
#include "luroth/expansion.hpp"
#include "luroth/experiments.hpp"
#include "luroth/moran.hpp"
#include "luroth/rational.hpp"
#include "luroth/runlength.hpp"

namespace py = pybind11;
using namespace luroth;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

moran::SolveOptions solve_opts(double tol, unsigned precision_bits) {
  moran::SolveOptions o;
  o.tol = tol;
  o.precision_bits = precision_bits;
  return o;
}

construction::Fill make_fill(const std::string& kind, Digit c, std::uint64_t seed) {
  if (kind == "constant") return construction::Fill::constant(c);
  if (kind == "seeded") return construction::Fill::seeded(seed);
  throw luroth::domain_error("fill must be 'constant' or 'seeded'");
}

std::string case_name(moran::DimCase c) {
  switch (c) {
    case moran::DimCase::one: return "one";
    case moran::DimCase::middle: return "middle";
    case moran::DimCase::zero: return "zero";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Luroth expansions, run-length statistics, certified pressure roots,\n"
            "and the run-profile point construction";

  py::register_exception<luroth::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<luroth::budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<moran::CertifiedValue>(m, "CertifiedValue")
      .def_readonly("value", &moran::CertifiedValue::value)
      .def_readonly("error_bound", &moran::CertifiedValue::error_bound)
      .def("__repr__", [](const moran::CertifiedValue& c) {
        return "CertifiedValue(value=" + std::to_string(c.value) +
               ", error_bound=" + std::to_string(c.error_bound) + ")";
      });

  // expansion ---------------------------------------------------------------
  m.def("luroth_map", [](const std::string& x) { return to_string(expansion::luroth_map(rat(x))); },
        py::arg("x"));
  m.def("first_digit", [](const std::string& x) { return expansion::first_digit(rat(x)); },
        py::arg("x"));
  m.def("digits", [](const std::string& x, std::size_t n) { return expansion::digits(rat(x), n); },
        py::arg("x"), py::arg("n"));
  m.def("evaluate", [](const DigitString& w) { return to_string(expansion::evaluate(w)); },
        py::arg("digits"));
  m.def("cylinder",
        [](const DigitString& w) {
          const auto iv = expansion::cylinder(w);
          return py::make_tuple(to_string(iv.left), to_string(iv.right));
        },
        py::arg("digits"));
  m.def("cylinder_length",
        [](const DigitString& w) { return to_string(expansion::cylinder_length(w)); },
        py::arg("digits"));
  m.def("digit_mass", [](Digit t) { return to_string(expansion::digit_mass(t)); }, py::arg("t"));

  // runlength -----------------------------------------------------------------
  m.def("max_run", &runlength::max_run, py::arg("digits"));
  m.def("run_trajectory", &runlength::run_trajectory, py::arg("digits"));
  m.def("growth_ratios",
        [](const runlength::RunTrajectory& traj, const std::string& scale) {
          return runlength::growth_ratios(traj, scale == "log2"
                                                    ? runlength::RatioScale::log2
                                                    : runlength::RatioScale::linear);
        },
        py::arg("trajectory"), py::arg("scale") = "linear");
  m.def("inf_sup_estimate", &runlength::inf_sup_estimate, py::arg("ratios"),
        py::arg("tail_fraction"));

  // moran ---------------------------------------------------------------------
  m.def("pressure_sum",
        [](double u, std::optional<std::int64_t> cutoff, double s, double tol,
           unsigned precision_bits) { return moran::pressure_sum(u, cutoff, s, tol, precision_bits); },
        py::arg("u"), py::arg("cutoff"), py::arg("s"), py::arg("tol") = 1e-10,
        py::arg("precision_bits") = 53);
  m.def("solve_s",
        [](double u, double tol, unsigned bits) { return moran::solve_s(u, solve_opts(tol, bits)); },
        py::arg("u"), py::arg("tol") = 1e-10, py::arg("precision_bits") = 53);
  m.def("solve_sM",
        [](double u, std::int64_t M, double tol, unsigned bits) {
          return moran::solve_sM(u, M, solve_opts(tol, bits));
        },
        py::arg("u"), py::arg("M"), py::arg("tol") = 1e-10, py::arg("precision_bits") = 53);
  m.def("zeta",
        [](const std::string& a, const std::string& b) { return to_string(moran::zeta(rat(a), rat(b))); },
        py::arg("alpha"), py::arg("beta"));
  m.def("dim_case",
        [](const std::string& a, const std::string& b) {
          return case_name(moran::dim_case(rat(a), rat(b)));
        },
        py::arg("alpha"), py::arg("beta"));
  m.def("dim_E",
        [](const std::string& a, const std::string& b, double tol, unsigned bits) {
          return moran::dim_E(rat(a), rat(b), solve_opts(tol, bits));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("tol") = 1e-10,
        py::arg("precision_bits") = 53);
  m.def("finite_depth_pressure_root",
        [](std::int64_t M, int depth, double tol) {
          return moran::finite_depth_pressure_root(M, depth, solve_opts(tol, 53));
        },
        py::arg("M"), py::arg("depth"), py::arg("tol") = 1e-10);

  // construction ---------------------------------------------------------------
  py::class_<construction::Schedule>(m, "Schedule")
      .def_property_readonly("alpha", [](const construction::Schedule& s) { return to_string(s.alpha); })
      .def_property_readonly("beta", [](const construction::Schedule& s) { return to_string(s.beta); })
      .def_readonly("M", &construction::Schedule::M)
      .def_readonly("k_max", &construction::Schedule::k_max)
      .def_readonly("n", &construction::Schedule::n)
      .def_readonly("m", &construction::Schedule::m)
      .def_readonly("p", &construction::Schedule::p)
      .def_readonly("n_prime", &construction::Schedule::n_prime)
      .def_property_readonly("u",
                             [](const construction::Schedule& s) {
                               std::vector<std::string> out;
                               for (const auto& u : s.u) out.push_back(to_string(u));
                               return out;
                             })
      .def_readonly("point_horizon", &construction::Schedule::point_horizon)
      .def_readonly("word_horizon", &construction::Schedule::word_horizon);

  py::class_<construction::MeasureParams>(m, "MeasureParams")
      .def_property_readonly("s", [](const construction::MeasureParams& p) { return p.s; });

  m.def("build_schedule",
        [](const std::string& a, const std::string& b, std::int64_t M, int k_max,
           std::int64_t digit_budget) {
          return construction::build_schedule(rat(a), rat(b), M, k_max, digit_budget);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("M") = 3, py::arg("k_max") = 6,
        py::arg("digit_budget") = 1'000'000);
  m.def("deletion_positions", &construction::deletion_positions, py::arg("schedule"),
        py::arg("N"));
  m.def("generate_point",
        [](const construction::Schedule& s, std::int64_t N, const std::string& fill, Digit c,
           std::uint64_t seed) { return construction::generate_point(s, make_fill(fill, c, seed), N); },
        py::arg("schedule"), py::arg("N"), py::arg("fill") = "seeded", py::arg("c") = 2,
        py::arg("seed") = 0);
  m.def("project_f", &construction::project_f, py::arg("schedule"), py::arg("digits"));
  m.def("is_admissible", &construction::is_admissible, py::arg("schedule"), py::arg("word"));
  m.def("enumerate_D_n", &construction::enumerate_D_n, py::arg("schedule"), py::arg("depth"),
        py::arg("enum_budget") = std::int64_t{1} << 22);
  m.def("run_profile_check",
        [](const construction::Schedule& s, const DigitString& d) {
          const auto rep = construction::run_profile_check(s, d);
          py::dict out;
          out["ok"] = rep.ok;
          out["first_mismatch_n"] = rep.first_mismatch_n;
          out["expected"] = rep.expected;
          out["actual"] = rep.actual;
          out["blocks_checked"] = rep.blocks_checked;
          py::list ratios;
          for (const auto& r : rep.ratios) {
            py::dict row;
            row["k"] = r.k;
            row["m_over_nk_mk"] = r.m_over_nk_mk;
            row["m_over_nk1_mk"] = r.m_over_nk1_mk;
            row["u_k"] = r.u_k;
            ratios.append(row);
          }
          out["ratios"] = ratios;
          return out;
        },
        py::arg("schedule"), py::arg("digits"));
  m.def("fundamental_interval",
        [](const construction::Schedule& s, const DigitString& w) {
          const auto J = construction::fundamental_interval(s, w);
          py::dict out;
          out["left"] = to_string(J.interval.left);
          out["right"] = to_string(J.interval.right);
          out["length"] = to_string(J.length);
          return out;
        },
        py::arg("schedule"), py::arg("word"));
  m.def("measure_params",
        [](const construction::Schedule& s, double tol) {
          return construction::measure_params(s, solve_opts(tol, 53));
        },
        py::arg("schedule"), py::arg("tol") = 1e-12);
  m.def("k0_for_epsilon",
        [](const construction::Schedule& s, const construction::MeasureParams& p, double eps) {
          return construction::k0_for_epsilon(s, p, eps);
        },
        py::arg("schedule"), py::arg("params"), py::arg("eps"));
  m.def("measure_mu", &construction::measure_mu, py::arg("schedule"), py::arg("params"),
        py::arg("word"));
  m.def("log_measure_mu", &construction::log_measure_mu, py::arg("schedule"), py::arg("params"),
        py::arg("word"));
  m.def("check_mu_consistency",
        [](const construction::Schedule& s, const construction::MeasureParams& p,
           std::int64_t depth) {
          const auto rep = construction::check_mu_consistency(s, p, depth);
          py::dict out;
          out["words"] = rep.words;
          out["nodes"] = rep.nodes;
          out["max_node_gap"] = rep.max_node_gap;
          out["total_mass"] = rep.total_mass;
          out["mass_err_bound"] = rep.mass_err_bound;
          out["min_log_ratio"] = rep.min_log_ratio;
          return out;
        },
        py::arg("schedule"), py::arg("params"), py::arg("depth"));
  m.def("gap",
        [](const construction::Schedule& s, const DigitString& w) {
          return to_string(construction::gap(s, w));
        },
        py::arg("schedule"), py::arg("word"));
  m.def("holder_estimate",
        [](const construction::Schedule& s, std::int64_t depth, std::int64_t pairs,
           std::uint64_t seed) {
          const auto rep = construction::holder_estimate(s, depth, pairs, seed);
          py::dict out;
          out["slope"] = rep.slope;
          out["intercept"] = rep.intercept;
          out["pairs_used"] = rep.pairs_used;
          out["inflation_ok"] = rep.inflation_ok;
          out["max_inflation"] = rep.max_inflation;
          return out;
        },
        py::arg("schedule"), py::arg("depth"), py::arg("pairs"), py::arg("seed"));

  // experiments ----------------------------------------------------------------
  m.def("sample_digit", &experiments::sample_digit, py::arg("unit_draw"));
  m.def("lln_experiment",
        [](std::uint64_t seed, std::int64_t trials, std::int64_t n) {
          const auto s = experiments::lln_experiment({seed, trials, n});
          py::dict out;
          out["trials"] = s.trials;
          out["n"] = s.n;
          out["mean"] = s.mean;
          out["median"] = s.median;
          out["q25"] = s.q25;
          out["q75"] = s.q75;
          out["min"] = s.min;
          out["max"] = s.max;
          return out;
        },
        py::arg("seed"), py::arg("trials"), py::arg("n"));
  m.def("dim_surface",
        [](std::int64_t resolution, double tol) {
          py::list rows;
          for (const auto& r : experiments::dim_surface(resolution, solve_opts(tol, 53))) {
            py::dict row;
            row["alpha"] = to_string(r.alpha);
            row["beta"] = to_string(r.beta);
            row["valid"] = r.valid;
            if (r.valid) {
              row["case"] = case_name(r.dim_case);
              row["dim"] = r.dim.value;
              row["err"] = r.dim.error_bound;
            }
            rows.append(row);
          }
          return rows;
        },
        py::arg("resolution"), py::arg("tol") = 1e-8);
}
