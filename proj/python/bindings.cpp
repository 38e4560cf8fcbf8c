#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coneval/engine.hpp"

namespace py = pybind11;
using namespace coneval;

namespace {

ValuationKind valuation_from_args(const std::string& name, const std::vector<std::string>& dir,
                                  std::uint64_t seed, std::uint64_t mc_samples,
                                  int exact_dim_cap) {
  if (name == "ehrhart") return ValuationKind::ehrhart();
  if (name == "direction") {
    RatVec v;
    for (const std::string& c : dir) v.push_back(rat_parse(c));
    return ValuationKind::direction(std::move(v));
  }
  if (name == "solid-angle" || name == "solid_angle") {
    SolidAngleConfig cfg;
    cfg.rng_seed = seed;
    cfg.mc_samples = mc_samples;
    cfg.exact_dim_cap = exact_dim_cap;
    return ValuationKind::solid_angle(cfg);
  }
  throw std::invalid_argument("unknown valuation: " + name);
}

py::object value_to_py(const Value& v) {
  if (v.exact()) return py::cast(v.str());
  return py::cast(v.num());
}

}  // namespace

PYBIND11_MODULE(_coneval, m) {
  m.doc() = "Lattice-point counting quasi-polynomials of rational polytopes "
            "via vertex-cone valuations, with reciprocity verification";

  m.def("count", [](const std::string& polytope_json, const std::string& valuation,
                    long long t, bool open, const std::vector<std::string>& direction,
                    std::uint64_t seed, std::uint64_t mc_samples, int exact_dim_cap) {
          Polytope p = Polytope::from_json(polytope_json);
          ValuationKind val =
              valuation_from_args(valuation, direction, seed, mc_samples, exact_dim_cap);
          Value v = count_direct(p, val, Int(static_cast<long>(t)),
                                 open ? Openness::relatively_open : Openness::closed);
          return value_to_py(v);
        },
        py::arg("polytope_json"), py::arg("valuation") = "ehrhart", py::arg("t") = 1,
        py::arg("open") = false, py::arg("direction") = std::vector<std::string>{},
        py::arg("seed") = 0, py::arg("mc_samples") = 200000, py::arg("exact_dim_cap") = 3);

  m.def("quasipoly", [](const std::string& polytope_json, const std::string& valuation,
                        const std::string& method, const std::vector<std::string>& direction,
                        std::uint64_t seed, std::uint64_t mc_samples, int exact_dim_cap) {
          Polytope p = Polytope::from_json(polytope_json);
          ValuationKind val =
              valuation_from_args(valuation, direction, seed, mc_samples, exact_dim_cap);
          QuasiPolynomial q = method == "interpolate"
                                  ? quasipoly_interpolate(p, val, Openness::closed)
                                  : quasipoly_brion(p, val);
          return q.to_json();
        },
        py::arg("polytope_json"), py::arg("valuation") = "ehrhart",
        py::arg("method") = "brion", py::arg("direction") = std::vector<std::string>{},
        py::arg("seed") = 0, py::arg("mc_samples") = 200000, py::arg("exact_dim_cap") = 3);

  m.def("reciprocity", [](const std::string& polytope_json, const std::string& valuation,
                          long long tmax, double tol,
                          const std::vector<std::string>& direction, std::uint64_t seed,
                          std::uint64_t mc_samples, int exact_dim_cap) {
          Polytope p = Polytope::from_json(polytope_json);
          ValuationKind val =
              valuation_from_args(valuation, direction, seed, mc_samples, exact_dim_cap);
          if (tol < 0) tol = val.kind == ValuationKind::Kind::solid_angle ? 1e-6 : 0.0;
          std::vector<Int> ts;
          for (long long t = 1; t <= tmax; ++t) ts.push_back(Int(static_cast<long>(t)));
          return verify_reciprocity(p, val, ts, tol).to_json();
        },
        py::arg("polytope_json"), py::arg("valuation") = "ehrhart", py::arg("tmax") = 5,
        py::arg("tol") = -1.0, py::arg("direction") = std::vector<std::string>{},
        py::arg("seed") = 0, py::arg("mc_samples") = 200000, py::arg("exact_dim_cap") = 3);

  m.def("brion_check", [](const std::string& polytope_json, const std::string& valuation,
                          long long t, int points, std::uint64_t seed,
                          const std::vector<std::string>& direction) {
          Polytope p = Polytope::from_json(polytope_json);
          ValuationKind val = valuation_from_args(valuation, direction, 0, 200000, 3);
          return brion_identity_check(p, val, Int(static_cast<long>(t)), points, seed).to_json();
        },
        py::arg("polytope_json"), py::arg("valuation") = "ehrhart", py::arg("t") = 1,
        py::arg("points") = 5, py::arg("seed") = 0,
        py::arg("direction") = std::vector<std::string>{});

  m.def("volume", [](const std::string& polytope_json) {
    return rat_str(polytope_volume(Polytope::from_json(polytope_json)));
  });
}
