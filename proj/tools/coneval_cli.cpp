#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coneval/engine.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--polytope", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

coneval::RatVec parse_direction(const std::string& spec) {
  coneval::RatVec v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(coneval::rat_parse(tok));
  return v;
}

struct Options {
  std::string polytope_file;
  std::string valuation = "ehrhart";
  std::string direction = "";
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 200000;
  int exact_dim_cap = 3;
};

coneval::ValuationKind make_valuation(const Options& opt, int dim) {
  using coneval::ValuationKind;
  if (opt.valuation == "ehrhart") return ValuationKind::ehrhart();
  if (opt.valuation == "direction") {
    coneval::RatVec v;
    if (opt.direction.empty()) {
      for (int i = 0; i < dim; ++i) v.push_back(1);
    } else {
      v = parse_direction(opt.direction);
    }
    return ValuationKind::direction(std::move(v));
  }
  if (opt.valuation == "solid-angle") {
    coneval::SolidAngleConfig cfg;
    cfg.mc_samples = opt.mc_samples;
    cfg.rng_seed = opt.seed;
    cfg.exact_dim_cap = opt.exact_dim_cap;
    return ValuationKind::solid_angle(cfg);
  }
  throw CLI::ValidationError("--valuation", "unknown valuation " + opt.valuation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting quasi-polynomials of rational polytopes via vertex-cone valuations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed for randomized checks");
  app.add_option("--mc-samples", opt.mc_samples, "Monte Carlo samples for solid angles");
  app.add_option("--exact-dim-cap", opt.exact_dim_cap,
                 "largest effective dimension solved in closed form");

  long long t_arg = 1;
  long long tmax = 5;
  int points = 5;
  double tol = -1;
  bool open_flag = false;
  std::string method = "brion";

  auto add_common = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let the global flags appear after the subcommand
    cmd->add_option("--polytope", opt.polytope_file, "polytope JSON file")->required();
    cmd->add_option("--valuation", opt.valuation, "ehrhart|direction|solid-angle");
    cmd->add_option("--direction", opt.direction, "direction vector, e.g. \"1,1\"");
  };

  CLI::App* count = app.add_subcommand("count", "direct count at one dilation");
  add_common(count);
  count->add_option("--t", t_arg, "dilation factor")->required();
  count->add_flag("--open", open_flag, "count the relative interior");

  CLI::App* qp = app.add_subcommand("quasipoly", "counting quasi-polynomial");
  add_common(qp);
  qp->add_option("--method", method, "brion|interpolate");

  CLI::App* rec = app.add_subcommand("reciprocity", "verify the reciprocity law");
  add_common(rec);
  rec->add_option("--tmax", tmax, "check t = 1..tmax");
  rec->add_option("--tol", tol, "comparison tolerance (default: 0 exact, 1e-6 solid angle)");

  CLI::App* bc = app.add_subcommand("brion-check", "vertex-cone identity at random z");
  add_common(bc);
  bc->add_option("--t", t_arg, "dilation factor")->required();
  bc->add_option("--points", points, "number of random evaluation points");

  CLI11_PARSE(app, argc, argv);

  try {
    coneval::Polytope p = coneval::Polytope::from_json(read_file(opt.polytope_file));
    coneval::ValuationKind val = make_valuation(opt, p.dim());

    if (count->parsed()) {
      coneval::Value v = coneval::count_direct(
          p, val, coneval::Int(static_cast<long>(t_arg)),
          open_flag ? coneval::Openness::relatively_open : coneval::Openness::closed);
      nlohmann::json j;
      j["value"] = v.str();
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (qp->parsed()) {
      coneval::QuasiPolynomial q =
          method == "interpolate"
              ? coneval::quasipoly_interpolate(p, val, coneval::Openness::closed)
              : coneval::quasipoly_brion(p, val);
      std::cout << q.to_json() << "\n";
      return 0;
    }
    if (rec->parsed()) {
      if (tol < 0) tol = opt.valuation == "solid-angle" ? 1e-6 : 0.0;
      std::vector<coneval::Int> ts;
      for (long long t = 1; t <= tmax; ++t) ts.push_back(coneval::Int(static_cast<long>(t)));
      coneval::VerifyReport rep = coneval::verify_reciprocity(p, val, ts, tol);
      std::cout << rep.to_json() << "\n";
      return rep.pass() ? 0 : 1;
    }
    if (bc->parsed()) {
      coneval::BrionCheckReport rep =
          coneval::brion_identity_check(p, val, coneval::Int(static_cast<long>(t_arg)), points, opt.seed);
      std::cout << rep.to_json() << "\n";
      return rep.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
