#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cab/boundary.hpp"
#include "cab/budget.hpp"
#include "cab/parse.hpp"
#include "cab/problem.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonFlags {
  std::string order = "grevlex";
  double budget_seconds = 0;
  std::string json_path;
};

cab::MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex")
    return cab::MonomialOrder::lex();
  if (name == "grevlex")
    return cab::MonomialOrder::grevlex();
  throw cab::invalid_argument_error("unknown order: " + name);
}

void print_gens(const std::vector<cab::Polynomial>& gens) {
  for (const auto& g : gens)
    std::cout << g.str() << "\n";
}

/// Problem files may be affine; projective operations homogenize with a
/// fresh variable and remember it as the chart coordinate.
cab::ProjectiveVariety as_projective(const cab::ProblemFile& pf) {
  if (pf.homogeneous)
    return cab::ProjectiveVariety(pf.ideal);
  std::string hv = cab::fresh_var_name(pf.ring, "w");
  cab::Ideal H = cab::homogenize(pf.ideal, hv);
  return cab::ProjectiveVariety(H, H.ring()->var_index(hv));
}

long to_long(const mpz_class& z) { return z.get_si(); }

json report_to_json(const cab::BoundaryReport& rep) {
  json j;
  j["variety"] = {{"n", rep.n}, {"dim", rep.dim}, {"degree", to_long(rep.variety_degree)}};
  j["r"] = {{"bound", rep.r_lower}, {"used", rep.r_used}};
  j["components"] = json::array();
  for (const auto& c : rep.components) {
    json jc;
    jc["k"] = c.k;
    jc["codim"] = cab::codim(c.ideal);
    jc["degree"] = to_long(c.degree);
    jc["poly"] = c.defining_poly ? json(c.defining_poly->str()) : json(nullptr);
    j["components"].push_back(std::move(jc));
  }
  j["diagnostics"] = json::array();
  for (const auto& d : rep.diagnostics)
    j["diagnostics"].push_back({{"k", d.k}, {"status", d.status}, {"elapsed_ms", d.elapsed_ms}});
  return j;
}

void print_report(const cab::BoundaryReport& rep) {
  std::cout << "n " << rep.n << "  dim " << rep.dim << "  degree " << rep.variety_degree
            << "  variant " << (rep.singular_variant ? "singular" : "smooth") << "\n";
  std::cout << "r bound " << rep.r_lower << "  used " << rep.r_used
            << (rep.r_exact ? " (exact)" : " (bound)") << "\n";
  for (const auto& c : rep.components) {
    std::cout << "component k=" << c.k << " codim=" << cab::codim(c.ideal)
              << " degree=" << c.degree;
    if (c.defining_poly)
      std::cout << " poly=" << c.defining_poly->str();
    std::cout << "\n";
  }
  for (const auto& d : rep.diagnostics)
    std::cout << "k=" << d.k << " status=" << d.status << "\n";
  if (rep.product_poly)
    std::cout << "boundary_poly " << rep.product_poly->str() << "\n"
              << "total_degree " << rep.product_poly->total_degree() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact duals, tangency varieties and convex-hull boundaries"};
  app.require_subcommand(1);

  CommonFlags cf;
  if (const char* env = std::getenv("CAB_BUDGET_SECONDS"))
    cf.budget_seconds = std::atof(env);
  app.add_option("--order", cf.order, "monomial order: grevlex or lex")->capture_default_str();
  app.add_option("--budget-seconds", cf.budget_seconds, "wall-clock budget");
  app.add_option("--json", cf.json_path, "write a JSON report to this path");

  std::string file, file2, front_vars;
  int k = 2;
  bool singular = false, bound_only_r = false, parallel_k = false;
  int oracle_plucker = 0, oracle_surface = 0, oracle_curve = 0;

  auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis");
  c_gb->add_option("file", file)->required();

  auto* c_elim = app.add_subcommand("eliminate", "eliminate the named variables");
  c_elim->add_option("file", file)->required();
  c_elim->add_option("--vars", front_vars, "space-separated variables to eliminate")->required();

  auto* c_sat = app.add_subcommand("saturate", "saturate the first ideal by the second");
  c_sat->add_option("file", file)->required();
  c_sat->add_option("file2", file2)->required();

  auto* c_int = app.add_subcommand("intersect", "intersect two ideals");
  c_int->add_option("file", file)->required();
  c_int->add_option("file2", file2)->required();

  auto* c_dim = app.add_subcommand("dim", "dimension");
  c_dim->add_option("file", file)->required();

  auto* c_deg = app.add_subcommand("degree", "degree");
  c_deg->add_option("file", file)->required();

  auto* c_dual = app.add_subcommand("dual", "dual variety");
  c_dual->add_option("file", file)->required();

  auto* c_tan = app.add_subcommand("tangency", "k-tangency variety");
  c_tan->add_option("file", file)->required();
  c_tan->add_option("--k", k, "number of tangency points")->capture_default_str();
  c_tan->add_flag("--singular", singular, "allow isolated singularities");

  auto* c_bd = app.add_subcommand("boundary", "candidate algebraic boundary of the convex hull");
  c_bd->add_option("file", file)->required();
  c_bd->add_flag("--bound-only-r", bound_only_r, "skip the secant elimination for r");
  c_bd->add_flag("--parallel-k", parallel_k, "run the k values concurrently");

  auto* c_or = app.add_subcommand("oracle", "closed-form degree oracles");
  c_or->add_option("--plucker", oracle_plucker, "bitangent count for a plane curve of degree d");
  c_or->add_option("--surface", oracle_surface, "surface degree triple for degree d");
  c_or->add_option("--curve-bound", oracle_curve, "boundary degree bound for degree d");

  CLI11_PARSE(app, argc, argv);

  bool timed_out = false;
  try {
    std::optional<cab::Budget> budget;
    if (cf.budget_seconds > 0)
      budget.emplace(cf.budget_seconds);

    if (c_or->parsed()) {
      if (oracle_plucker)
        std::cout << cab::plucker_bitangent_count(oracle_plucker) << "\n";
      if (oracle_surface) {
        auto s = cab::surface_degree_oracles(oracle_surface);
        std::cout << s.tangency2 << " " << s.dual2 << " " << s.tangency3 << "\n";
      }
      if (oracle_curve)
        std::cout << cab::curve_boundary_degree_bound(oracle_curve) << "\n";
      return 0;
    }

    cab::ProblemFile pf = cab::read_problem_file(file);
    cab::MonomialOrder ord = order_from_name(cf.order);

    if (c_gb->parsed()) {
      print_gens(pf.ideal.groebner(ord).gens);
    } else if (c_elim->parsed()) {
      std::istringstream is(front_vars);
      std::vector<int> front;
      std::string name;
      while (is >> name) {
        int idx = pf.ring->var_index(name);
        if (idx < 0)
          throw cab::invalid_argument_error("unknown variable: " + name);
        front.push_back(idx);
      }
      print_gens(cab::eliminate(pf.ideal, front).gens());
    } else if (c_sat->parsed() || c_int->parsed()) {
      cab::ProblemFile pf2 = cab::read_problem_file(file2);
      cab::Ideal J = cab::map_ideal(pf2.ideal, pf.ring);
      cab::Ideal R = c_sat->parsed() ? cab::saturate(pf.ideal, J) : cab::intersect(pf.ideal, J);
      print_gens(R.groebner().gens);
    } else if (c_dim->parsed()) {
      std::cout << cab::dimension(pf.ideal) << "\n";
    } else if (c_deg->parsed()) {
      std::cout << cab::degree(pf.ideal) << "\n";
    } else if (c_dual->parsed()) {
      cab::ProjectiveVariety V = as_projective(pf);
      cab::RingPtr dual_ring = cab::default_dual_ring(V.ideal.ring());
      print_gens(cab::dual_variety(V, dual_ring).gens());
    } else if (c_tan->parsed()) {
      cab::ProjectiveVariety V = as_projective(pf);
      cab::RingPtr dual_ring = cab::default_dual_ring(V.ideal.ring());
      cab::TangencyVariety T = singular ? cab::k_tangency_singular(V, k, dual_ring)
                                        : cab::k_tangency(V, k, dual_ring);
      print_gens(T.ideal.gens());
    } else if (c_bd->parsed()) {
      cab::ProjectiveVariety V = as_projective(pf);
      cab::BoundaryOptions opts;
      opts.r_mode = bound_only_r ? cab::RMode::BoundOnly : cab::RMode::Auto;
      opts.parallel_k = parallel_k;
      cab::BoundaryReport rep = cab::algebraic_boundary(V, opts);
      print_report(rep);
      for (const auto& d : rep.diagnostics)
        timed_out = timed_out || d.status == "timeout";
      if (!cf.json_path.empty()) {
        std::ofstream out(cf.json_path);
        out << report_to_json(rep).dump(2) << "\n";
      }
    }
  } catch (const cab::budget_exceeded&) {
    std::cerr << "timeout: budget exceeded\n";
    return 2;
  } catch (const cab::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return timed_out ? 2 : 0;
}
