#include "cab/boundary.hpp"

#include <chrono>
#include <future>

#include "cab/budget.hpp"
#include "cab/gcd.hpp"

namespace cab {

namespace {

struct KResult {
  std::optional<BoundaryComponent> component;
  BoundaryDiagnostic diag;
};

std::optional<Polynomial> hypersurface_poly(const Ideal& I) {
  const auto& gb = I.groebner();
  if (gb.gens.empty() || gb.contains_one())
    return std::nullopt;
  Polynomial g = gb.gens.front();
  for (std::size_t i = 1; i < gb.gens.size(); ++i) {
    g = poly_gcd(g, gb.gens[i]);
    if (g.is_constant())
      return std::nullopt;
  }
  return squarefree_part(g).normalized();
}

KResult boundary_piece(const ProjectiveVariety& V, int k, bool singular_variant,
                       double budget_seconds) {
  KResult out;
  out.diag.k = k;
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  try {
    std::optional<Budget> budget;
    if (budget_seconds > 0)
      budget.emplace(budget_seconds);
    RingPtr dual_ring = default_dual_ring(V.ideal.ring());
    TangencyVariety T = singular_variant ? k_tangency_singular(V, k, dual_ring)
                                         : k_tangency(V, k, dual_ring);
    if (T.empty()) {
      out.diag.status = "empty";
      out.diag.elapsed_ms = elapsed();
      return out;
    }
    Ideal D = tangency_dual(T, V.ideal.ring());
    if (D.is_unit()) {
      out.diag.status = "empty";
      out.diag.elapsed_ms = elapsed();
      return out;
    }
    BoundaryComponent c;
    c.k = k;
    c.ideal = D;
    int cd = codim(D);
    c.is_hypersurface = cd == 1;
    if (c.is_hypersurface) {
      c.defining_poly = hypersurface_poly(D);
      c.is_hypersurface = c.defining_poly.has_value();
    }
    c.degree = c.defining_poly ? mpz_class(c.defining_poly->total_degree()) : degree(D);
    out.component = std::move(c);
    out.diag.status = "ok";
  } catch (const budget_exceeded&) {
    out.diag.status = "timeout";
  }
  out.diag.elapsed_ms = elapsed();
  return out;
}

} // namespace

BoundaryReport algebraic_boundary(const ProjectiveVariety& V, const BoundaryOptions& opts) {
  BoundaryReport rep;
  rep.n = V.ambient_dim();
  rep.dim = V.dim();
  rep.variety_degree = V.degree();

  SingularLocus S = singular_locus(V);
  if (S.ideal.is_unit()) {
    rep.singular_variant = false;
  } else if (S.is_finite) {
    rep.singular_variant = true;
  } else {
    throw invalid_argument_error(
        "algebraic_boundary: singular locus is not finite");
  }

  rep.r_lower = r_lower_bound(V);
  RNumber r = r_of_x(V, opts.r_mode);
  rep.r_used = std::max(r.value, 1);
  rep.r_exact = r.exact;

  int k_start = rep.r_used;
  bool hypersurface_input = rep.dim == rep.n - 1;
  if (hypersurface_input) {
    // the variety itself is the k=1 piece
    BoundaryComponent c;
    c.k = 1;
    c.ideal = V.ideal;
    c.is_hypersurface = true;
    c.defining_poly = hypersurface_poly(V.ideal);
    if (c.defining_poly)
      c.degree = c.defining_poly->total_degree();
    else
      c.is_hypersurface = false, c.degree = degree(V.ideal);
    rep.components.push_back(std::move(c));
    rep.diagnostics.push_back({1, "ok", 0});
    k_start = std::max(k_start, 2);
  }

  std::vector<KResult> results;
  if (opts.parallel_k) {
    std::vector<std::future<KResult>> futs;
    for (int k = k_start; k <= rep.n; ++k)
      futs.push_back(std::async(std::launch::async, boundary_piece, std::cref(V), k,
                                rep.singular_variant, opts.per_k_budget_seconds));
    for (auto& f : futs)
      results.push_back(f.get());
  } else {
    for (int k = k_start; k <= rep.n; ++k)
      results.push_back(boundary_piece(V, k, rep.singular_variant, opts.per_k_budget_seconds));
  }

  for (auto& r2 : results) {
    rep.diagnostics.push_back(r2.diag);
    if (r2.component)
      rep.components.push_back(std::move(*r2.component));
  }

  std::optional<Polynomial> prod;
  for (auto& c : rep.components) {
    if (!c.defining_poly)
      continue;
    if (!prod)
      prod = *c.defining_poly;
    else
      prod = (*prod) * (*c.defining_poly);
  }
  if (prod)
    rep.product_poly = squarefree_part(*prod).normalized();
  return rep;
}

mpz_class plucker_bitangent_count(int d) {
  if (d < 2)
    throw invalid_argument_error("plucker_bitangent_count: d must be at least 2");
  mpz_class dd = d;
  return (dd - 3) * (dd - 2) * dd * (dd + 3) / 2;
}

SurfaceDegrees surface_degree_oracles(int d) {
  if (d < 1)
    throw invalid_argument_error("surface_degree_oracles: d must be at least 1");
  mpz_class dd = d;
  SurfaceDegrees out;
  out.tangency2 = dd * (dd - 1) * (dd - 2) * (dd * dd * dd - dd * dd + dd - 12) / 2;
  out.dual2 = dd * (dd - 2) * (dd - 3) * (dd * dd + 2 * dd - 4);
  out.tangency3 =
      (dd * dd * dd * dd * dd * dd * dd * dd * dd - 6 * dd * dd * dd * dd * dd * dd * dd * dd +
       15 * dd * dd * dd * dd * dd * dd * dd - 59 * dd * dd * dd * dd * dd * dd +
       204 * dd * dd * dd * dd * dd - 339 * dd * dd * dd * dd + 770 * dd * dd * dd -
       2056 * dd * dd + 1920 * dd) /
      6;
  return out;
}

mpz_class curve_boundary_degree_bound(int d) {
  if (d < 2)
    throw invalid_argument_error("curve_boundary_degree_bound: d must be at least 2");
  return mpz_class(d) + plucker_bitangent_count(d);
}

} // namespace cab
