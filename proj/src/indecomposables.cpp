#include "qcover/indecomposables.hpp"

#include <tuple>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/memo.hpp"

namespace qcover {

namespace {

/// g with q then g = h, for q surjective.
Morphism factor_through_epi(const Morphism& q, const Morphism& h) {
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < q.mats().size(); ++v) {
    const int vi = static_cast<int>(v);
    if (q.tgt().dim(vi) == 0) {
      mats.emplace_back(h.tgt().field(), 0, h.tgt().dim(vi));
      continue;
    }
    auto x = solve_linear(q.at(vi), h.at(vi));
    if (!x) throw std::logic_error("map does not factor through the quotient");
    mats.push_back(*x);
  }
  return Morphism(q.tgt(), h.tgt(), mats);
}

}  // namespace

AlmostSplit almost_split_sequence(const Module& m, bool strict) {
  if (is_projective(m)) throw std::invalid_argument("no almost split sequence ends at a projective");
  const Field& f = m.field();
  Module n = tau(m, strict);
  Resolution r = min_proj_resolution(m, 2, strict);
  ExtSpace ext = ext_space(m, n, 1, strict);
  if (ext.dim == 0) throw std::logic_error("Ext^1(M, tau M) vanishes for a non-projective M");

  // Functionals vanishing on coboundaries detect classes modulo coboundaries.
  Mat bnd = yoneda_differential(r, 1, n);
  const std::size_t width = ext.representatives.cols();
  Mat detect = bnd.rows() == 0 ? Mat::identity(f, width) : kernel_basis(bnd);

  // Socle of Ext^1 over End(M): classes killed by pullback along rad End(M).
  Mat cond(f, ext.dim, 0);
  for (const auto& rho : radical_endomorphisms(m)) {
    Morphism e0 = lift_from_term(r, 0, compose(r.maps[0], rho), r.maps[0]);
    Morphism e1 = lift_from_term(r, 1, compose(r.maps[1], e0), r.maps[1]);
    Mat act(f, ext.dim, width);
    for (std::size_t t = 0; t < ext.dim; ++t) {
      Morphism xi = yoneda_morphism(r, 1, n, ext.representatives.row(t));
      act.set_block(t, 0, yoneda_coords(r, 1, compose(e1, xi)));
    }
    cond = hstack(cond, act * detect);
  }
  Mat socle = cond.cols() == 0 ? Mat::identity(f, ext.dim) : left_kernel_basis(cond);
  if (socle.rows() == 0) throw std::logic_error("empty socle in Ext^1(M, tau M)");
  Mat xi_coords = socle.row(0) * ext.representatives;
  Morphism xi = yoneda_morphism(r, 1, n, xi_coords);

  // pushout of P_1 -> P_0 along xi
  const Module& p0 = r.terms[0];
  DirectSum ds = direct_sum({n, p0}, m.algebra());
  Morphism into = to_sum(r.terms[1], ds, {xi, r.maps[1].scaled(f.neg(f.one()))});
  SubObject e = cokernel(into);
  AlmostSplit as;
  as.left = n;
  as.middle = e.module;
  as.right = m;
  as.f = compose(ds.inclusions[0], e.map);
  as.g = factor_through_epi(e.map, from_sum(ds, {Morphism::zero(n, m), r.maps[0]}, m));

  std::size_t rad_dim = endo_data(m).basis.size() - endo_data(m).top_dim;
  if (hom_dim(m, as.middle) != hom_dim(m, n) + rad_dim)
    throw std::logic_error("extension failed the almost split certificate");
  return as;
}

int find_in_pool(const std::vector<Module>& pool, const Module& m) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (pool[i].dims() == m.dims() && is_isomorphic(pool[i], m)) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<Module> knit(const Algebra::Ptr& alg, std::size_t dimcap, std::size_t max_count) {
  std::vector<Module> found;
  auto add = [&](const Module& m) {
    if (m.is_zero()) return;
    if (m.total_dim() > dimcap)
      throw CapExceeded("indecomposable of dimension " + std::to_string(m.total_dim()) + " exceeds the cap " +
                        std::to_string(dimcap));
    if (find_in_pool(found, m) >= 0) return;
    found.push_back(m);
    if (found.size() > max_count)
      throw CapExceeded("more than " + std::to_string(max_count) + " indecomposables");
  };
  for (int x = 0; x < alg->num_vertices(); ++x) {
    add(Module::simple(alg, x));
    add(projective_at(alg, x, false));
    add(injective_at(alg, x, false));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    Module m = found[i];
    if (!is_projective(m)) {
      AlmostSplit as = almost_split_sequence(m, false);
      add(as.left);
      for (const auto& s : split_summands(as.middle)) add(s.module);
    }
    if (!is_injective(m)) add(tau_minus(m, false));
  }
  return found;
}

// Keyed on the owning pointer so a cached failure cannot outlive its algebra's address.
MemoTable<std::tuple<Algebra::Ptr, std::size_t, std::size_t>, std::vector<Module>> knit_cache;

}  // namespace

std::vector<Module> list_indecomposables(const Algebra::Ptr& alg, std::size_t dimcap, std::size_t max_count) {
  return knit_cache.get_or_compute({alg, dimcap, max_count}, [&] { return knit(alg, dimcap, max_count); });
}

}  // namespace qcover
