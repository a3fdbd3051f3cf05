#include "qcover/homological.hpp"

#include <map>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/memo.hpp"

namespace qcover {

namespace {

MemoTable<std::string, Resolution>& proj_cache() {
  static MemoTable<std::string, Resolution> t;
  return t;
}

MemoTable<std::string, Module>& strip_cache() {
  static MemoTable<std::string, Module> t;
  return t;
}

bool is_surjective(const Morphism& f) {
  for (std::size_t v = 0; v < f.mats().size(); ++v)
    if (rank(f.at(static_cast<int>(v))) != f.tgt().dim(static_cast<int>(v))) return false;
  return true;
}

bool is_injective_map(const Morphism& f) {
  for (std::size_t v = 0; v < f.mats().size(); ++v)
    if (rank(f.at(static_cast<int>(v))) != f.src().dim(static_cast<int>(v))) return false;
  return true;
}

/// Exactness of A -f-> B -g-> C at B.
bool exact_at(const Morphism& f, const Morphism& g) {
  if (!compose(f, g).is_zero()) return false;
  for (std::size_t v = 0; v < f.mats().size(); ++v) {
    const int vi = static_cast<int>(v);
    std::size_t ker_g = g.src().dim(vi) - rank(g.at(vi));
    if (ker_g != rank(f.at(vi))) return false;
  }
  return true;
}

Resolution build_proj(const Module& m, int k, bool strict) {
  Resolution r;
  r.direction = Resolution::Direction::Projective;
  r.object = m;
  r.kernels.push_back(m);
  Module cur = m;
  std::optional<Morphism> inc;
  for (int i = 0; i <= k; ++i) {
    Cover c = projective_cover(cur, strict);
    r.terms.push_back(c.object);
    r.tops.push_back(c.vertices);
    r.maps.push_back(inc ? compose(c.map, *inc) : c.map);
    if (i == k) break;
    SubObject ker = kernel(c.map);
    r.kernels.push_back(ker.module);
    cur = ker.module;
    inc = ker.map;
  }
  return r;
}

/// Offsets of the generators of the summands of a projective term: summand j
/// at vertex tops[j] has its generator at row gen_row[j] of term(tops[j]).
std::vector<std::size_t> generator_rows(const Algebra& alg, const std::vector<int>& tops) {
  std::vector<std::size_t> rows(tops.size());
  std::map<int, std::size_t> used;  // per vertex: rows consumed so far
  for (std::size_t j = 0; j < tops.size(); ++j) {
    const int y = tops[j];
    std::size_t off = 0;
    for (std::size_t jj = 0; jj < j; ++jj) off += alg.dim(tops[jj], y);
    auto b = alg.basis(y, y);
    std::size_t idem = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i].arrows.empty()) idem = i;
    rows[j] = off + idem;
  }
  return rows;
}

/// u[j][i]: component in A(x_i, y_j) of the image of the generator of summand
/// j of the source under d: (+)_j P_{y_j} -> (+)_i P_{x_i}.
std::vector<std::vector<Mat>> generator_images(const Morphism& d, const std::vector<int>& src_tops,
                                               const std::vector<int>& tgt_tops) {
  const Algebra& alg = *d.src().algebra();
  auto rows = generator_rows(alg, src_tops);
  std::vector<std::vector<Mat>> u(src_tops.size());
  for (std::size_t j = 0; j < src_tops.size(); ++j) {
    const int y = src_tops[j];
    Mat img = d.at(y).row(rows[j]);
    std::size_t off = 0;
    for (std::size_t i = 0; i < tgt_tops.size(); ++i) {
      const std::size_t w = alg.dim(tgt_tops[i], y);
      u[j].push_back(img.block(0, off, 1, w));
      off += w;
    }
  }
  return u;
}

/// Matrix of Hom(d, N): Hom(P, N) -> Hom(P', N) for d: P' -> P between sums of
/// indecomposable projectives, in Yoneda coordinates.
Mat hom_differential(const Morphism& d, const std::vector<int>& src_tops, const std::vector<int>& tgt_tops,
                     const Module& n) {
  auto u = generator_images(d, src_tops, tgt_tops);
  std::size_t rows = 0, cols = 0;
  for (int x : tgt_tops) rows += n.dim(x);
  for (int y : src_tops) cols += n.dim(y);
  Mat m(n.field(), rows, cols);
  std::size_t c = 0;
  for (std::size_t j = 0; j < src_tops.size(); ++j) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < tgt_tops.size(); ++i) {
      if (n.dim(tgt_tops[i]) && n.dim(src_tops[j]))
        m.set_block(r, c, n.act_element(tgt_tops[i], src_tops[j], u[j][i]));
      r += n.dim(tgt_tops[i]);
    }
    c += n.dim(src_tops[j]);
  }
  return m;
}

Module sum_of(const std::vector<Module>& parts, const Algebra::Ptr& alg) {
  if (parts.empty()) return Module::zero(alg);
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts, alg).sum;
}

}  // namespace

bool Resolution::is_exact() const {
  if (maps.empty()) return true;
  if (direction == Direction::Projective) {
    if (!is_surjective(maps[0])) return false;
    for (std::size_t i = 1; i < maps.size(); ++i)
      if (!exact_at(maps[i], maps[i - 1])) return false;
  } else {
    if (!is_injective_map(maps[0])) return false;
    for (std::size_t i = 1; i < maps.size(); ++i)
      if (!exact_at(maps[i - 1], maps[i])) return false;
  }
  return true;
}

Resolution min_proj_resolution(const Module& m, int k, bool strict) {
  if (k < 0) throw std::invalid_argument("negative resolution length");
  std::string key = m.key() + "#P" + std::to_string(k) + (strict ? "s" : "l");
  return proj_cache().get_or_compute(key, [&] { return build_proj(m, k, strict); });
}

Resolution min_inj_coresolution(const Module& m, int k, bool strict) {
  Resolution op = min_proj_resolution(dual(m), k, strict);
  Resolution r;
  r.direction = Resolution::Direction::Injective;
  r.object = m;
  r.tops = op.tops;
  for (const auto& t : op.terms) r.terms.push_back(dual(t));
  for (const auto& f : op.maps) r.maps.push_back(dual(f));
  for (const auto& x : op.kernels) r.kernels.push_back(dual(x));
  return r;
}

Mat yoneda_differential(const Resolution& r, std::size_t i, const Module& n) {
  if (i == 0 || i >= r.maps.size()) throw std::out_of_range("resolution degree");
  return hom_differential(r.maps[i], r.tops[i], r.tops[i - 1], n);
}

Morphism yoneda_morphism(const Resolution& r, std::size_t i, const Module& n, const Mat& coords) {
  const auto& alg = r.terms[i].algebra();
  const auto& tops = r.tops[i];
  if (tops.empty()) return Morphism::zero(r.terms[i], n);
  std::vector<Module> parts;
  std::vector<Morphism> comps;
  std::size_t off = 0;
  for (int y : tops) {
    parts.push_back(projective_at(alg, y, false));
    comps.push_back(from_projective(parts.back(), y, n, coords.block(0, off, 1, n.dim(y))));
    off += n.dim(y);
  }
  DirectSum s = direct_sum(parts, alg);
  return Morphism(r.terms[i], n, from_sum(s, comps, n).mats());
}

Mat yoneda_coords(const Resolution& r, std::size_t i, const Morphism& f) {
  const auto& tops = r.tops[i];
  auto rows = generator_rows(*r.terms[i].algebra(), tops);
  std::size_t width = 0;
  for (int y : tops) width += f.tgt().dim(y);
  Mat c(f.tgt().field(), 1, width);
  std::size_t off = 0;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    if (f.tgt().dim(tops[j])) c.set_block(0, off, f.at(tops[j]).row(rows[j]));
    off += f.tgt().dim(tops[j]);
  }
  return c;
}

Morphism lift_from_term(const Resolution& r, std::size_t i, const Morphism& f, const Morphism& g) {
  const auto& tops = r.tops[i];
  auto rows = generator_rows(*r.terms[i].algebra(), tops);
  const Module& x = g.src();
  std::size_t width = 0;
  for (int y : tops) width += x.dim(y);
  Mat c(x.field(), 1, width);
  std::size_t off = 0;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    const int y = tops[j];
    if (x.dim(y)) {
      Mat w = f.at(y).row(rows[j]);
      auto z = w.is_zero() ? std::optional<Mat>(Mat(x.field(), 1, x.dim(y))) : solve_left(g.at(y), w);
      if (!z) throw std::logic_error("lift through a map that does not reach the target");
      c.set_block(0, off, *z);
    } else if (f.tgt().dim(y) && !f.at(y).row(rows[j]).is_zero()) {
      throw std::logic_error("lift through a map that does not reach the target");
    }
    off += x.dim(y);
  }
  return yoneda_morphism(r, i, x, c);
}

Module strip_projective_summands(const Module& m) {
  if (m.is_zero()) return m;
  return strip_cache().get_or_compute(m.key() + "#sp", [&] {
    if (is_projective(m)) return Module::zero(m.algebra());
    if (endo_data(m).top_dim == 1) return m;
    std::vector<Module> keep;
    for (const auto& s : split_summands(m))
      if (!is_projective(s.module)) keep.push_back(s.module);
    return sum_of(keep, m.algebra());
  });
}

Module strip_injective_summands(const Module& m) {
  if (m.is_zero()) return m;
  return strip_cache().get_or_compute(m.key() + "#si", [&] {
    if (is_injective(m)) return Module::zero(m.algebra());
    if (endo_data(m).top_dim == 1) return m;
    std::vector<Module> keep;
    for (const auto& s : split_summands(m))
      if (!is_injective(s.module)) keep.push_back(s.module);
    return sum_of(keep, m.algebra());
  });
}

Module syzygy(const Module& m, int i, bool strict) {
  if (i <= 0) return m;
  Resolution r = min_proj_resolution(m, i - 1, strict);
  SubObject k = kernel(r.maps[static_cast<std::size_t>(i - 1)]);
  return strip_projective_summands(k.module);
}

Module cosyzygy(const Module& m, int i, bool strict) {
  if (i <= 0) return m;
  return dual(syzygy(dual(m), i, strict));
}

Module transpose(const Module& m, bool strict) {
  auto op = m.algebra()->opposite();
  if (m.is_zero()) return Module::zero(op);
  Resolution r = min_proj_resolution(m, 1, strict);
  const auto& x = r.tops[0];
  const auto& y = r.tops[1];
  if (y.empty()) return Module::zero(op);
  auto u = generator_images(r.maps[1], y, x);
  std::vector<Module> q0, q1;
  for (int v : x) q0.push_back(projective_at(op, v, strict));
  for (int v : y) q1.push_back(projective_at(op, v, strict));
  DirectSum s0 = direct_sum(q0, op), s1 = direct_sum(q1, op);
  Morphism total = Morphism::zero(s0.sum, s1.sum);
  const Algebra& alg = *m.algebra();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (u[j][i].is_zero()) continue;
      Mat elem = alg.to_opposite(x[i], y[j], u[j][i]);
      Morphism comp = from_projective(q0[i], x[i], q1[j], elem);
      total = total + compose(compose(s0.projections[i], comp), s1.inclusions[j]);
    }
  return cokernel(total).module;
}

Module tau(const Module& m, bool strict) { return dual(transpose(m, strict)); }

Module tau_minus(const Module& m, bool strict) { return transpose(dual(m), strict); }

Module tau_n(const Module& m, int n, bool strict) {
  if (n < 1) throw std::invalid_argument("tau_n needs n >= 1");
  return tau(syzygy(m, n - 1, strict), strict);
}

Module tau_n_minus(const Module& m, int n, bool strict) {
  if (n < 1) throw std::invalid_argument("tau_n_minus needs n >= 1");
  return tau_minus(cosyzygy(m, n - 1, strict), strict);
}

ExtSpace ext_space(const Module& m, const Module& n, int i, bool strict) {
  if (i < 0) throw std::invalid_argument("negative Ext degree");
  if (m.algebra().get() != n.algebra().get()) throw CarrierMismatch("Ext between modules over different carriers");
  ExtSpace e;
  e.degree = i;
  const Field& f = m.field();
  Resolution r = min_proj_resolution(m, i + 1, strict);
  const std::size_t ui = static_cast<std::size_t>(i);
  // d_i^*: Hom(P_i, N) -> Hom(P_{i+1}, N)
  Mat d_out = hom_differential(r.maps[ui + 1], r.tops[ui + 1], r.tops[ui], n);
  e.cocycles = d_out.cols() == 0 ? Mat::identity(f, d_out.rows()) : left_kernel_basis(d_out);
  Mat boundaries(f, 0, e.cocycles.cols());
  if (i > 0) boundaries = row_space_basis(hom_differential(r.maps[ui], r.tops[ui], r.tops[ui - 1], n));
  Mat reps(f, 0, e.cocycles.cols());
  Mat span = boundaries;
  for (std::size_t k = 0; k < e.cocycles.rows(); ++k) {
    Mat row = e.cocycles.row(k);
    if (span.rows() > 0 && row_space_contains(span, row)) continue;
    span = vstack(span, row);
    reps = vstack(reps, row);
  }
  e.representatives = reps;
  e.dim = reps.rows();
  return e;
}

std::size_t ext_dim(const Module& m, const Module& n, int i, bool strict) { return ext_space(m, n, i, strict).dim; }

Morphism right_approximation(const ModuleList& u, const Module& m) {
  std::vector<Module> parts;
  std::vector<Morphism> comps;
  for (const auto& x : u.items)
    for (auto& h : hom_basis(x, m)) {
      parts.push_back(x);
      comps.push_back(h);
    }
  if (parts.empty()) return Morphism::zero(Module::zero(m.algebra()), m);
  DirectSum s = direct_sum(parts, m.algebra());
  return from_sum(s, comps, m);
}

Morphism left_approximation(const ModuleList& u, const Module& m) {
  std::vector<Module> parts;
  std::vector<Morphism> comps;
  for (const auto& x : u.items)
    for (auto& h : hom_basis(m, x)) {
      parts.push_back(x);
      comps.push_back(h);
    }
  if (parts.empty()) return Morphism::zero(m, Module::zero(m.algebra()));
  DirectSum s = direct_sum(parts, m.algebra());
  return to_sum(m, s, comps);
}

namespace {

struct RelTerm {
  std::vector<Module> summands;
  std::vector<Morphism> projections;  // Q -> summand
  std::vector<Morphism> to_prev;      // summand -> previous term (or M)
};

/// Right approximation of k by add(u) with only as many copies as needed for
/// every map from u to factor.
std::pair<std::vector<Module>, std::vector<Morphism>> economical_approximation(const std::vector<Module>& u,
                                                                              const Module& k) {
  std::vector<Module> parts;
  std::vector<Morphism> comps;
  for (const auto& x : u) {
    auto basis = hom_basis(x, k);
    if (basis.empty()) continue;
    // maps x -> k that already factor through the chosen parts
    Mat reach(k.field(), 0, basis.front().flatten().cols());
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (const auto& g : hom_basis(x, parts[p])) {
        Mat row = compose(g, comps[p]).flatten();
        reach = vstack(reach, row);
      }
    for (auto& h : basis) {
      Mat row = h.flatten();
      if (reach.rows() > 0 && row_space_contains(reach, row)) continue;
      parts.push_back(x);
      comps.push_back(h);
      // x -> x -> k through the new copy: every End(x)-multiple
      for (const auto& e : hom_basis(x, x)) reach = vstack(reach, compose(e, h).flatten());
    }
  }
  return {parts, comps};
}

}  // namespace

std::size_t relative_ext_dim(const ModuleList& u, const Module& m, const Module& n, int i, bool include_projectives) {
  if (i < 0) throw std::invalid_argument("negative Ext degree");
  const auto& alg = m.algebra();
  const Field& f = m.field();
  std::vector<Module> gens = u.items;
  if (include_projectives)
    for (int x = 0; x < alg->num_vertices(); ++x) gens.push_back(projective_at(alg, x, false));

  // F-resolution Q_0 -> M, Q_1 -> Q_0, ... up to Q_{i+1}
  std::vector<RelTerm> q;
  Module cur = m;
  std::optional<Morphism> inc;
  for (int j = 0; j <= i + 1; ++j) {
    auto [parts, comps] = economical_approximation(gens, cur);
    RelTerm t;
    t.summands = parts;
    if (!parts.empty()) {
      DirectSum s = direct_sum(parts, alg);
      Morphism approx = from_sum(s, comps, cur);
      if (!is_surjective(approx))
        throw ApproximationNotSurjective("right approximation does not cover the module; add projectives to U");
      t.projections = s.projections;
      for (const auto& c : comps) t.to_prev.push_back(inc ? compose(c, *inc) : c);
      SubObject ker = kernel(approx);
      cur = ker.module;
      inc = ker.map;
    } else {
      if (!cur.is_zero())
        throw ApproximationNotSurjective("right approximation does not cover the module; add projectives to U");
      inc.reset();
    }
    q.push_back(std::move(t));
  }

  std::map<std::string, std::vector<Morphism>> hom_cache;
  auto homs = [&](const Module& s) -> const std::vector<Morphism>& {
    auto it = hom_cache.find(s.key());
    if (it == hom_cache.end()) it = hom_cache.emplace(s.key(), hom_basis(s, n)).first;
    return it->second;
  };
  auto hom_size = [&](const RelTerm& t) {
    std::size_t d = 0;
    for (const auto& s : t.summands) d += homs(s).size();
    return d;
  };
  // D_j: Hom(Q_j, N) -> Hom(Q_{j+1}, N)
  auto differential = [&](std::size_t j) {
    const RelTerm& a = q[j];
    const RelTerm& b = q[j + 1];
    Mat d(f, hom_size(a), hom_size(b));
    std::size_t r = 0;
    for (std::size_t s = 0; s < a.summands.size(); ++s) {
      for (const auto& h : homs(a.summands[s])) {
        std::size_t c = 0;
        for (std::size_t t = 0; t < b.summands.size(); ++t) {
          const auto& bt = homs(b.summands[t]);
          if (!bt.empty()) {
            // component of Q_{j+1} summand t -> Q_j summand s, then h
            Morphism comp = compose(compose(b.to_prev[t], a.projections[s]), h);
            Mat basis_flat(f, 0, comp.flatten().cols());
            for (const auto& g : bt) basis_flat = vstack(basis_flat, g.flatten());
            auto coords = solve_left(basis_flat, comp.flatten());
            if (!coords) throw std::logic_error("relative Ext: composite outside the Hom basis");
            d.set_block(r, c, *coords);
          }
          c += bt.size();
        }
        ++r;
      }
    }
    return d;
  };
  const std::size_t ui = static_cast<std::size_t>(i);
  Mat d_out = differential(ui);
  std::size_t cocycles = d_out.rows() - rank(d_out);
  std::size_t boundaries = i > 0 ? rank(differential(ui - 1)) : 0;
  return cocycles - boundaries;
}

BoundedDim inj_dim_upto(const Module& m, std::size_t bound, bool strict) {
  if (m.is_zero()) return {0, false};
  Resolution r = min_inj_coresolution(m, static_cast<int>(bound) + 1, strict);
  for (std::size_t j = 0; j <= bound + 1; ++j)
    if (r.terms[j].is_zero()) return {j == 0 ? 0 : j - 1, false};
  return {bound + 1, true};
}

BoundedDim proj_dim_upto(const Module& m, std::size_t bound, bool strict) {
  if (m.is_zero()) return {0, false};
  Resolution r = min_proj_resolution(m, static_cast<int>(bound) + 1, strict);
  for (std::size_t j = 0; j <= bound + 1; ++j)
    if (r.terms[j].is_zero()) return {j == 0 ? 0 : j - 1, false};
  return {bound + 1, true};
}

BoundedDim dominant_dimension_upto(const Algebra::Ptr& alg, std::size_t bound, const std::vector<int>& vertices,
                                   bool strict) {
  std::vector<int> vs = vertices;
  if (vs.empty())
    for (int x = 0; x < alg->num_vertices(); ++x) vs.push_back(x);
  std::map<int, bool> inj_is_proj;
  auto injective_projective = [&](int y) {
    auto it = inj_is_proj.find(y);
    if (it == inj_is_proj.end()) it = inj_is_proj.emplace(y, is_projective(injective_at(alg, y, false))).first;
    return it->second;
  };
  BoundedDim best{bound, true};
  if (bound == 0) return best;
  for (int x : vs) {
    Resolution r = min_inj_coresolution(projective_at(alg, x, strict), static_cast<int>(bound) - 1, strict);
    for (std::size_t j = 0; j < bound; ++j) {
      bool proj = true;
      for (int y : r.tops[j]) proj = proj && injective_projective(y);
      if (!proj) {
        if (best.at_least || j < best.value) best = {j, false};
        break;
      }
    }
  }
  return best;
}

void clear_homological_caches() {
  proj_cache().clear();
  strip_cache().clear();
}

}  // namespace qcover
