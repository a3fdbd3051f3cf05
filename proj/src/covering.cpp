#include "qcover/covering.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/indecomposables.hpp"

namespace qcover {

namespace {

/// Offset of each window vertex inside the push-down space at its base vertex,
/// plus the push-down dimensions.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> block_layout(const Covering& c, const Module& m) {
  const int nb = c.base->num_vertices();
  std::vector<std::size_t> off(c.num_vertices(), 0), dims(nb, 0);
  for (std::size_t k = 0; k < c.window.size(); ++k)
    for (int u = 0; u < nb; ++u) {
      const int v = static_cast<int>(k) * nb + u;
      off[v] = dims[u];
      dims[u] += m.dim(v);
    }
  return {off, dims};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Module twist(const Covering& c, const Module& m, const GroupElem& a) {
  const Group& g = c.group();
  if (g.is_identity(a)) return m;
  std::vector<std::size_t> dims(c.num_vertices(), 0);
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (!m.dim(v)) continue;
    auto w = c.shifted(v, a);
    if (!w) throw WindowTooSmall("twist by " + g.format(a) + " moves " + c.vertex_name(v) + " out of the window");
    dims[*w] = m.dim(v);
  }
  const auto& q = c.algebra->quiver();
  std::vector<Mat> maps;
  for (std::size_t ar = 0; ar < c.arrows.size(); ++ar) {
    const auto& [b, s] = c.arrows[ar];
    auto orig = c.arrow_at(b, g.sub(s, a));
    if (orig) maps.push_back(m.map(*orig));
    else maps.emplace_back(m.field(), dims[q.arrows[ar].src], dims[q.arrows[ar].tgt]);
  }
  return Module(c.algebra, dims, maps);
}

Module push_down(const Covering& c, const Module& m) {
  auto [off, dims] = block_layout(c, m);
  const auto& bq = c.base->quiver;
  const auto& q = c.algebra->quiver();
  std::vector<Mat> maps;
  for (const auto& ar : bq.arrows) maps.emplace_back(m.field(), dims[ar.src], dims[ar.tgt]);
  for (std::size_t ar = 0; ar < c.arrows.size(); ++ar) {
    const int s = q.arrows[ar].src, t = q.arrows[ar].tgt;
    if (m.dim(s) && m.dim(t)) maps[c.arrows[ar].first].set_block(off[s], off[t], m.map(static_cast<int>(ar)));
  }
  return Module(c.base->algebra, dims, maps);
}

Morphism push_down(const Covering& c, const Morphism& f) {
  Module src = push_down(c, f.src()), tgt = push_down(c, f.tgt());
  auto ls = block_layout(c, f.src()).first;
  auto lt = block_layout(c, f.tgt()).first;
  std::vector<Mat> mats;
  for (int u = 0; u < c.base->num_vertices(); ++u) mats.emplace_back(src.field(), src.dim(u), tgt.dim(u));
  for (int v = 0; v < c.num_vertices(); ++v)
    if (f.src().dim(v) && f.tgt().dim(v)) mats[c.vertices[v].base].set_block(ls[v], lt[v], f.at(v));
  return Morphism(src, tgt, mats);
}

std::size_t TruncatedModule::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

TruncatedModule pull_up(const Covering& c, const Module& n) {
  TruncatedModule t;
  for (const auto& v : c.vertices) t.dims.push_back(n.dim(v.base));
  for (const auto& [b, s] : c.arrows) t.maps.push_back(n.map(b));
  t.truncated = !c.group().is_finite();
  return t;
}

Morphism pushdown_identification(const Covering& c, const Module& y, const GroupElem& a) {
  Module ya = twist(c, y, a);
  Module src = push_down(c, ya), tgt = push_down(c, y);
  auto ls = block_layout(c, ya).first;
  auto lt = block_layout(c, y).first;
  std::vector<Mat> mats;
  for (int u = 0; u < c.base->num_vertices(); ++u) mats.emplace_back(src.field(), src.dim(u), tgt.dim(u));
  const GroupElem back = c.group().neg(a);
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (!ya.dim(v)) continue;
    int w = *c.shifted(v, back);
    mats[c.vertices[v].base].set_block(ls[v], lt[w], Mat::identity(src.field(), ya.dim(v)));
  }
  return Morphism(src, tgt, mats);
}

std::vector<GroupElem> contributing_twists(const Covering& c, const Module& x, const Module& y, int i) {
  if (x.is_zero() || y.is_zero()) return {};
  const Group& g = c.group();
  Resolution r = min_proj_resolution(x, i, true);
  std::set<GroupElem> cand;
  for (int t : r.tops[static_cast<std::size_t>(i)])
    for (int v : y.support())
      if (c.vertices[v].base == c.vertices[t].base) cand.insert(g.sub(c.vertices[t].shift, c.vertices[v].shift));
  std::vector<GroupElem> out(cand.begin(), cand.end());
  for (const auto& a : out) twist(c, y, a);  // raises WindowTooSmall for a twist that does not fit
  return out;
}

std::size_t twisted_ext_sum(const Covering& c, const Module& x, const Module& y, int i) {
  std::size_t total = 0;
  for (const auto& a : contributing_twists(c, x, y, i)) total += ext_dim(x, twist(c, y, a), i, true);
  return total;
}

LiftingFamily lift_morphism(const Covering& c, const Module& x, const Module& y, const Morphism& theta) {
  const Field& f = x.field();
  std::vector<std::pair<GroupElem, Morphism>> basis;
  for (const auto& a : contributing_twists(c, x, y, 0)) {
    for (const auto& h : hom_basis(x, twist(c, y, a))) basis.emplace_back(a, h);
  }
  LiftingFamily fam;
  if (theta.is_zero()) return fam;
  Mat target = theta.flatten();
  Mat rows(f, 0, target.cols());
  for (const auto& [a, h] : basis) {
    Morphism down = compose(push_down(c, h), pushdown_identification(c, y, a));
    rows = vstack(rows, down.flatten());
  }
  auto coeffs = basis.empty() ? std::nullopt : solve_left(rows, target);
  if (!coeffs) throw std::logic_error("morphism between push-downs has no lift");
  std::size_t k = 0;
  while (k < basis.size()) {
    const GroupElem a = basis[k].first;
    Module ya = twist(c, y, a);
    Morphism sum = Morphism::zero(x, ya);
    for (; k < basis.size() && basis[k].first == a; ++k)
      if (!(*coeffs)(0, k).is_zero()) sum = sum + basis[k].second.scaled((*coeffs)(0, k));
    if (!sum.is_zero()) fam.terms.emplace_back(a, sum);
  }
  return fam;
}

Morphism assemble(const Covering& c, const Module& x, const Module& y, const LiftingFamily& fam) {
  Morphism total = Morphism::zero(push_down(c, x), push_down(c, y));
  for (const auto& [a, f] : fam.terms) total = total + compose(push_down(c, f), pushdown_identification(c, y, a));
  return total;
}

std::optional<GroupElem> twist_equivalent(const Covering& c, const Module& m, const Module& n) {
  if (m.total_dim() != n.total_dim()) return std::nullopt;
  if (m.is_zero()) return c.group().identity();
  auto sm = m.support();
  const int v0 = sm.front();
  for (int w : n.support()) {
    if (c.vertices[w].base != c.vertices[v0].base) continue;
    GroupElem a = c.group().sub(c.vertices[w].shift, c.vertices[v0].shift);
    Module t;
    try {
      t = twist(c, m, a);
    } catch (const WindowTooSmall&) {
      continue;
    }
    if (t.dims() == n.dims() && is_isomorphic(t, n)) return a;
  }
  return std::nullopt;
}

Module recenter(const Covering& c, const Module& m) {
  const Group& g = c.group();
  if (g.is_finite() || m.is_zero()) return m;
  const int r = g.coords();
  GroupElem lo(r, INT64_MAX), hi(r, INT64_MIN);
  for (int v : m.support())
    for (int k = 0; k < r; ++k) {
      lo[k] = std::min(lo[k], c.vertices[v].shift[k]);
      hi[k] = std::max(hi[k], c.vertices[v].shift[k]);
    }
  GroupElem a(r);
  const std::int64_t mid_box = floor_div(c.window.lo() + c.window.hi(), 2);
  for (int k = 0; k < r; ++k) a[k] = mid_box - floor_div(lo[k] + hi[k], 2);
  return twist(c, m, a);
}

TwistClasses twist_classes(const Covering& c, const std::vector<Module>& pool) {
  TwistClasses tc;
  for (const auto& m : pool) {
    int cls = -1;
    for (std::size_t r = 0; r < tc.reps.size() && cls < 0; ++r)
      if (twist_equivalent(c, tc.reps[r], m)) cls = static_cast<int>(r);
    if (cls < 0) {
      cls = static_cast<int>(tc.reps.size());
      tc.reps.push_back(recenter(c, m));
    }
    tc.class_of.push_back(cls);
  }
  return tc;
}

std::vector<int> fundamental_vertices(const Covering& c) {
  std::vector<int> out;
  for (int u = 0; u < c.base->num_vertices(); ++u)
    if (auto v = c.vertex_at(u, c.group().identity())) out.push_back(*v);
  return out;
}

VerificationReport verify_ext_iso(const Covering& c, const Module& x, const Module& y, int i) {
  VerificationReport rep;
  rep.claim = "DILemma";
  rep.instance = {{"x", x.dim_vector_string()}, {"y", y.dim_vector_string()}, {"degree", i}};
  std::size_t down = ext_dim(push_down(c, x), push_down(c, y), i);
  auto twists = contributing_twists(c, x, y, i);
  std::size_t up = 0;
  nlohmann::json used = nlohmann::json::array();
  for (const auto& a : twists) {
    std::size_t d = ext_dim(x, twist(c, y, a), i, true);
    up += d;
    used.push_back({{"twist", c.group().format(a)}, {"dim", d}});
  }
  rep.note({{"downstairs", down}, {"upstairs_sum", up}, {"terms", used}});
  rep.caps = {{"support_cutoff", "twists meeting the tops of P_" + std::to_string(i)},
              {"twists_considered", twists.size()}};
  rep.require(down == up, "dim Ext downstairs equals the twist sum upstairs");
  return rep;
}

VerificationReport verify_indecomposable_preservation(const Covering& c, const Module& x) {
  VerificationReport rep;
  rep.claim = "Corres";
  rep.instance = {{"x", x.dim_vector_string()}};
  if (!is_indecomposable(x)) {
    rep.pass = Verdict::NotApplicable;
    rep.note({{"reason", "input is decomposable"}});
    return rep;
  }
  Module d = push_down(c, x);
  rep.note({{"pushdown", d.dim_vector_string()}});
  rep.require(is_indecomposable(d), "push-down of an indecomposable is indecomposable");
  return rep;
}

VerificationReport verify_orbit_bijection(const Covering& c, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "Corres";
  rep.instance = {{"window", {c.window.lo(), c.window.hi()}}};
  rep.caps = {{"dimcap", dimcap}};
  std::vector<Module> up, down;
  try {
    up = list_indecomposables(c.algebra, dimcap);
    down = list_indecomposables(c.base->algebra, dimcap);
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  TwistClasses tc = twist_classes(c, up);
  std::vector<int> hits(down.size(), 0);
  for (const auto& r : tc.reps) {
    Module d = push_down(c, r);
    int idx = find_in_pool(down, d);
    rep.require(is_indecomposable(d), "push-down of " + r.dim_vector_string() + " is indecomposable");
    rep.require(idx >= 0, "push-down of " + r.dim_vector_string() + " is a base indecomposable");
    if (idx >= 0) ++hits[static_cast<std::size_t>(idx)];
  }
  for (std::size_t i = 0; i < down.size(); ++i)
    rep.require(hits[i] == 1, "base indecomposable " + down[i].dim_vector_string() + " matched exactly once");
  rep.note({{"window_indecomposables", up.size()}, {"orbit_classes", tc.reps.size()}, {"base_indecomposables", down.size()}});
  return rep;
}

}  // namespace qcover
