#include "qcover/tau_tilting.hpp"

#include <stdexcept>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/precluster.hpp"

namespace qcover {

using nlohmann::json;

namespace {

json dim_vectors(const std::vector<Module>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(m.dim_vector_string());
  return out;
}

json describe(const Carrier& c, int n) {
  json j = {{"vertices", c.algebra->num_vertices()}, {"n", n}};
  if (c.covering) j["window"] = {c.covering->window.lo(), c.covering->window.hi()};
  return j;
}

SubcategorySpec spec_of(const Carrier& c, const std::vector<Module>& ms) { return {ms, c.is_covering()}; }

std::vector<Module> fundamental_projectives(const Carrier& c) {
  std::vector<Module> out;
  for (int x : c.fundamental_vertices()) out.push_back(c.projective(x));
  return out;
}

bool support_tilting_unchecked(const Carrier& c, const TiltingPair& t, int n) {
  if (!is_rigid_pair(c, t, n)) return false;
  const SubcategorySpec ms = spec_of(c, t.m);
  for (const auto& nn : t.ambient.generators) {
    if (generator_index(c, ms, nn) >= 0) continue;
    TiltingPair bigger = t;
    bigger.m.push_back(nn);
    if (is_rigid_pair(c, bigger, n)) return false;
  }
  const SubcategorySpec ps = spec_of(c, t.p);
  for (const auto& q : fundamental_projectives(c)) {
    const bool in_p = generator_index(c, ps, q) >= 0;
    bool killed = true;
    for (const auto& m : t.m) killed = killed && c.hom(q, m) == 0;
    if (in_p != killed) return false;
  }
  return true;
}

TiltingPair pushed_pair(const Carrier& cover, const TiltingPair& t) {
  Carrier down = cover.downstairs();
  TiltingPair d;
  for (const auto& m : t.m) d.m.push_back(cover.push_down(m));
  for (const auto& p : t.p) d.p.push_back(cover.push_down(p));
  std::vector<Module> amb;
  for (const auto& g : t.ambient.generators) amb.push_back(cover.push_down(g));
  d.ambient = make_subcategory(down, amb);
  return d;
}

// Same pair up to iso (and twist): equal class sets of M and of P.
bool same_pair(const Carrier& c, const TiltingPair& a, const TiltingPair& b) {
  return same_subcategory(c, spec_of(c, a.m), spec_of(c, b.m)) && same_subcategory(c, spec_of(c, a.p), spec_of(c, b.p));
}

}  // namespace

json TiltingPair::to_json() const { return {{"M", dim_vectors(m)}, {"P", dim_vectors(p)}}; }

bool is_n_cluster_tilting(const Carrier& c, const SubcategorySpec& u, int n, const std::vector<Module>& pool) {
  PerpResult r = perpendiculars(c, u, pool, n);
  return same_subcategory(c, r.left, u) && same_subcategory(c, r.right, u);
}

bool is_G_tau_n_rigid(const Carrier& c, const std::vector<Module>& m, int n) {
  for (const auto& y : m) {
    Module t = tau_n(y, n);
    if (t.is_zero()) continue;
    for (const auto& x : m)
      if (c.hom(x, t) != 0) return false;
  }
  return true;
}

bool is_rigid_pair(const Carrier& c, const TiltingPair& t, int n) {
  if (!is_G_tau_n_rigid(c, t.m, n)) return false;
  for (const auto& p : t.p)
    for (const auto& m : t.m)
      if (c.hom(p, m) != 0) return false;
  return true;
}

bool is_support_tilting_pair(const Carrier& c, const TiltingPair& t, int n, std::size_t dimcap) {
  if (!is_n_cluster_tilting(c, t.ambient, n, c.pool(dimcap)))
    throw AmbientNotClusterTilting("ambient is not " + std::to_string(n) + "-cluster tilting over the pool");
  for (const auto& m : t.m)
    if (!in_add(c, t.ambient, m)) throw std::invalid_argument("pair: M is not in the ambient subcategory");
  for (const auto& p : t.p)
    if (!is_projective(p)) throw std::invalid_argument("pair: P is not projective");
  return support_tilting_unchecked(c, t, n);
}

std::vector<TiltingPair> enumerate_support_tilting_pairs(const Carrier& c, const SubcategorySpec& ambient, int n,
                                                         std::size_t cap, std::size_t dimcap) {
  if (ambient.generators.empty()) return {};
  if (!is_n_cluster_tilting(c, ambient, n, c.pool(dimcap)))
    throw AmbientNotClusterTilting("ambient is not " + std::to_string(n) + "-cluster tilting over the pool");
  const auto& a = ambient.generators;
  const auto q = fundamental_projectives(c);
  const std::size_t na = a.size(), nq = q.size();
  if (na + nq >= 63 || (std::size_t{1} << (na + nq)) > cap)
    throw CapExceeded(std::to_string(na + nq) + " indecomposables exceed the subset cap");

  // rig[i][j]: Hom(A_i, tau_n A_j) = 0; free[k][i]: Hom(Q_k, A_i) = 0
  std::vector<std::vector<bool>> rig(na, std::vector<bool>(na, true)), free(nq, std::vector<bool>(na, true));
  for (std::size_t j = 0; j < na; ++j) {
    Module t = tau_n(a[j], n);
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i < na; ++i) rig[i][j] = c.hom(a[i], t) == 0;
  }
  for (std::size_t k = 0; k < nq; ++k)
    for (std::size_t i = 0; i < na; ++i) free[k][i] = c.hom(q[k], a[i]) == 0;

  auto rigid_with = [&](std::size_t mmask, std::size_t pmask, std::size_t i) {
    if (!rig[i][i]) return false;
    for (std::size_t j = 0; j < na; ++j)
      if (((mmask >> j) & 1U) && (!rig[i][j] || !rig[j][i])) return false;
    for (std::size_t k = 0; k < nq; ++k)
      if (((pmask >> k) & 1U) && !free[k][i]) return false;
    return true;
  };

  std::vector<TiltingPair> out;
  for (std::size_t mmask = 0; mmask < (std::size_t{1} << na); ++mmask)
    for (std::size_t pmask = 0; pmask < (std::size_t{1} << nq); ++pmask) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < na; ++i)
        if ((mmask >> i) & 1U) ok = rigid_with(mmask & ~(std::size_t{1} << i), pmask, i);
      for (std::size_t i = 0; ok && i < na; ++i)
        if (!((mmask >> i) & 1U)) ok = !rigid_with(mmask, pmask, i);
      for (std::size_t k = 0; ok && k < nq; ++k) {
        bool killed = true;
        for (std::size_t i = 0; i < na; ++i)
          if ((mmask >> i) & 1U) killed = killed && free[k][i];
        ok = (((pmask >> k) & 1U) != 0) == killed;
      }
      if (!ok) continue;
      TiltingPair t;
      t.ambient = ambient;
      for (std::size_t i = 0; i < na; ++i)
        if ((mmask >> i) & 1U) t.m.push_back(a[i]);
      for (std::size_t k = 0; k < nq; ++k)
        if ((pmask >> k) & 1U) t.p.push_back(q[k]);
      out.push_back(std::move(t));
    }
  return out;
}

VerificationReport verify_tilting_pushdown(const Carrier& cover, const TiltingPair& t, int n, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "TiltingPushdown";
  rep.instance = describe(cover, n);
  rep.instance["pair"] = t.to_json();
  rep.caps = {{"dimcap", dimcap}};
  Carrier down = cover.downstairs();
  TiltingPair d = pushed_pair(cover, t);
  bool up = false, dn = false;
  try {
    up = is_support_tilting_pair(cover, t, n, dimcap);
    dn = is_support_tilting_pair(down, d, n, dimcap);
  } catch (const AmbientNotClusterTilting& e) {
    rep.pass = Verdict::NotApplicable;
    rep.note({{"hypothesis", e.what()}});
    return rep;
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  rep.note({{"upstairs", up}, {"downstairs", dn}});
  rep.require(!up || dn, "support (G, tau_n)-tilting pushes down to support tau_n-tilting");
  rep.require(!dn || up, "support tau_n-tilting push-down pulls back");
  return rep;
}

VerificationReport verify_tilting_enumeration(const Carrier& cover, const SubcategorySpec& ambient, int n,
                                              std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "TiltingPushdown";
  rep.instance = describe(cover, n);
  rep.caps = {{"dimcap", dimcap}, {"subsets", std::size_t{1} << 20}};
  Carrier down = cover.downstairs();
  std::vector<Module> amb;
  for (const auto& g : ambient.generators) amb.push_back(cover.push_down(g));
  SubcategorySpec ambient_down = make_subcategory(down, amb);
  std::vector<TiltingPair> up, dn;
  try {
    up = enumerate_support_tilting_pairs(cover, ambient, n, std::size_t{1} << 20, dimcap);
    dn = enumerate_support_tilting_pairs(down, ambient_down, n, std::size_t{1} << 20, dimcap);
  } catch (const AmbientNotClusterTilting& e) {
    rep.pass = Verdict::NotApplicable;
    rep.note({{"hypothesis", e.what()}});
    return rep;
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  std::vector<int> hits(dn.size(), 0);
  for (const auto& t : up) {
    TiltingPair d = pushed_pair(cover, t);
    int found = -1;
    for (std::size_t i = 0; i < dn.size() && found < 0; ++i)
      if (same_pair(down, d, dn[i])) found = static_cast<int>(i);
    rep.require(found >= 0, "push-down of " + t.to_json().dump() + " is enumerated downstairs");
    if (found >= 0) ++hits[static_cast<std::size_t>(found)];
  }
  for (std::size_t i = 0; i < dn.size(); ++i)
    rep.require(hits[i] == 1, "downstairs pair " + dn[i].to_json().dump() + " matched exactly once");
  rep.note({{"upstairs_pairs", up.size()}, {"downstairs_pairs", dn.size()}});
  return rep;
}

VerificationReport scan_tau_n_tilting_finite(const Carrier& cover, int n, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "TiltingFinite";
  rep.instance = describe(cover, n);
  rep.caps = {{"dimcap", dimcap}};
  Carrier down = cover.downstairs();
  std::vector<Module> up_pool, down_pool;
  try {
    up_pool = cover.pool(dimcap);
    down_pool = down.pool(dimcap);
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  std::vector<Module> up_rigid, down_rigid;
  for (const auto& m : up_pool)
    if (is_G_tau_n_rigid(cover, m, n)) up_rigid.push_back(m);
  for (const auto& m : down_pool)
    if (is_G_tau_n_rigid(down, m, n)) down_rigid.push_back(m);

  // per base vertex: classes meeting its fibre, and twists meeting the
  // fundamental-domain vertex (with multiplicity)
  const int nb = down.algebra->num_vertices();
  std::vector<std::size_t> up_classes(static_cast<std::size_t>(nb), 0), up_twists(static_cast<std::size_t>(nb), 0),
      down_count(static_cast<std::size_t>(nb), 0);
  for (const auto& m : up_rigid) {
    std::vector<std::size_t> per(static_cast<std::size_t>(nb), 0);
    for (int v : m.support()) {
      int b = cover.covering ? cover.covering->vertices[v].base : v;
      ++per[static_cast<std::size_t>(b)];
    }
    for (int b = 0; b < nb; ++b) {
      up_twists[b] += per[b];
      if (per[b]) ++up_classes[b];
    }
  }
  for (const auto& m : down_rigid)
    for (int b : m.support()) ++down_count[static_cast<std::size_t>(b)];
  for (int b = 0; b < nb; ++b)
    rep.require(up_classes[b] == down_count[b], "rigid counts agree at vertex " + down.algebra->quiver().vertices[b]);

  // the rigid classes correspond under push-down
  std::vector<int> hits(down_rigid.size(), 0);
  for (const auto& m : up_rigid) {
    Module d = cover.push_down(m);
    int idx = generator_index(down, spec_of(down, down_rigid), d);
    rep.require(idx >= 0 && is_indecomposable(d), "push-down of rigid " + m.dim_vector_string() + " is rigid indecomposable");
    if (idx >= 0) ++hits[static_cast<std::size_t>(idx)];
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    rep.require(hits[i] == 1, "rigid " + down_rigid[i].dim_vector_string() + " matched exactly once");
  rep.note({{"upstairs_rigid_classes", up_rigid.size()},
            {"downstairs_rigid", down_rigid.size()},
            {"per_vertex_upstairs", up_classes},
            {"per_vertex_upstairs_twists", up_twists},
            {"per_vertex_downstairs", down_count}});
  return rep;
}

}  // namespace qcover
