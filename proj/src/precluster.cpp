#include "qcover/precluster.hpp"

#include <optional>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/indecomposables.hpp"
#include "qcover/presentation.hpp"

namespace qcover {

using nlohmann::json;

namespace {

json describe(const Carrier& c, int n) {
  json j = {{"vertices", c.algebra->num_vertices()}, {"n", n}};
  if (c.covering) j["window"] = {c.covering->window.lo(), c.covering->window.hi()};
  return j;
}

json dim_vectors(const std::vector<Module>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(m.dim_vector_string());
  return out;
}

bool ext_free(const Carrier& c, const std::vector<Module>& xs, const std::vector<Module>& ys, int n) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      for (int i = 1; i < n; ++i)
        if (c.ext(x, y, i) != 0) return false;
  return true;
}

std::vector<Module> projectives(const Carrier& c) {
  std::vector<Module> out;
  for (int x : c.fundamental_vertices()) out.push_back(c.projective(x));
  return out;
}

std::vector<Module> injectives(const Carrier& c) {
  std::vector<Module> out;
  for (int x : c.fundamental_vertices()) out.push_back(c.injective(x));
  return out;
}

SubcategorySpec closure(const Carrier& c, int n, std::size_t cap, bool from_projectives) {
  SubcategorySpec u = make_subcategory(c, from_projectives ? projectives(c) : injectives(c));
  std::vector<Module> frontier = u.generators;
  for (std::size_t round = 0; !frontier.empty(); ++round) {
    if (round >= cap)
      throw CapExceeded(std::string(from_projectives ? "P_n" : "I_n") + " did not stabilize within " +
                        std::to_string(cap) + " rounds");
    std::vector<Module> next;
    for (const auto& f : frontier) {
      Module t = from_projectives ? tau_n_minus(f, n) : tau_n(f, n);
      if (t.is_zero()) continue;
      for (const auto& s : split_summands(t)) {
        if (generator_index(c, u, s.module) >= 0) continue;
        u.generators.push_back(c.normalize(s.module));
        next.push_back(u.generators.back());
      }
    }
    frontier = std::move(next);
  }
  return u;
}

Verdict not_applicable(VerificationReport& rep, const std::string& why) {
  rep.pass = Verdict::NotApplicable;
  rep.note({{"hypothesis", why}});
  return rep.pass;
}

}  // namespace

json PreclusterVerdict::to_json() const {
  return {{"n", n},
          {"generator_cogenerator", generator_cogenerator},
          {"tau_stable", tau_stable},
          {"tau_minus_stable", tau_minus_stable},
          {"ext_vanishing", ext_vanishing},
          {"finite_type", finite_type},
          {"pass", pass()}};
}

bool is_generator_cogenerator(const Carrier& c, const SubcategorySpec& u) {
  for (int x : c.fundamental_vertices())
    if (!in_add(c, u, c.projective(x)) || !in_add(c, u, c.injective(x))) return false;
  return true;
}

PreclusterVerdict is_n_precluster(const Carrier& c, const SubcategorySpec& u, int n) {
  PreclusterVerdict v;
  v.n = n;
  v.generator_cogenerator = is_generator_cogenerator(c, u);
  v.tau_stable = v.tau_minus_stable = true;
  for (const auto& g : u.generators) {
    v.tau_stable = v.tau_stable && in_add(c, u, tau_n(g, n));
    v.tau_minus_stable = v.tau_minus_stable && in_add(c, u, tau_n_minus(g, n));
  }
  v.ext_vanishing = ext_free(c, u.generators, u.generators, n);
  v.finite_type = !c.is_covering() || u.twist_closed;
  return v;
}

SubcategorySpec compute_Pn(const Carrier& c, int n, std::size_t cap) { return closure(c, n, cap, true); }
SubcategorySpec compute_In(const Carrier& c, int n, std::size_t cap) { return closure(c, n, cap, false); }

PerpResult perpendiculars(const Carrier& c, const SubcategorySpec& u, const std::vector<Module>& pool, int n) {
  std::vector<Module> left, right;
  for (const auto& m : pool) {
    if (ext_free(c, {m}, u.generators, n)) left.push_back(m);
    if (ext_free(c, u.generators, {m}, n)) right.push_back(m);
  }
  PerpResult r;
  r.left = make_subcategory(c, left);
  r.right = make_subcategory(c, right);
  r.symmetric = same_subcategory(c, r.left, r.right);
  return r;
}

SubcategorySpec compute_Z(const Carrier& c, const SubcategorySpec& u, const std::vector<Module>& pool, int n) {
  PerpResult r = perpendiculars(c, u, pool, n);
  if (!r.symmetric)
    throw HypothesisUnverified("left and right perpendicular categories differ (" +
                               std::to_string(r.left.generators.size()) + " vs " +
                               std::to_string(r.right.generators.size()) + ")");
  return r.left;
}

VerificationReport check_nMAG(const Algebra::Ptr& alg, int n, const std::vector<int>& vertices, bool strict) {
  VerificationReport rep;
  rep.claim = "nMAG";
  rep.instance = {{"vertices", alg->num_vertices()}, {"n", n}};
  const auto bound = static_cast<std::size_t>(n + 1);
  BoundedDim d = dominant_dimension_upto(alg, bound + 1, vertices, strict);
  rep.note({{"dominant_dimension", d.to_string()}});
  rep.require(d.value >= bound, "dom.dim >= " + std::to_string(bound));
  std::vector<int> vs = vertices;
  if (vs.empty())
    for (int x = 0; x < alg->num_vertices(); ++x) vs.push_back(x);
  json injdims = json::array();
  for (int x : vs) {
    BoundedDim id = inj_dim_upto(projective_at(alg, x, strict), bound, strict);
    injdims.push_back(id.to_string());
    rep.require(!id.at_least, "inj.dim P_" + alg->quiver().vertices[x] + " <= " + std::to_string(bound));
  }
  rep.note({{"projective_injective_dimensions", injdims}});
  return rep;
}

VerificationReport check_nMAG(const Carrier& c, int n) {
  VerificationReport rep = check_nMAG(c.algebra, n, c.fundamental_vertices(), true);
  rep.instance = describe(c, n);
  return rep;
}

VerificationReport verify_main1(const Carrier& cover, const SubcategorySpec& u, int n) {
  VerificationReport rep;
  rep.claim = "Main1";
  rep.instance = describe(cover, n);
  rep.instance["generators"] = dim_vectors(u.generators);
  PreclusterVerdict up = is_n_precluster(cover, u, n);
  rep.note({{"upstairs", up.to_json()}});
  if (!up.pass()) {
    not_applicable(rep, "U is not n-precluster tilting upstairs");
    return rep;
  }
  Carrier down = cover.downstairs();
  std::vector<Module> pushed;
  for (const auto& g : u.generators) pushed.push_back(cover.push_down(g));
  SubcategorySpec v = make_subcategory(down, pushed);
  PreclusterVerdict dv = is_n_precluster(down, v, n);
  rep.note({{"downstairs", dv.to_json()}, {"pushdown_generators", dim_vectors(v.generators)}});
  rep.require(dv.generator_cogenerator, "P_*(U) is generator-cogenerator");
  rep.require(dv.tau_stable && dv.tau_minus_stable, "P_*(U) is tau_n- and tau_n^- -stable");
  rep.require(dv.ext_vanishing, "Ext^i(P_*U, P_*U) = 0 for 0 < i < n");
  rep.require(dv.pass(), "P_*(U) is n-precluster tilting");
  return rep;
}

SubcategorySpec pushdown_preimage(const Carrier& cover, const SubcategorySpec& v, std::size_t dimcap) {
  Carrier down = cover.downstairs();
  std::vector<Module> keep;
  for (const auto& x : cover.pool(dimcap))
    if (in_add(down, v, cover.push_down(x))) keep.push_back(x);
  SubcategorySpec u = make_subcategory(cover, keep);
  u.twist_closed = cover.is_covering();
  return u;
}

VerificationReport verify_main2(const Carrier& cover, const SubcategorySpec& v, int n, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "Main2";
  rep.instance = describe(cover, n);
  rep.caps = {{"dimcap", dimcap}};
  Carrier down = cover.downstairs();
  PreclusterVerdict dv = is_n_precluster(down, v, n);
  rep.note({{"downstairs", dv.to_json()}});
  if (!dv.pass()) {
    not_applicable(rep, "V is not n-precluster tilting downstairs");
    return rep;
  }
  SubcategorySpec u;
  try {
    u = pushdown_preimage(cover, v, dimcap);
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  for (const auto& g : v.generators) {
    bool hit = false;
    for (const auto& x : u.generators) hit = hit || down.same_class(cover.push_down(x), g);
    rep.require(hit, "V generator " + g.dim_vector_string() + " is a push-down");
  }
  rep.require(u.twist_closed || !cover.is_covering(), "preimage is twist-closed");
  PreclusterVerdict uv = is_n_precluster(cover, u, n);
  rep.note({{"preimage", dim_vectors(u.generators)}, {"upstairs", uv.to_json()}});
  rep.require(uv.pass(), "P_*^{-1}(V) is n-precluster tilting");
  return rep;
}

VerificationReport verify_Pn_pushdown(const Carrier& cover, int n, std::size_t cap) {
  VerificationReport rep;
  rep.claim = "PnPushdown";
  rep.instance = describe(cover, n);
  rep.caps = {{"iterations", cap}};
  Carrier down = cover.downstairs();
  SubcategorySpec up, dn;
  try {
    up = compute_Pn(cover, n, cap);
    dn = compute_Pn(down, n, cap);
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  std::vector<int> hits(dn.generators.size(), 0);
  for (const auto& g : up.generators) {
    Module d = cover.push_down(g);
    int idx = generator_index(down, dn, d);
    rep.require(is_indecomposable(d), "push-down of " + g.dim_vector_string() + " is indecomposable");
    rep.require(idx >= 0, "push-down of " + g.dim_vector_string() + " lies in P_n downstairs");
    if (idx >= 0) ++hits[static_cast<std::size_t>(idx)];
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    rep.require(hits[i] == 1, "P_n class " + dn.generators[i].dim_vector_string() + " matched exactly once");
  rep.note({{"upstairs_classes", up.generators.size()}, {"downstairs_classes", dn.generators.size()}});
  return rep;
}

VerificationReport verify_bongab(const Carrier& cover, int n) {
  VerificationReport rep;
  rep.claim = "BonGab";
  rep.instance = describe(cover, n);
  Carrier down = cover.downstairs();
  if (!is_square_free(*down.algebra)) {
    not_applicable(rep, "NotSquareFree: the base has a two-dimensional rad/rad^2 between some pair of vertices");
    return rep;
  }
  VerificationReport up = check_nMAG(cover, n);
  VerificationReport dn = check_nMAG(down, n);
  rep.note({{"upstairs", up.to_json()}, {"downstairs", dn.to_json()}});
  rep.require(up.passed() == dn.passed(), "nMAG verdicts agree across the covering");
  return rep;
}

namespace {

using Conditions = std::vector<std::optional<bool>>;

Conditions selfinjectivity_conditions(const Carrier& c, int n, std::size_t cap, std::size_t dimcap) {
  Conditions out(5);
  try {
    out[0] = !search_preclusters(c, n, dimcap).empty();
  } catch (const CapExceeded&) {
  }
  std::optional<SubcategorySpec> in, pn;
  try {
    in = compute_In(c, n, cap);
  } catch (const CapExceeded&) {
  }
  try {
    pn = compute_Pn(c, n, cap);
  } catch (const CapExceeded&) {
  }
  const auto ps = projectives(c), is = injectives(c);
  auto contains_all = [&](const SubcategorySpec& s, const std::vector<Module>& ms) {
    for (const auto& m : ms)
      if (!in_add(c, s, m)) return false;
    return true;
  };
  if (in) {
    const bool rigid = ext_free(c, in->generators, in->generators, n);
    out[1] = rigid && ext_free(c, in->generators, ps, n);
    out[2] = rigid && contains_all(*in, ps);
  }
  if (pn) {
    const bool rigid = ext_free(c, pn->generators, pn->generators, n);
    out[3] = rigid && ext_free(c, is, pn->generators, n);
    out[4] = rigid && contains_all(*pn, is);
  }
  return out;
}

json conditions_json(const Conditions& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c ? json(*c) : json("indeterminate"));
  return out;
}

}  // namespace

VerificationReport verify_selfinjectivity_criteria(const Carrier& c, int n, std::size_t cap, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "SelfinjCriteria";
  rep.instance = describe(c, n);
  rep.caps = {{"iterations", cap}, {"dimcap", dimcap}, {"subsets", std::size_t{1} << 16}};
  std::vector<Conditions> sides{selfinjectivity_conditions(c, n, cap, dimcap)};
  rep.note({{"conditions", conditions_json(sides[0])}});
  if (c.is_covering()) {
    sides.push_back(selfinjectivity_conditions(c.downstairs(), n, cap, dimcap));
    rep.note({{"downstairs_conditions", conditions_json(sides[1])}});
  }
  std::optional<bool> first;
  bool any = false;
  for (const auto& side : sides)
    for (const auto& v : side) {
      if (!v) continue;
      any = true;
      if (!first) first = *v;
      rep.require(*v == *first, "all determinate conditions agree");
    }
  if (!any) rep.pass = Verdict::Indeterminate;
  return rep;
}

std::vector<SubcategorySpec> search_preclusters(const Carrier& c, int n, std::size_t dimcap, std::size_t subset_cap) {
  std::vector<Module> start = projectives(c);
  for (const auto& m : injectives(c)) start.push_back(m);
  SubcategorySpec base = make_subcategory(c, start);
  std::vector<Module> all = base.generators;
  const std::size_t nbase = all.size();
  for (const auto& m : c.pool(dimcap))
    if (generator_index(c, base, m) < 0) all.push_back(c.normalize(m));
  const std::size_t extra = all.size() - nbase;
  if (extra >= 63 || (std::size_t{1} << extra) > subset_cap)
    throw CapExceeded(std::to_string(extra) + " optional indecomposables exceed the subset cap");

  // per-module data, computed once: summands of tau_n, tau_n^- as pool
  // indices (-1 when outside the pool) and the Ext-graph
  const SubcategorySpec everything{all, c.is_covering()};
  auto indices = [&](const Module& t) {
    std::vector<int> idx;
    if (t.is_zero()) return idx;
    for (const auto& s : split_summands(t)) idx.push_back(generator_index(c, everything, s.module));
    return idx;
  };
  std::vector<std::vector<int>> tn, tm;
  for (const auto& m : all) {
    tn.push_back(indices(tau_n(m, n)));
    tm.push_back(indices(tau_n_minus(m, n)));
  }
  std::vector<std::vector<bool>> clash(all.size(), std::vector<bool>(all.size(), false));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) clash[a][b] = !ext_free(c, {all[a]}, {all[b]}, n);

  std::vector<SubcategorySpec> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra); ++mask) {
    std::vector<bool> in(all.size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) in[i] = i < nbase || ((mask >> (i - nbase)) & 1U);
    bool ok = true;
    for (std::size_t a = 0; ok && a < all.size(); ++a) {
      if (!in[a]) continue;
      for (int t : tn[a]) ok = ok && t >= 0 && in[static_cast<std::size_t>(t)];
      for (int t : tm[a]) ok = ok && t >= 0 && in[static_cast<std::size_t>(t)];
      for (std::size_t b = 0; ok && b < all.size(); ++b) ok = !(in[b] && clash[a][b]);
    }
    if (!ok) continue;
    SubcategorySpec u;
    u.twist_closed = c.is_covering();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (in[i]) u.generators.push_back(all[i]);
    found.push_back(std::move(u));
  }
  return found;
}

VerificationReport verify_equivalence_Z_Gp(const Carrier& c, const SubcategorySpec& u, int n, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "ZGpEquivalence";
  rep.instance = describe(c, n);
  rep.instance["generators"] = dim_vectors(u.generators);
  rep.caps = {{"dimcap", dimcap}};
  if (c.is_covering()) throw std::invalid_argument("verify_equivalence_Z_Gp runs on a plain carrier");
  PreclusterVerdict v = is_n_precluster(c, u, n);
  if (!v.pass()) {
    not_applicable(rep, "U is not n-precluster tilting");
    return rep;
  }
  std::vector<Module> pool;
  try {
    pool = c.pool(dimcap);
  } catch (const CapExceeded& e) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", e.what()}});
    return rep;
  }
  PerpResult perp = perpendiculars(c, u, pool, n);
  rep.require(perp.symmetric, "left and right perpendicular categories agree (conditions (i), (iii) read as those of U)");
  const auto& z = perp.left.generators;

  EndoCategory e = endo_category(u.generators);
  if (!satisfies_nmag(e.algebra, n)) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"HypothesisUnverified", "End(U) is not n-minimal Auslander-Gorenstein"}});
    return rep;
  }
  std::vector<Module> images;
  for (const auto& m : z) {
    images.push_back(phi(e, m));
    rep.require(is_gorenstein_projective(e, images.back(), n),
                "Phi(" + m.dim_vector_string() + ") is Gorenstein projective");
  }
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = 0; b < z.size(); ++b) {
      if (a < b) rep.require(!is_isomorphic(images[a], images[b]), "Phi separates iso-classes");
      rep.require(hom_dim(z[a], z[b]) == hom_dim(images[a], images[b]), "Phi preserves Hom dimensions");
    }
  std::vector<Module> epool;
  try {
    epool = list_indecomposables(e.algebra, dimcap);
  } catch (const CapExceeded& ex) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", ex.what()}});
    return rep;
  }
  std::size_t gp = 0;
  for (const auto& m : epool) {
    if (!is_gorenstein_projective(e, m, n)) continue;
    ++gp;
    rep.require(find_in_pool(images, m) >= 0, "Gorenstein projective " + m.dim_vector_string() + " is in the image");
  }
  rep.require(gp == z.size(), "|Z(U)| = |Gp(End U)|");
  rep.note({{"z", z.size()}, {"gorenstein_projective", gp}, {"endo_indecomposables", epool.size()}});
  return rep;
}

namespace {

// Objects ^aU_i of the window, with the ones whose Hom-neighbourhood leaves
// the window flagged.
struct WindowObjects {
  std::vector<Module> objects;
  std::vector<bool> border;
  std::vector<int> central;
};

WindowObjects window_objects(const Covering& cov, const SubcategorySpec& u) {
  WindowObjects w;
  for (const auto& g : u.generators)
    for (const auto& a : cov.window.elements()) {
      try {
        w.objects.push_back(twist(cov, g, a));
      } catch (const WindowTooSmall&) {
        continue;
      }
      if (cov.group().is_identity(a)) w.central.push_back(static_cast<int>(w.objects.size()) - 1);
    }
  const Group& grp = cov.group();
  for (const auto& o : w.objects) {
    bool cut = false;
    for (const auto& g : u.generators)
      for (int s : g.support())
        for (int t : o.support()) {
          if (cut || cov.vertices[s].base != cov.vertices[t].base) continue;
          GroupElem a = grp.sub(cov.vertices[t].shift, cov.vertices[s].shift);
          try {
            twist(cov, g, a);
          } catch (const WindowTooSmall&) {
            cut = true;
          }
        }
    w.border.push_back(cut);
  }
  return w;
}

}  // namespace

VerificationReport verify_mod_pushdown(const Carrier& cover, const SubcategorySpec& u, int n, std::size_t dimcap) {
  VerificationReport rep;
  rep.claim = "ModPushdown";
  rep.instance = describe(cover, n);
  rep.instance["generators"] = dim_vectors(u.generators);
  rep.caps = {{"dimcap", dimcap}};
  PreclusterVerdict v = is_n_precluster(cover, u, n);
  if (!v.pass()) {
    not_applicable(rep, "U is not n-precluster tilting");
    return rep;
  }
  Carrier down = cover.downstairs();
  std::vector<Module> pushed;
  for (const auto& g : u.generators) pushed.push_back(cover.push_down(g));
  EndoCategory e_down = endo_category(pushed);

  // (a)
  rep.require(satisfies_nmag(e_down.algebra, n), "mod-P_*(U) is n-minimal Auslander-Gorenstein");
  if (cover.is_covering()) {
    WindowObjects w = window_objects(*cover.covering, u);
    EndoCategory e_up = endo_category(w.objects, w.border, w.border);
    try {
      rep.require(satisfies_nmag(e_up.algebra, n, w.central, true), "mod-U is n-minimal Auslander-Gorenstein");
    } catch (const WindowTooSmall& ex) {
      rep.pass = Verdict::Indeterminate;
      rep.note({{"window", ex.what()}});
      return rep;
    }
    rep.note({{"window_objects", w.objects.size()}, {"endo_arrows", e_up.arrow_maps.size()}});
  } else {
    rep.require(satisfies_nmag(endo_category(u.generators).algebra, n), "mod-U is n-minimal Auslander-Gorenstein");
  }

  // (b)
  for (std::size_t i = 0; i < u.generators.size(); ++i)
    for (std::size_t j = 0; j < u.generators.size(); ++j)
      rep.require(cover.hom(u.generators[i], u.generators[j]) == hom_dim(pushed[i], pushed[j]),
                  "Hom over the orbit equals Hom downstairs");

  // (c)
  std::vector<Module> pool, epool;
  try {
    pool = cover.pool(dimcap);
    epool = list_indecomposables(e_down.algebra, dimcap);
  } catch (const CapExceeded& ex) {
    rep.pass = Verdict::Indeterminate;
    rep.note({{"cap", ex.what()}});
    return rep;
  }
  PerpResult perp = perpendiculars(cover, u, pool, n);
  rep.require(perp.symmetric, "left and right perpendicular categories agree upstairs");
  std::vector<Module> images;
  for (const auto& x : perp.left.generators) {
    Module y = phi(e_down, cover.push_down(x));
    for (std::size_t i = 0; i < u.generators.size(); ++i)
      rep.require(y.dim(static_cast<int>(i)) == cover.hom(u.generators[i], x), "Phi P_* = mod-P_* Phi on dimensions");
    rep.require(is_gorenstein_projective(e_down, y, n), "image of " + x.dim_vector_string() + " is Gorenstein projective");
    images.push_back(y);
  }
  std::size_t gp = 0;
  for (const auto& m : epool) {
    if (!is_gorenstein_projective(e_down, m, n)) continue;
    ++gp;
    rep.require(find_in_pool(images, m) >= 0, "Gorenstein projective " + m.dim_vector_string() + " is reached");
  }
  rep.note({{"z_classes", perp.left.generators.size()}, {"gorenstein_projective", gp}});
  return rep;
}

}  // namespace qcover
