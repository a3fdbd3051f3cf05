#include "qcover/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "qcover/errors.hpp"

namespace qcover {

using nlohmann::json;

GroupElem Presentation::path_weight(const Path& p) const {
  GroupElem w = group.identity();
  for (int a : p.arrows) w = group.add(w, weights[a]);
  return w;
}

Presentation make_presentation(BoundQuiver q, Group g, std::vector<GroupElem> weights) {
  if (weights.size() != q.arrows.size()) throw SchemaError("one weight per arrow required");
  for (auto& w : weights) w = g.normalize(w);
  Presentation p;
  p.group = g;
  p.weights = std::move(weights);
  for (const auto& rel : q.relations) {
    if (rel.empty()) continue;
    Path probe = rel.front().path;
    GroupElem w0 = g.identity();
    for (int a : probe.arrows) w0 = g.add(w0, p.weights[a]);
    for (const auto& t : rel) {
      if (t.path.src != probe.src || t.path.tgt != probe.tgt)
        throw InhomogeneousRelation("relation terms have different endpoints");
      GroupElem w = g.identity();
      for (int a : t.path.arrows) w = g.add(w, p.weights[a]);
      if (w != w0)
        throw InhomogeneousRelation("relation term " + q.format_path(t.path) + " has weight " + g.format(w) +
                                    ", expected " + g.format(w0));
    }
  }
  p.quiver = std::move(q);
  p.algebra = Algebra::build(p.quiver);
  return p;
}

namespace {

template <class T>
T get_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing '") + key + "' in " + what);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("bad '") + key + "' in " + what + ": " + e.what());
  }
}

}  // namespace

Presentation load_presentation(const json& doc) {
  if (!doc.is_object()) throw SchemaError("presentation must be a JSON object");
  BoundQuiver q;

  const json fj = doc.value("field", json{{"kind", "prime"}, {"p", Field::kDefaultPrime}});
  auto fkind = get_field<std::string>(fj, "kind", "field");
  if (fkind == "prime")
    q.field = Field::prime(fj.value("p", Field::kDefaultPrime));
  else if (fkind == "rationals" || fkind == "rational")
    q.field = Field::rationals();
  else
    throw SchemaError("unknown field kind '" + fkind + "'");

  Group g = Group::trivial();
  if (doc.contains("group")) {
    const json& gj = doc["group"];
    auto gkind = get_field<std::string>(gj, "kind", "group");
    if (gkind == "free-abelian")
      g = Group::free_abelian(get_field<int>(gj, "rank", "group"));
    else if (gkind == "cyclic")
      g = Group::cyclic(get_field<std::int64_t>(gj, "order", "group"));
    else if (gkind == "trivial")
      g = Group::trivial();
    else
      throw SchemaError("unknown group kind '" + gkind + "'");
  }

  q.vertices = get_field<std::vector<std::string>>(doc, "vertices", "presentation");
  std::set<std::string> seen(q.vertices.begin(), q.vertices.end());
  if (seen.size() != q.vertices.size()) throw SchemaError("duplicate vertex id");

  std::vector<GroupElem> weights;
  std::set<std::string> arrow_ids;
  for (const auto& aj : get_field<json>(doc, "arrows", "presentation")) {
    Arrow a;
    a.id = get_field<std::string>(aj, "id", "arrow");
    if (!arrow_ids.insert(a.id).second) throw SchemaError("duplicate arrow id '" + a.id + "'");
    auto s = q.vertex_index(get_field<std::string>(aj, "src", "arrow"));
    auto t = q.vertex_index(get_field<std::string>(aj, "tgt", "arrow"));
    if (!s || !t) throw SchemaError("arrow '" + a.id + "' has unknown endpoint");
    a.src = *s;
    a.tgt = *t;
    q.arrows.push_back(a);
    GroupElem w = aj.contains("weight") ? aj["weight"].get<GroupElem>() : g.identity();
    if (static_cast<int>(w.size()) != g.coords()) throw SchemaError("arrow '" + a.id + "' weight has wrong length");
    weights.push_back(w);
  }

  if (doc.contains("relations")) {
    for (const auto& rj : doc["relations"]) {
      if (!rj.is_array() || rj.empty()) throw SchemaError("relation must be a non-empty list of terms");
      Relation rel;
      for (const auto& tj : rj) {
        Term t;
        json cj = tj.value("coeff", json("1"));
        t.coeff = q.field.parse(cj.is_string() ? cj.get<std::string>() : cj.dump());
        t.path = q.path_from_ids(get_field<std::vector<std::string>>(tj, "path", "relation term"));
        if (!t.coeff.is_zero()) rel.push_back(std::move(t));
      }
      if (!rel.empty()) q.relations.push_back(std::move(rel));
    }
  }
  q.nilbound = get_field<int>(doc, "nilbound", "presentation");
  return make_presentation(std::move(q), g, std::move(weights));
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return load_presentation(doc);
}

json presentation_to_json(const Presentation& p) {
  json j;
  const Field& f = p.field();
  if (f.is_prime())
    j["field"] = {{"kind", "prime"}, {"p", f.characteristic()}};
  else
    j["field"] = {{"kind", "rationals"}};
  if (p.group.kind() == Group::Kind::Cyclic)
    j["group"] = {{"kind", "cyclic"}, {"order", p.group.order()}};
  else
    j["group"] = {{"kind", "free-abelian"}, {"rank", p.group.rank()}};
  j["vertices"] = p.quiver.vertices;
  j["arrows"] = json::array();
  for (std::size_t i = 0; i < p.quiver.arrows.size(); ++i) {
    const Arrow& a = p.quiver.arrows[i];
    j["arrows"].push_back({{"id", a.id},
                           {"src", p.quiver.vertices[a.src]},
                           {"tgt", p.quiver.vertices[a.tgt]},
                           {"weight", p.weights[i]}});
  }
  j["relations"] = json::array();
  for (const auto& rel : p.quiver.relations) {
    json r = json::array();
    for (const auto& t : rel) {
      std::vector<std::string> ids;
      for (int a : t.path.arrows) ids.push_back(p.quiver.arrows[a].id);
      r.push_back({{"coeff", f.format(t.coeff)}, {"path", ids}});
    }
    j["relations"].push_back(r);
  }
  j["nilbound"] = p.quiver.nilbound;
  return j;
}

std::vector<Path> path_basis(const Presentation& p, int x, int y) { return p.algebra->basis(x, y); }

bool is_square_free(const Algebra& a) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& ar : a.quiver().arrows)
    if (++count[{ar.src, ar.tgt}] > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// smash cover

std::optional<int> Covering::vertex_at(int base_vertex, const GroupElem& g) const {
  auto idx = window.index_of(g);
  if (!idx) return std::nullopt;
  return static_cast<int>(*idx) * base->num_vertices() + base_vertex;
}

std::optional<int> Covering::arrow_at(int base_arrow, const GroupElem& g) const {
  auto idx = window.index_of(g);
  if (!idx) return std::nullopt;
  return arrow_lookup[*idx * base->quiver.arrows.size() + base_arrow];
}

std::optional<int> Covering::shifted(int v, const GroupElem& a) const {
  return vertex_at(vertices[v].base, group().add(vertices[v].shift, a));
}

std::string Covering::vertex_name(int v) const {
  if (group().is_trivial()) return base->quiver.vertices[vertices[v].base];
  return base->quiver.vertices[vertices[v].base] + "@" + group().format(vertices[v].shift);
}

namespace {

/// Shift offsets reachable from each base vertex by quiver paths of length <= l.
std::vector<std::vector<GroupElem>> reachable_offsets(const Presentation& p, int l, bool forward) {
  const int n = p.num_vertices();
  std::vector<std::vector<GroupElem>> out(n);
  for (int v = 0; v < n; ++v) {
    std::set<std::pair<int, GroupElem>> seen{{v, p.group.identity()}};
    std::vector<std::pair<int, GroupElem>> layer{{v, p.group.identity()}};
    for (int step = 0; step < l; ++step) {
      std::vector<std::pair<int, GroupElem>> next;
      for (const auto& [u, g] : layer)
        for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
          const Arrow& ar = p.quiver.arrows[a];
          if ((forward ? ar.src : ar.tgt) != u) continue;
          std::pair<int, GroupElem> nxt{forward ? ar.tgt : ar.src,
                                        forward ? p.group.add(g, p.weights[a]) : p.group.sub(g, p.weights[a])};
          if (seen.insert(nxt).second) next.push_back(nxt);
        }
      layer = std::move(next);
    }
    std::set<GroupElem> offs;
    for (const auto& s : seen) offs.insert(s.second);
    out[v].assign(offs.begin(), offs.end());
  }
  return out;
}

}  // namespace

Covering smash_cover(std::shared_ptr<const Presentation> pres, const Window& window) {
  if (!(window.group() == pres->group)) throw SchemaError("window group differs from presentation group");
  Covering cov(pres, window);
  const Group& g = pres->group;
  const int nb = pres->num_vertices();
  const std::size_t na = pres->quiver.arrows.size();

  BoundQuiver q;
  q.field = pres->field();
  q.nilbound = pres->quiver.nilbound;
  for (const auto& s : window.elements())
    for (int b = 0; b < nb; ++b) {
      cov.vertices.push_back({b, s});
      q.vertices.push_back(g.is_trivial() ? pres->quiver.vertices[b] : pres->quiver.vertices[b] + "@" + g.format(s));
    }
  cov.arrow_lookup.assign(window.size() * na, std::nullopt);
  for (std::size_t si = 0; si < window.size(); ++si) {
    const GroupElem& s = window.elements()[si];
    for (std::size_t a = 0; a < na; ++a) {
      const Arrow& ar = pres->quiver.arrows[a];
      auto src = cov.vertex_at(ar.src, s);
      auto tgt = cov.vertex_at(ar.tgt, g.add(s, pres->weights[a]));
      if (!src || !tgt) continue;
      cov.arrow_lookup[si * na + a] = static_cast<int>(q.arrows.size());
      cov.arrows.emplace_back(static_cast<int>(a), s);
      q.arrows.push_back({g.is_trivial() ? ar.id : ar.id + "@" + g.format(s), *src, *tgt});
    }
  }

  // lift a base path starting at shift s; nullopt when it leaves the box
  auto lift = [&](const Path& p, const GroupElem& s) -> std::optional<Path> {
    Path r;
    GroupElem cur = s;
    auto start = cov.vertex_at(p.src, s);
    if (!start) return std::nullopt;
    r.src = r.tgt = *start;
    for (int a : p.arrows) {
      auto ai = cov.arrow_at(a, cur);
      if (!ai) return std::nullopt;
      r.arrows.push_back(*ai);
      cur = g.add(cur, pres->weights[a]);
      r.tgt = q.arrows[*ai].tgt;
    }
    return r;
  };

  for (const auto& rel : pres->quiver.relations) {
    bool fits_somewhere = false;
    for (const auto& s : window.elements()) {
      Relation lifted;
      bool complete = true;
      for (const auto& t : rel) {
        auto lp = lift(t.path, s);
        if (lp)
          lifted.push_back({t.coeff, *lp});
        else
          complete = false;
      }
      fits_somewhere = fits_somewhere || complete;
      if (!lifted.empty()) q.relations.push_back(std::move(lifted));
    }
    if (!fits_somewhere)
      throw WindowTooSmall("no translate of relation " + pres->quiver.format_path(rel.front().path) +
                           " fits in the window");
  }

  std::vector<bool> border_out(cov.vertices.size(), false), border_in(cov.vertices.size(), false);
  if (!g.is_finite()) {
    auto fwd = reachable_offsets(*pres, pres->quiver.nilbound, true);
    auto bwd = reachable_offsets(*pres, pres->quiver.nilbound, false);
    for (std::size_t v = 0; v < cov.vertices.size(); ++v) {
      const auto& cv = cov.vertices[v];
      for (const auto& o : fwd[cv.base])
        if (!window.contains(g.add(cv.shift, o))) border_out[v] = true;
      for (const auto& o : bwd[cv.base])
        if (!window.contains(g.add(cv.shift, o))) border_in[v] = true;
    }
  }
  cov.algebra = Algebra::build(std::move(q), std::move(border_out), std::move(border_in));
  return cov;
}

// ---------------------------------------------------------------------------
// orbit constructions

namespace {

/// Relation scaled so that its first term (in sorted order) has coefficient 1.
Relation normalized(Relation rel, const Field& f) {
  std::sort(rel.begin(), rel.end(), [](const Term& a, const Term& b) { return a.path < b.path; });
  Relation merged;
  for (auto& t : rel) {
    if (!merged.empty() && merged.back().path == t.path)
      merged.back().coeff = f.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  if (!merged.empty()) {
    Scalar lead = f.inv(merged.front().coeff);
    for (auto& t : merged) t.coeff = f.mul(t.coeff, lead);
  }
  return merged;
}

bool same_relation(const Relation& a, const Relation& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].coeff == b[i].coeff) || a[i].path != b[i].path) return false;
  return true;
}

}  // namespace

Presentation orbit_of_finite_action(const BoundQuiver& c, const FiniteAction& act) {
  const int n = static_cast<int>(c.vertices.size());
  const int na = static_cast<int>(c.arrows.size());
  if (static_cast<int>(act.vertex_perm.size()) != n || static_cast<int>(act.arrow_perm.size()) != na)
    throw SchemaError("action permutations have wrong size");
  if (act.order < 1) throw SchemaError("action order must be positive");

  // powers of the generator
  std::vector<std::vector<int>> vpow{std::vector<int>(n)}, apow{std::vector<int>(na)};
  for (int i = 0; i < n; ++i) vpow[0][i] = i;
  for (int i = 0; i < na; ++i) apow[0][i] = i;
  for (std::int64_t k = 1; k <= act.order; ++k) {
    std::vector<int> vv(n), aa(na);
    for (int i = 0; i < n; ++i) vv[i] = act.vertex_perm[vpow.back()[i]];
    for (int i = 0; i < na; ++i) aa[i] = act.arrow_perm[apow.back()[i]];
    vpow.push_back(vv);
    apow.push_back(aa);
  }
  if (vpow[act.order] != vpow[0] || apow[act.order] != apow[0])
    throw SchemaError("generator does not have the declared order");
  for (std::int64_t k = 1; k < act.order; ++k)
    for (int v = 0; v < n; ++v)
      if (vpow[k][v] == v) throw NotFreeAction("vertex " + c.vertices[v] + " is fixed by a non-identity element");
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = c.arrows[a];
    const Arrow& im = c.arrows[act.arrow_perm[a]];
    if (im.src != act.vertex_perm[ar.src] || im.tgt != act.vertex_perm[ar.tgt])
      throw SchemaError("arrow permutation is not compatible with the vertex permutation");
  }

  // orbits with the smallest member as representative
  std::vector<int> orbit_of(n, -1), rep;
  std::vector<std::int64_t> shift_of(n, 0);  // v = g^shift(rep)
  for (int v = 0; v < n; ++v) {
    if (orbit_of[v] >= 0) continue;
    int o = static_cast<int>(rep.size());
    rep.push_back(v);
    for (std::int64_t k = 0; k < act.order; ++k) {
      orbit_of[vpow[k][v]] = o;
      shift_of[vpow[k][v]] = k;
    }
  }
  std::vector<int> arrow_orbit(na, -1);
  std::vector<int> arrow_rep;
  std::vector<std::int64_t> arrow_shift(na, 0);
  for (int a = 0; a < na; ++a) {
    if (arrow_orbit[a] >= 0) continue;
    // choose the member whose source is the orbit representative
    int chosen = -1;
    for (std::int64_t k = 0; k < act.order; ++k)
      if (c.arrows[apow[k][a]].src == rep[orbit_of[c.arrows[a].src]]) chosen = apow[k][a];
    int o = static_cast<int>(arrow_rep.size());
    arrow_rep.push_back(chosen);
    for (std::int64_t k = 0; k < act.order; ++k) {
      arrow_orbit[apow[k][chosen]] = o;
      arrow_shift[apow[k][chosen]] = k;
    }
  }

  BoundQuiver q;
  q.field = c.field;
  q.nilbound = c.nilbound;
  for (int r : rep) q.vertices.push_back(c.vertices[r]);
  Group g = Group::cyclic(act.order);
  std::vector<GroupElem> weights;
  for (int a : arrow_rep) {
    const Arrow& ar = c.arrows[a];
    q.arrows.push_back({ar.id, orbit_of[ar.src], orbit_of[ar.tgt]});
    weights.push_back(g.normalize({shift_of[ar.tgt]}));
  }

  auto project = [&](const Relation& rel) {
    Relation r;
    for (const auto& t : rel) {
      Path p{orbit_of[t.path.src], orbit_of[t.path.tgt], {}};
      for (int a : t.path.arrows) p.arrows.push_back(arrow_orbit[a]);
      r.push_back({t.coeff, p});
    }
    return normalized(r, c.field);
  };
  auto translate = [&](const Relation& rel) {
    Relation r;
    for (const auto& t : rel) {
      Path p{act.vertex_perm[t.path.src], act.vertex_perm[t.path.tgt], {}};
      for (int a : t.path.arrows) p.arrows.push_back(act.arrow_perm[a]);
      r.push_back({t.coeff, p});
    }
    return normalized(r, c.field);
  };
  std::vector<Relation> upstairs;
  for (const auto& rel : c.relations) upstairs.push_back(normalized(rel, c.field));
  for (const auto& rel : upstairs) {
    Relation moved = translate(rel);
    bool found = std::any_of(upstairs.begin(), upstairs.end(), [&](const Relation& r) { return same_relation(r, moved); });
    if (!found) throw NotFreeAction("the action does not permute the relations");
  }
  for (const auto& rel : upstairs) {
    Relation down = project(rel);
    if (down.empty()) continue;
    bool dup = std::any_of(q.relations.begin(), q.relations.end(), [&](const Relation& r) { return same_relation(r, down); });
    if (!dup) q.relations.push_back(std::move(down));
  }
  return make_presentation(std::move(q), g, std::move(weights));
}

Presentation reconstruct_from_cover(const Covering& cov) {
  const Presentation& base = *cov.base;
  const Group& g = base.group;
  BoundQuiver q;
  q.field = base.field();
  q.nilbound = cov.algebra->nilbound();
  q.vertices = base.quiver.vertices;
  const int na = static_cast<int>(base.quiver.arrows.size());
  std::vector<GroupElem> weights(na);
  std::vector<bool> have(na, false);
  for (std::size_t i = 0; i < cov.arrows.size(); ++i) {
    int a = cov.arrows[i].first;
    if (have[a]) continue;
    const Arrow& up = cov.algebra->arrow(static_cast<int>(i));
    weights[a] = g.sub(cov.vertices[up.tgt].shift, cov.vertices[up.src].shift);
    have[a] = true;
  }
  for (int a = 0; a < na; ++a) {
    if (!have[a]) throw WindowTooSmall("arrow " + base.quiver.arrows[a].id + " has no lift in the window");
    q.arrows.push_back({base.quiver.arrows[a].id, base.quiver.arrows[a].src, base.quiver.arrows[a].tgt});
  }
  // keep only relations lifted without truncation: those have the full term count
  std::vector<Relation> out;
  for (const auto& rel : cov.algebra->quiver().relations) {
    Relation down;
    for (const auto& t : rel) {
      Path p{cov.vertices[t.path.src].base, cov.vertices[t.path.tgt].base, {}};
      for (int a : t.path.arrows) p.arrows.push_back(cov.arrows[a].first);
      down.push_back({t.coeff, p});
    }
    down = normalized(down, q.field);
    if (down.empty()) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Relation& r) { return same_relation(r, down); });
    if (!dup) out.push_back(std::move(down));
  }
  // a truncated lift is a sub-sum of a complete one; drop relations whose
  // terms are a strict subset of another relation's terms
  for (const auto& rel : out) {
    bool strict_sub = std::any_of(out.begin(), out.end(), [&](const Relation& other) {
      if (other.size() <= rel.size()) return false;
      return std::all_of(rel.begin(), rel.end(), [&](const Term& t) {
        return std::any_of(other.begin(), other.end(), [&](const Term& u) { return u.path == t.path; });
      });
    });
    if (!strict_sub) q.relations.push_back(rel);
  }
  return make_presentation(std::move(q), g, std::move(weights));
}

std::pair<std::string, GroupElem> parse_cover_label(const std::string& label, const Group& g) {
  auto at = label.rfind('@');
  if (at == std::string::npos) return {label, g.identity()};
  std::string name = label.substr(0, at), rest = label.substr(at + 1);
  GroupElem e;
  std::size_t pos = 0;
  while (!rest.empty() && pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string part = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      e.push_back(std::stoll(part, &used));
      if (used != part.size()) throw SchemaError("bad group element in '" + label + "'");
    } catch (const std::logic_error&) {
      throw SchemaError("bad group element in '" + label + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {name, g.normalize(e)};
}

}  // namespace qcover
