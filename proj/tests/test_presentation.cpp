#include <doctest.h>

#include "golden.hpp"
#include "qcover/errors.hpp"

using namespace qcover;
using nlohmann::json;

namespace {

bool contains_monomial(const std::vector<int>& path, const std::vector<std::vector<int>>& monomials) {
  for (const auto& m : monomials)
    for (std::size_t i = 0; i + m.size() <= path.size(); ++i)
      if (std::equal(m.begin(), m.end(), path.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  return false;
}

// For monomial relations the quotient has the surviving paths as a basis.
std::size_t monomial_dim(const BoundQuiver& q, int x, int y) {
  std::vector<std::vector<int>> monos;
  for (const auto& r : q.relations) {
    REQUIRE(r.size() == 1);
    monos.push_back(r.front().path.arrows);
  }
  std::size_t count = 0;
  std::vector<std::pair<int, std::vector<int>>> layer{{x, {}}};
  for (int len = 0; len <= q.nilbound + 1 && !layer.empty(); ++len) {
    std::vector<std::pair<int, std::vector<int>>> next;
    for (auto& [v, p] : layer) {
      if (contains_monomial(p, monos)) continue;
      if (v == y) ++count;
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].src == v) {
          auto np = p;
          np.push_back(static_cast<int>(a));
          next.emplace_back(q.arrows[a].tgt, np);
        }
    }
    layer = std::move(next);
  }
  return count;
}

json loop_doc(bool with_relation) {
  json d = {{"group", {{"kind", "free-abelian"}, {"rank", 1}}},
            {"vertices", {"1"}},
            {"arrows", {{{"id", "x"}, {"src", "1"}, {"tgt", "1"}, {"weight", {1}}}}},
            {"relations", json::array()},
            {"nilbound", 1}};
  if (with_relation) d["relations"].push_back({{{"coeff", "1"}, {"path", {"x", "x"}}}});
  return d;
}

}  // namespace

TEST_CASE("loading golden presentations") {
  auto n = golden::nakayama();
  CHECK(n->num_vertices() == 3);
  CHECK(n->quiver.relations.size() == 3);
  CHECK(n->group.kind() == Group::Kind::FreeAbelian);
  auto d = golden::dual_numbers();
  CHECK(d->algebra->dim(0, 0) == 2);
  CHECK_NOTHROW(load_presentation(loop_doc(true)));
  CHECK_THROWS_AS(load_presentation(loop_doc(false)), NotLocallyBounded);
}

TEST_CASE("schema and relation validation") {
  json d = loop_doc(true);
  d["relations"] = json::array({json::array({{{"coeff", "1"}, {"path", {"x"}}}})});
  CHECK_THROWS_AS(load_presentation(d), NotAdmissible);

  json bad = loop_doc(true);
  bad["arrows"][0]["tgt"] = "7";
  CHECK_THROWS_AS(load_presentation(bad), SchemaError);
  CHECK_THROWS_AS(load_presentation(json::array()), SchemaError);

  // commutativity relation between paths of different weight
  json sq = {{"group", {{"kind", "free-abelian"}, {"rank", 1}}},
             {"vertices", {"1", "2", "3", "4"}},
             {"arrows",
              {{{"id", "a"}, {"src", "1"}, {"tgt", "2"}, {"weight", {1}}},
               {{"id", "b"}, {"src", "2"}, {"tgt", "4"}, {"weight", {0}}},
               {{"id", "c"}, {"src", "1"}, {"tgt", "3"}, {"weight", {0}}},
               {{"id", "d"}, {"src", "3"}, {"tgt", "4"}, {"weight", {0}}}}},
             {"relations", {{{{"coeff", "1"}, {"path", {"a", "b"}}}, {{"coeff", "-1"}, {"path", {"c", "d"}}}}}},
             {"nilbound", 2}};
  CHECK_THROWS_AS(load_presentation(sq), InhomogeneousRelation);
  sq["arrows"][0]["weight"] = {0};
  auto p = load_presentation(sq);
  // commutative square: one path class from 1 to 4
  CHECK(p.algebra->dim(0, 3) == 1);
  CHECK(p.algebra->dim(0, 0) == 1);
  CHECK(p.algebra->total_dim() == 9);
}

TEST_CASE("path bases") {
  auto a3 = golden::a3();
  CHECK(path_basis(*a3, 0, 2).size() == 1);
  CHECK(path_basis(*a3, 2, 0).empty());
  CHECK(path_basis(*a3, 1, 1).size() == 1);
  auto n = golden::nakayama();
  CHECK(path_basis(*n, 0, 2).empty());
  CHECK(path_basis(*n, 0, 1).size() == 1);
  CHECK(path_basis(*n, 0, 0).size() == 1);

  for (auto p : {golden::nakayama(), golden::dual_numbers(), golden::a2(), golden::a3(), golden::auslander()})
    for (int x = 0; x < p->num_vertices(); ++x)
      for (int y = 0; y < p->num_vertices(); ++y) CHECK(p->algebra->dim(x, y) == monomial_dim(p->quiver, x, y));
  // Auslander algebra of the dual numbers: P_1 = [1,2], P_2 = [2,1,2]
  auto au = golden::auslander();
  CHECK(au->algebra->dim(0, 0) + au->algebra->dim(0, 1) == 2);
  CHECK(au->algebra->dim(1, 0) + au->algebra->dim(1, 1) == 3);
}

TEST_CASE("opposite algebra reverses path spaces") {
  for (auto p : {golden::nakayama(), golden::a3(), golden::auslander()}) {
    auto op = p->algebra->opposite();
    CHECK(op->opposite().get() == p->algebra.get());
    CHECK(p->algebra->opposite().get() == op.get());
    for (int x = 0; x < p->num_vertices(); ++x)
      for (int y = 0; y < p->num_vertices(); ++y) CHECK(op->dim(y, x) == p->algebra->dim(x, y));
  }
}

TEST_CASE("square-free") {
  CHECK(is_square_free(*golden::nakayama()));
  CHECK(is_square_free(*golden::dual_numbers()));
  CHECK_FALSE(is_square_free(*golden::kronecker()));
  json two_loops = {{"vertices", {"1"}},
                    {"arrows",
                     {{{"id", "x"}, {"src", "1"}, {"tgt", "1"}, {"weight", json::array()}},
                      {{"id", "y"}, {"src", "1"}, {"tgt", "1"}, {"weight", json::array()}}}},
                    {"relations",
                     {{{{"coeff", "1"}, {"path", {"x", "x"}}}},
                      {{{"coeff", "1"}, {"path", {"x", "y"}}}},
                      {{{"coeff", "1"}, {"path", {"y", "x"}}}},
                      {{{"coeff", "1"}, {"path", {"y", "y"}}}}}},
                    {"nilbound", 1}};
  CHECK_FALSE(is_square_free(load_presentation(two_loops)));
}

TEST_CASE("smash covers") {
  auto n = golden::nakayama();
  Covering c = smash_cover(n, Window(n->group, 2));
  CHECK(c.num_vertices() == 15);
  // arrows (i,g) -> (i+1,g+1) with both shifts in [-2,2]
  CHECK(c.algebra->quiver().arrows.size() == 12);
  for (const auto& ar : c.algebra->quiver().arrows) {
    const auto &s = c.vertices[ar.src], &t = c.vertices[ar.tgt];
    CHECK(t.shift[0] == s.shift[0] + 1);
    CHECK(t.base == (s.base + 1) % 3);
  }
  for (int v = 0; v < c.num_vertices(); ++v)
    for (int w = 0; w < c.num_vertices(); ++w) CHECK(c.algebra->dim(v, w) == monomial_dim(c.algebra->quiver(), v, w));

  auto d = golden::dual_numbers();
  Covering line = smash_cover(d, Window(d->group, 0, 3));
  CHECK(line.num_vertices() == 4);
  CHECK(line.algebra->quiver().arrows.size() == 3);
  CHECK(line.algebra->dim(0, 1) == 1);
  CHECK(line.algebra->dim(0, 2) == 0);  // rad^2 = 0

  auto a2 = golden::a2();
  Covering same = smash_cover(a2, Window(a2->group, 0));
  CHECK(same.algebra->same_presentation(*a2->algebra));

  CHECK_THROWS_AS(smash_cover(n, Window(n->group, 0)), WindowTooSmall);
}

TEST_CASE("covering hom spaces sum to base hom spaces") {
  for (auto p : {golden::nakayama(), golden::dual_numbers(), golden::kronecker()}) {
    const int w = 4;
    Covering c = smash_cover(p, Window(p->group, w));
    for (int x = 0; x < p->num_vertices(); ++x)
      for (int y = 0; y < p->num_vertices(); ++y) {
        std::size_t total = 0;
        auto from = *c.vertex_at(x, {0});
        for (int g = -w; g <= w; ++g) total += c.algebra->dim(from, *c.vertex_at(y, {g}));
        CHECK(total == p->algebra->dim(x, y));
      }
  }
}

TEST_CASE("border flags mark vertices near the window edge") {
  auto n = golden::nakayama();
  Covering c = smash_cover(n, Window(n->group, 2));
  for (int v = 0; v < c.num_vertices(); ++v) {
    CHECK(c.algebra->border_out(v) == (c.vertices[v].shift[0] == 2));
    CHECK(c.algebra->border_in(v) == (c.vertices[v].shift[0] == -2));
  }
  CHECK_FALSE(c.algebra->plain()->has_border());
}

TEST_CASE("orbit presentations of finite actions") {
  Field f = Field::prime();
  SUBCASE("two copies of A2") {
    BoundQuiver q;
    q.vertices = {"1", "2", "1'", "2'"};
    q.arrows = {{"a", 0, 1}, {"a'", 2, 3}};
    q.nilbound = 1;
    auto p = orbit_of_finite_action(q, {2, {2, 3, 0, 1}, {1, 0}});
    CHECK(p.num_vertices() == 2);
    CHECK(p.quiver.arrows.size() == 1);
    CHECK(p.algebra->dim(0, 1) == 1);
  }
  SUBCASE("six-cycle modulo rotation by three") {
    BoundQuiver q;
    q.nilbound = 1;
    for (int i = 0; i < 6; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < 6; ++i) q.arrows.push_back({"c" + std::to_string(i), i, (i + 1) % 6});
    for (int i = 0; i < 6; ++i) q.relations.push_back({{f.one(), Path{i, (i + 2) % 6, {i, (i + 1) % 6}}}});
    FiniteAction act{2, {3, 4, 5, 0, 1, 2}, {3, 4, 5, 0, 1, 2}};
    auto p = orbit_of_finite_action(q, act);
    CHECK(p.num_vertices() == 3);
    CHECK(p.quiver.arrows.size() == 3);
    CHECK(p.quiver.relations.size() == 3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(p.algebra->dim(x, y) == golden::nakayama()->algebra->dim(x, y));
  }
  SUBCASE("two-cycle to the dual numbers") {
    BoundQuiver q;
    q.nilbound = 1;
    q.vertices = {"0", "1"};
    q.arrows = {{"c0", 0, 1}, {"c1", 1, 0}};
    q.relations = {{{f.one(), Path{0, 0, {0, 1}}}}, {{f.one(), Path{1, 1, {1, 0}}}}};
    auto p = orbit_of_finite_action(q, {2, {1, 0}, {1, 0}});
    CHECK(p.num_vertices() == 1);
    CHECK(p.quiver.arrows.size() == 1);
    CHECK(p.algebra->dim(0, 0) == 2);
  }
  SUBCASE("fixed vertex") {
    BoundQuiver q;
    q.nilbound = 1;
    q.vertices = {"0", "1", "2"};
    q.arrows = {};
    CHECK_THROWS_AS(orbit_of_finite_action(q, {2, {1, 0, 2}, {}}), NotFreeAction);
  }
}

TEST_CASE("smash cover followed by reconstruction") {
  for (auto p : {golden::nakayama(), golden::dual_numbers(), golden::kronecker()}) {
    Covering c = smash_cover(p, Window(p->group, 3));
    Presentation r = reconstruct_from_cover(c);
    CHECK(r.num_vertices() == p->num_vertices());
    CHECK(r.quiver.arrows.size() == p->quiver.arrows.size());
    CHECK(r.quiver.relations.size() == p->quiver.relations.size());
    CHECK(r.weights == p->weights);
    for (int x = 0; x < p->num_vertices(); ++x)
      for (int y = 0; y < p->num_vertices(); ++y) CHECK(r.algebra->dim(x, y) == p->algebra->dim(x, y));
  }
}

TEST_CASE("cover labels") {
  Group z = Group::free_abelian(1);
  auto [name, g] = parse_cover_label("a1@-3", z);
  CHECK(name == "a1");
  CHECK(g == GroupElem{-3});
  CHECK(parse_cover_label("x", z).second == GroupElem{0});
  CHECK_THROWS_AS(parse_cover_label("x@q", z), SchemaError);
  CHECK(parse_cover_label("v@7", Group::cyclic(3)).second == GroupElem{1});
}
