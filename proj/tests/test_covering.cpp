#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "qcover/covering.hpp"
#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/indecomposables.hpp"

using namespace qcover;

namespace {

std::shared_ptr<const Covering> cover_of(std::shared_ptr<const Presentation> p, int half_width) {
  return std::make_shared<const Covering>(smash_cover(p, Window(p->group, half_width)));
}

// Window indecomposables whose every contributing twist stays inside the box.
std::vector<Module> interior_pool(const Covering& c, int margin) {
  std::vector<Module> out;
  for (const auto& m : list_indecomposables(c.algebra)) {
    bool inside = true;
    for (int v : m.support()) inside = inside && c.window.depth(c.vertices[v].shift) >= margin;
    if (inside) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("twists") {
  auto n = golden::nakayama();
  auto c = cover_of(n, 3);
  const Group& g = n->group;
  Module p = projective_at(c->algebra, *c->vertex_at(0, {0}));
  CHECK(twist(*c, p, g.identity()).key() == p.key());
  for (std::int64_t a = -2; a <= 2; ++a) {
    Module t = twist(*c, p, {a});
    CHECK(is_isomorphic(t, projective_at(c->algebra, *c->vertex_at(0, {a}), false)));
    CHECK_NOTHROW(t.validate());
  }
  CHECK(is_isomorphic(twist(*c, twist(*c, p, {1}), {-2}), twist(*c, p, {-1})));
  CHECK_THROWS_AS(twist(*c, p, {3}), WindowTooSmall);
}

TEST_CASE("push-down of simples, projectives and injectives") {
  for (auto p : {golden::nakayama(), golden::dual_numbers()}) {
    auto c = cover_of(p, 4);
    for (int x : fundamental_vertices(*c)) {
      const int u = c->vertices[x].base;
      CHECK(push_down(*c, Module::simple(c->algebra, x)).key() == Module::simple(p->algebra, u).key());
      CHECK(is_isomorphic(push_down(*c, projective_at(c->algebra, x)), projective_at(p->algebra, u)));
      CHECK(is_isomorphic(push_down(*c, injective_at(c->algebra, x)), injective_at(p->algebra, u)));
    }
  }
}

TEST_CASE("push-down dimensions and functoriality") {
  auto c = cover_of(golden::nakayama(), 3);
  auto pool = list_indecomposables(c->algebra);
  for (const auto& m : pool) {
    Module d = push_down(*c, m);
    std::vector<std::size_t> expect(3, 0);
    for (int v = 0; v < c->num_vertices(); ++v) expect[c->vertices[v].base] += m.dim(v);
    CHECK(d.dims() == expect);
    CHECK_NOTHROW(d.validate());
    CHECK(push_down(*c, Morphism::identity(m)).is_iso());
  }
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& f : hom_basis(a, b))
        for (const auto& g : hom_basis(b, a)) {
          Morphism lhs = push_down(*c, compose(f, g));
          Morphism rhs = compose(push_down(*c, f), push_down(*c, g));
          CHECK(lhs.flatten() == rhs.flatten());
        }
}

TEST_CASE("pull-up is a tagged truncation") {
  auto n = golden::nakayama();
  auto c = cover_of(n, 2);
  TruncatedModule t = pull_up(*c, projective_at(n->algebra, 0));
  CHECK(t.truncated);
  CHECK(t.total_dim() == 2 * 5);
  TruncatedModule s = pull_up(*c, Module::simple(n->algebra, 1));
  CHECK(s.total_dim() == 5);
}

TEST_CASE("Hom over the covering equals the twist sum") {
  for (auto p : {golden::nakayama(), golden::dual_numbers()}) {
    auto c = cover_of(p, 5);
    auto pool = interior_pool(*c, 2);
    REQUIRE(!pool.empty());
    for (const auto& x : pool)
      for (const auto& y : pool) CHECK(twisted_hom_sum(*c, x, y) == hom_dim(push_down(*c, x), push_down(*c, y)));
  }
}

TEST_CASE("morphism lifting") {
  auto c = cover_of(golden::nakayama(), 4);
  auto pool = interior_pool(*c, 2);
  std::mt19937_64 rng(7);
  const Field& f = c->algebra->field();
  for (const auto& x : pool)
    for (const auto& y : pool) {
      Module dx = push_down(*c, x), dy = push_down(*c, y);
      CHECK(lift_morphism(*c, x, y, Morphism::zero(dx, dy)).terms.empty());
      auto basis = hom_basis(dx, dy);
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < basis.size(); ++i) coeffs.push_back(f.from_int(static_cast<std::int64_t>(rng() % 100)));
      Morphism theta = combine(basis, coeffs, dx, dy);
      LiftingFamily fam = lift_morphism(*c, x, y, theta);
      CHECK(assemble(*c, x, y, fam).flatten() == theta.flatten());
    }
  Module x = pool.front();
  for (const auto& h : hom_basis(x, x)) {
    LiftingFamily fam = lift_morphism(*c, x, x, push_down(*c, h));
    REQUIRE(fam.terms.size() == 1);
    CHECK(c->group().is_identity(fam.terms[0].first));
  }
}

TEST_CASE("Ext over the covering equals the twist sum") {
  for (auto p : {golden::nakayama(), golden::dual_numbers()}) {
    auto c = cover_of(p, 8);
    auto pool = interior_pool(*c, 4);
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (int i = 0; i <= 2; ++i) CHECK(verify_ext_iso(*c, x, y, i).passed());
  }
  auto d = golden::dual_numbers();
  auto c = cover_of(d, 6);
  Module s = Module::simple(c->algebra, fundamental_vertices(*c).front());
  VerificationReport r = verify_ext_iso(*c, s, s, 1);
  CHECK(r.passed());
  CHECK(r.witnesses[0]["downstairs"] == 1);
}

TEST_CASE("Gabriel correspondence on the golden coverings") {
  auto n = cover_of(golden::nakayama(), 6);
  VerificationReport r = verify_orbit_bijection(*n);
  CHECK(r.passed());
  CHECK(r.witnesses.back()["orbit_classes"] == 6);
  CHECK(r.witnesses.back()["base_indecomposables"] == 6);
  auto d = cover_of(golden::dual_numbers(), 4);
  VerificationReport s = verify_orbit_bijection(*d);
  CHECK(s.passed());
  CHECK(s.witnesses.back()["orbit_classes"] == 2);
  auto a = cover_of(golden::a3(), 0);
  CHECK(verify_orbit_bijection(*a).passed());
  for (const auto& m : list_indecomposables(n->algebra)) CHECK(verify_indecomposable_preservation(*n, m).passed());
}

TEST_CASE("twist classes and recentering") {
  auto c = cover_of(golden::nakayama(), 4);
  Module s = Module::simple(c->algebra, *c->vertex_at(1, {3}));
  Module r = recenter(*c, s);
  CHECK(r.dim(*c->vertex_at(1, {0})) == 1);
  CHECK(twist_equivalent(*c, s, r).has_value());
  CHECK_FALSE(twist_equivalent(*c, s, Module::simple(c->algebra, *c->vertex_at(2, {0}))).has_value());
}
