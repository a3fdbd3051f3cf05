#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "qcover/covering.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"
#include "qcover/indecomposables.hpp"
#include "qcover/tau_tilting.hpp"

using namespace qcover;
using nlohmann::json;

namespace {

std::shared_ptr<const Covering> cover_of(std::shared_ptr<const Presentation> p, int half_width) {
  return std::make_shared<const Covering>(smash_cover(p, Window(p->group, half_width)));
}

Algebra::Ptr semisimple(int k) {
  json doc = {{"vertices", json::array()}, {"arrows", json::array()}, {"nilbound", 0}};
  for (int i = 1; i <= k; ++i) doc["vertices"].push_back(std::to_string(i));
  return load_presentation(doc).algebra;
}

SubcategorySpec everything(const Carrier& c) { return make_subcategory(c, c.pool()); }

}  // namespace

TEST_CASE("n-cluster tilting subcategories") {
  Carrier nak = Carrier::plain(golden::nakayama()->algebra);
  auto pool = nak.pool();
  CHECK(is_n_cluster_tilting(nak, everything(nak), 1, pool));
  CHECK_FALSE(is_n_cluster_tilting(nak, make_subcategory(nak, {pool[0]}), 1, pool));

  Carrier ss = Carrier::plain(semisimple(2));
  for (int n = 1; n <= 3; ++n) CHECK(is_n_cluster_tilting(ss, everything(ss), n, ss.pool()));

  // kA_2, n = 2: Ext^1(S_1, S_2) != 0 keeps S_1 out of the left perp
  Carrier a2 = Carrier::plain(golden::a2()->algebra);
  auto all = everything(a2);
  bool oracle = true;
  for (const auto& x : all.generators)
    for (const auto& y : all.generators) oracle = oracle && ext_dim(x, y, 1) == 0;
  CHECK(is_n_cluster_tilting(a2, all, 2, a2.pool()) == oracle);
  CHECK_FALSE(oracle);
}

TEST_CASE("tau_n-rigidity") {
  auto nak = golden::nakayama();
  Carrier c = Carrier::plain(nak->algebra);
  for (int x = 0; x < 3; ++x) CHECK(is_G_tau_n_rigid(c, projective_at(nak->algebra, x), 1));
  std::vector<Module> lambda;
  for (int x = 0; x < 3; ++x) lambda.push_back(projective_at(nak->algebra, x));
  CHECK(is_G_tau_n_rigid(c, lambda, 1));
  // tau S_1 = S_2, so S_1 is rigid; S_1 + S_2 is not
  Module s1 = Module::simple(nak->algebra, 0), s2 = Module::simple(nak->algebra, 1);
  CHECK(is_G_tau_n_rigid(c, s1, 1));
  CHECK_FALSE(is_G_tau_n_rigid(c, std::vector<Module>{s1, s2}, 1));

  // k[x]/x^2: tau S = S
  auto d = golden::dual_numbers();
  CHECK_FALSE(is_G_tau_n_rigid(Carrier::plain(d->algebra), Module::simple(d->algebra, 0), 1));

  // twist invariance upstairs
  auto cov = cover_of(nak, 6);
  Carrier up = Carrier::cover(cov);
  for (const auto& m : up.pool()) {
    bool r = is_G_tau_n_rigid(up, m, 1);
    CHECK(is_G_tau_n_rigid(up, twist(*cov, m, {1}), 1) == r);
    CHECK(is_G_tau_n_rigid(Carrier::plain(nak->algebra), push_down(*cov, m), 1) == r);
  }
}

TEST_CASE("rigid pairs") {
  auto nak = golden::nakayama();
  Carrier c = Carrier::plain(nak->algebra);
  TiltingPair t;
  t.ambient = everything(c);
  t.m = {Module::simple(nak->algebra, 0)};
  CHECK(is_rigid_pair(c, t, 1));
  // Hom(P_1, S_1) != 0, Hom(P_2, S_1) = 0
  t.p = {projective_at(nak->algebra, 0)};
  CHECK_FALSE(is_rigid_pair(c, t, 1));
  t.p = {projective_at(nak->algebra, 1)};
  CHECK(is_rigid_pair(c, t, 1));
  TiltingPair z;
  z.p = {projective_at(nak->algebra, 2)};
  CHECK(is_rigid_pair(c, z, 1));
}

TEST_CASE("support tilting pairs") {
  auto nak = golden::nakayama();
  Carrier c = Carrier::plain(nak->algebra);
  TiltingPair lam;
  lam.ambient = everything(c);
  for (int x = 0; x < 3; ++x) lam.m.push_back(projective_at(nak->algebra, x));
  CHECK(is_support_tilting_pair(c, lam, 1));
  TiltingPair zero;
  zero.ambient = lam.ambient;
  zero.p = lam.m;
  CHECK(is_support_tilting_pair(c, zero, 1));
  TiltingPair half = lam;
  half.m.pop_back();
  CHECK_FALSE(is_support_tilting_pair(c, half, 1));

  TiltingPair bad = lam;
  bad.ambient = make_subcategory(c, lam.m);
  CHECK_THROWS_AS(is_support_tilting_pair(c, bad, 1), AmbientNotClusterTilting);
}

TEST_CASE("enumeration of support tilting pairs") {
  Carrier ss = Carrier::plain(semisimple(2));
  auto pairs = enumerate_support_tilting_pairs(ss, everything(ss), 1);
  CHECK(pairs.size() == 4);
  for (const auto& t : pairs) CHECK(t.m.size() + t.p.size() == 2);
  CHECK(enumerate_support_tilting_pairs(ss, SubcategorySpec{}, 1).empty());

  // every support tau-tilting pair has |M| + |P| = number of simples, and
  // each enumerated pair passes the direct test
  for (auto p : {golden::nakayama(), golden::a3(), golden::dual_numbers()}) {
    Carrier c = Carrier::plain(p->algebra);
    auto all = enumerate_support_tilting_pairs(c, everything(c), 1);
    CHECK_FALSE(all.empty());
    for (const auto& t : all) {
      CHECK(t.m.size() + t.p.size() == static_cast<std::size_t>(p->num_vertices()));
      CHECK(is_support_tilting_pair(c, t, 1));
    }
  }
  // kA_3 has 14 support tau-tilting pairs (the Catalan number)
  Carrier a3 = Carrier::plain(golden::a3()->algebra);
  CHECK(enumerate_support_tilting_pairs(a3, everything(a3), 1).size() == 14);
  // k[x]/x^2: (P, 0) and (0, P)
  Carrier d = Carrier::plain(golden::dual_numbers()->algebra);
  CHECK(enumerate_support_tilting_pairs(d, everything(d), 1).size() == 2);
}

TEST_CASE("support tilting pairs across the covering") {
  auto nak = golden::nakayama();
  Carrier up = Carrier::cover(cover_of(nak, 6));
  SubcategorySpec amb = everything(up);
  VerificationReport e = verify_tilting_enumeration(up, amb, 1);
  CHECK(e.pass == Verdict::Pass);
  CHECK(e.witnesses.back()["upstairs_pairs"] == e.witnesses.back()["downstairs_pairs"]);

  TiltingPair lam;
  lam.ambient = amb;
  for (int x : up.fundamental_vertices()) lam.m.push_back(up.projective(x));
  VerificationReport r = verify_tilting_pushdown(up, lam, 1);
  CHECK(r.pass == Verdict::Pass);
  CHECK(r.witnesses[0]["upstairs"] == true);

  // seeded random pairs from the ambient pool
  std::mt19937 rng(7);
  auto pool = amb.generators;
  std::vector<Module> projs;
  for (int x : up.fundamental_vertices()) projs.push_back(up.projective(x));
  for (int trial = 0; trial < 12; ++trial) {
    TiltingPair t;
    t.ambient = amb;
    for (const auto& m : pool)
      if (rng() % 3 == 0) t.m.push_back(m);
    for (const auto& p : projs)
      if (rng() % 3 == 0) t.p.push_back(p);
    CHECK(verify_tilting_pushdown(up, t, 1).pass == Verdict::Pass);
  }
}

TEST_CASE("rigid counts per vertex agree across the covering") {
  for (auto p : {golden::nakayama(), golden::dual_numbers()}) {
    VerificationReport r = scan_tau_n_tilting_finite(Carrier::cover(cover_of(p, 6)), 1);
    CHECK(r.pass == Verdict::Pass);
  }
  VerificationReport d = scan_tau_n_tilting_finite(Carrier::cover(cover_of(golden::dual_numbers(), 6)), 1);
  CHECK(d.witnesses.back()["downstairs_rigid"] == 1);
  CHECK(d.witnesses.back()["per_vertex_upstairs_twists"][0] == 2);
  CHECK(scan_tau_n_tilting_finite(Carrier::plain(semisimple(2)), 1).passed());
}
