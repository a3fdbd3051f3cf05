#include "qcover/endo.hpp"

#include <map>
#include <stdexcept>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/homological.hpp"

namespace qcover {

namespace {

std::size_t flat_width(const Module& a, const Module& b) {
  std::size_t w = 0;
  for (std::size_t v = 0; v < a.dims().size(); ++v) w += a.dims()[v] * b.dims()[v];
  return w;
}

Mat flat_rows(const std::vector<Morphism>& fs, const Field& k, std::size_t width) {
  Mat out(k, 0, width);
  for (const auto& f : fs) out = vstack(out, f.flatten());
  return out;
}

bool in_span(const Mat& span, const Mat& row) {
  if (span.rows() == 0) return row.is_zero();
  return row_space_contains(span, row);
}

struct Walk {
  Path path;
  Morphism value;  // Hom(U_tgt, U_src)
};

}  // namespace

EndoCategory endo_category(const std::vector<Module>& objects, std::vector<bool> border_out,
                           std::vector<bool> border_in) {
  if (objects.empty()) throw std::invalid_argument("endo_category: no objects");
  EndoCategory e;
  e.objects = objects;
  const std::size_t m = objects.size();
  const Field k = objects[0].field();

  e.hom.assign(m, std::vector<std::vector<Morphism>>(m));
  std::vector<std::vector<std::vector<Morphism>>> rad(m, std::vector<std::vector<Morphism>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      e.hom[i][j] = hom_basis(objects[i], objects[j]);
      rad[i][j] = i == j ? radical_endomorphisms(objects[i]) : e.hom[i][j];
    }

  BoundQuiver q;
  q.field = k;
  for (std::size_t i = 0; i < m; ++i) q.vertices.push_back("U" + std::to_string(i + 1));

  // irreducible maps: a basis of rad modulo rad^2
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t w = flat_width(objects[i], objects[j]);
      std::vector<Morphism> sq;
      for (std::size_t l = 0; l < m; ++l)
        for (const auto& g : rad[i][l])
          for (const auto& h : rad[l][j]) sq.push_back(compose(g, h));
      Mat span = flat_rows(sq, k, w);
      if (span.rows() > 0) span = row_space_basis(span);
      for (const auto& f : rad[i][j]) {
        Mat row = f.flatten();
        if (in_span(span, row)) continue;
        span = vstack(span, row);
        q.arrows.push_back({"f" + std::to_string(q.arrows.size() + 1), static_cast<int>(j), static_cast<int>(i)});
        e.arrow_maps.push_back(f);
      }
    }

  // evaluate paths until every extension vanishes; the relations are the
  // kernel of evaluation on paths of length >= 2
  std::vector<std::vector<int>> out(m);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out[q.arrows[a].src].push_back(static_cast<int>(a));
  std::vector<Walk> layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    layer.push_back({{q.arrows[a].src, q.arrows[a].tgt, {static_cast<int>(a)}}, e.arrow_maps[a]});
  std::map<std::pair<int, int>, std::vector<Walk>> longer;
  int nil = layer.empty() ? 0 : 1;
  for (int len = 2; !layer.empty(); ++len) {
    std::vector<Walk> next;
    for (const auto& w : layer) {
      if (w.value.is_zero()) continue;
      for (int a : out[w.path.tgt]) {
        Walk x{w.path, compose(e.arrow_maps[a], w.value)};
        x.path.tgt = q.arrows[a].tgt;
        x.path.arrows.push_back(a);
        longer[{x.path.src, x.path.tgt}].push_back(x);
        if (!x.value.is_zero()) nil = len;
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  q.nilbound = nil;

  for (const auto& [st, walks] : longer) {
    const std::size_t w = flat_width(objects[st.second], objects[st.first]);
    std::vector<Morphism> vals;
    for (const auto& x : walks) vals.push_back(x.value);
    Mat ker = left_kernel_basis(flat_rows(vals, k, w));
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Relation rel;
      for (std::size_t c = 0; c < ker.cols(); ++c)
        if (!ker(r, c).is_zero()) rel.push_back({ker(r, c), walks[c].path});
      q.relations.push_back(std::move(rel));
    }
  }

  e.algebra = Algebra::build(std::move(q), std::move(border_out), std::move(border_in));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (e.algebra->dim(static_cast<int>(a), static_cast<int>(b)) != e.hom[b][a].size())
        throw std::logic_error("endo_category: path spaces disagree with Hom");
  return e;
}

Module phi(const EndoCategory& e, const Module& x) {
  const Field k = e.algebra->field();
  std::vector<std::vector<Morphism>> basis;
  std::vector<Mat> flat;
  std::vector<std::size_t> dims;
  for (const auto& u : e.objects) {
    basis.push_back(hom_basis(u, x));
    flat.push_back(flat_rows(basis.back(), k, flat_width(u, x)));
    dims.push_back(basis.back().size());
  }
  std::vector<Mat> maps;
  for (int a = 0; a < static_cast<int>(e.arrow_maps.size()); ++a) {
    const Arrow& ar = e.algebra->arrow(a);
    Mat m(k, dims[ar.src], dims[ar.tgt]);
    for (std::size_t r = 0; r < dims[ar.src]; ++r) {
      auto c = solve_left(flat[ar.tgt], compose(e.arrow_maps[a], basis[ar.src][r]).flatten());
      if (!c) throw std::logic_error("phi: composite outside Hom basis");
      m.set_block(r, 0, *c);
    }
    maps.push_back(std::move(m));
  }
  Module out(e.algebra, dims, maps);
  out.validate();
  return out;
}

bool satisfies_nmag(const Algebra::Ptr& alg, int n, const std::vector<int>& vertices, bool strict) {
  const auto bound = static_cast<std::size_t>(n + 1);
  if (dominant_dimension_upto(alg, bound, vertices, strict).value < bound) return false;
  std::vector<int> vs = vertices;
  if (vs.empty())
    for (int x = 0; x < alg->num_vertices(); ++x) vs.push_back(x);
  for (int x : vs)
    if (inj_dim_upto(projective_at(alg, x, strict), bound, strict).at_least) return false;
  return true;
}

bool is_gorenstein_projective(const EndoCategory& e, const Module& m, int n) {
  if (!satisfies_nmag(e.algebra, n))
    throw HypothesisUnverified("endomorphism category is not " + std::to_string(n) +
                               "-minimal Auslander-Gorenstein");
  for (int x = 0; x < e.size(); ++x) {
    Module p = projective_at(e.algebra, x);
    for (int i = 1; i <= n + 1; ++i)
      if (ext_dim(m, p, i) != 0) return false;
  }
  return true;
}

}  // namespace qcover
