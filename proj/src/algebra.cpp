#include "qcover/algebra.hpp"

#include <algorithm>

#include "qcover/errors.hpp"

namespace qcover {

std::optional<int> BoundQuiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> BoundQuiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

Path BoundQuiver::path_from_ids(const std::vector<std::string>& ids) const {
  if (ids.empty()) throw SchemaError("empty path in relation");
  Path p;
  for (const auto& id : ids) {
    auto a = arrow_index(id);
    if (!a) throw SchemaError("unknown arrow '" + id + "'");
    const Arrow& ar = arrows[*a];
    if (p.arrows.empty()) {
      p.src = ar.src;
    } else if (p.tgt != ar.src) {
      throw SchemaError("arrows do not compose at '" + id + "'");
    }
    p.tgt = ar.tgt;
    p.arrows.push_back(*a);
  }
  return p;
}

std::string BoundQuiver::format_path(const Path& p) const {
  if (p.arrows.empty()) return "e_" + vertices[p.src];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += arrows[p.arrows[i]].id;
  }
  return s;
}

namespace {

Path concat(const Path& a, const Path& b) {
  Path r{a.src, b.tgt, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

Path reversed(const Path& p) {
  Path r{p.tgt, p.src, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

bool longer_first(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows < b.arrows;
}

}  // namespace

Algebra::Ptr Algebra::build(BoundQuiver q, std::vector<bool> border_out, std::vector<bool> border_in) {
  const int n = static_cast<int>(q.vertices.size());
  if (q.nilbound < 0) throw SchemaError("negative nilbound");
  for (const auto& a : q.arrows)
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw SchemaError("arrow '" + a.id + "' has bad endpoint");
  for (const auto& rel : q.relations) {
    if (rel.empty()) throw SchemaError("empty relation");
    for (const auto& t : rel) {
      if (t.path.length() < 2)
        throw NotAdmissible("relation term '" + q.format_path(t.path) + "' is not in the square of the arrow ideal");
      if (t.path.src != rel.front().path.src || t.path.tgt != rel.front().path.tgt)
        throw InhomogeneousRelation("relation terms are not parallel paths");
    }
  }
  if (!border_out.empty() && static_cast<int>(border_out.size()) != n) throw DimensionMismatch("border flag count");
  if (!border_in.empty() && static_cast<int>(border_in.size()) != n) throw DimensionMismatch("border flag count");

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->q_ = std::move(q);
  alg->border_out_ = std::move(border_out);
  alg->border_in_ = std::move(border_in);
  alg->out_.assign(n, {});
  alg->in_.assign(n, {});
  for (std::size_t i = 0; i < alg->q_.arrows.size(); ++i) {
    alg->out_[alg->q_.arrows[i].src].push_back(static_cast<int>(i));
    alg->in_[alg->q_.arrows[i].tgt].push_back(static_cast<int>(i));
  }
  alg->compute_spaces();
  return alg;
}

void Algebra::compute_spaces() {
  const int n = num_vertices();
  const std::size_t L = static_cast<std::size_t>(q_.nilbound) + 1;
  const Field& f = q_.field;

  // every path of length <= L from each vertex
  std::vector<std::vector<Path>> from(n);
  for (int v = 0; v < n; ++v) {
    std::vector<Path> layer{Path{v, v, {}}};
    from[v] = layer;
    for (std::size_t len = 1; len <= L; ++len) {
      std::vector<Path> next;
      for (const auto& p : layer)
        for (int a : out_[p.tgt]) {
          Path r = p;
          r.arrows.push_back(a);
          r.tgt = q_.arrows[a].tgt;
          next.push_back(std::move(r));
        }
      from[v].insert(from[v].end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }

  spaces_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    std::map<int, std::vector<Path>> by_target;
    for (const auto& p : from[x]) by_target[p.tgt].push_back(p);
    for (auto& [y, paths] : by_target) {
      std::sort(paths.begin(), paths.end(), longer_first);
      PathSpace& sp = spaces_[x][y];
      sp.paths = paths;
      for (std::size_t i = 0; i < paths.size(); ++i) sp.index[paths[i].arrows] = i;
    }

    // generators p * rho * q of the ideal, truncated above length L
    std::map<int, std::vector<std::vector<std::pair<std::size_t, Scalar>>>> gens;
    for (const auto& rel : q_.relations) {
      std::size_t minlen = rel.front().path.length();
      for (const auto& t : rel) minlen = std::min(minlen, t.path.length());
      const int s = rel.front().path.src, t = rel.front().path.tgt;
      for (const auto& p : from[x]) {
        if (p.tgt != s || p.length() + minlen > L) continue;
        for (const auto& qq : from[t]) {
          if (p.length() + minlen + qq.length() > L) continue;
          const int y = qq.tgt;
          std::vector<std::pair<std::size_t, Scalar>> g;
          for (const auto& term : rel) {
            Path full = concat(concat(p, term.path), qq);
            if (full.length() > L) continue;
            g.emplace_back(spaces_[x][y].index.at(full.arrows), term.coeff);
          }
          if (!g.empty()) gens[y].push_back(std::move(g));
        }
      }
    }

    for (auto& [y, sp] : spaces_[x]) {
      const std::size_t np = sp.paths.size();
      auto git = gens.find(y);
      std::size_t ng = git == gens.end() ? 0 : git->second.size();
      Mat g(f, ng, np);
      for (std::size_t r = 0; r < ng; ++r)
        for (const auto& [c, v] : git->second[r]) g(r, c) = f.add(g(r, c), v);
      RrefResult rr = rref(g);
      std::vector<bool> is_pivot(np, false);
      std::vector<std::size_t> pivot_row(np, 0);
      for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        is_pivot[rr.pivots[r]] = true;
        pivot_row[rr.pivots[r]] = r;
      }
      std::vector<std::size_t> basis_pos(np, 0);
      for (std::size_t c = 0; c < np; ++c)
        if (!is_pivot[c]) {
          basis_pos[c] = sp.basis.size();
          sp.basis.push_back(c);
        }
      sp.reduce = Mat(f, np, sp.basis.size());
      for (std::size_t c = 0; c < np; ++c) {
        if (!is_pivot[c]) {
          sp.reduce(c, basis_pos[c]) = f.one();
          continue;
        }
        for (std::size_t b = 0; b < sp.basis.size(); ++b) {
          const Scalar& v = rr.matrix(pivot_row[c], sp.basis[b]);
          if (!v.is_zero()) sp.reduce(c, b) = f.neg(v);
        }
      }
      for (std::size_t c = 0; c < np; ++c)
        if (sp.paths[c].length() == L && !sp.reduce.row(c).is_zero())
          throw NotLocallyBounded("path " + q_.format_path(sp.paths[c]) + " of length " + std::to_string(L) +
                                  " survives modulo the relations; nilbound too small or relations missing");
    }
    // drop pairs whose path space is zero
    for (auto it = spaces_[x].begin(); it != spaces_[x].end();) {
      if (it->second.basis.empty())
        it = spaces_[x].erase(it);
      else
        ++it;
    }
  }
}

const Algebra::PathSpace& Algebra::space(int x, int y) const {
  static const PathSpace empty{};
  auto it = spaces_[x].find(y);
  return it == spaces_[x].end() ? empty : it->second;
}

std::vector<Path> Algebra::basis(int x, int y) const {
  const PathSpace& sp = space(x, y);
  std::vector<Path> out;
  for (auto i : sp.basis) out.push_back(sp.paths[i]);
  return out;
}

Mat Algebra::coords(const Path& p) const {
  const PathSpace& sp = space(p.src, p.tgt);
  Mat r(field(), 1, sp.basis.size());
  if (sp.basis.empty()) return r;
  auto it = sp.index.find(p.arrows);
  if (it == sp.index.end()) return r;  // longer than the nilbound
  return sp.reduce.row(it->second);
}

Mat Algebra::right_mult(int x, int a) const {
  const Arrow& ar = q_.arrows[a];
  auto src_basis = basis(x, ar.src);
  Mat m(field(), src_basis.size(), dim(x, ar.tgt));
  Path step{ar.src, ar.tgt, {a}};
  for (std::size_t i = 0; i < src_basis.size(); ++i) m.set_block(i, 0, coords(concat(src_basis[i], step)));
  return m;
}

Mat Algebra::left_mult(int a, int y) const {
  const Arrow& ar = q_.arrows[a];
  auto tgt_basis = basis(ar.tgt, y);
  Mat m(field(), tgt_basis.size(), dim(ar.src, y));
  Path step{ar.src, ar.tgt, {a}};
  for (std::size_t i = 0; i < tgt_basis.size(); ++i) m.set_block(i, 0, coords(concat(step, tgt_basis[i])));
  return m;
}

Mat Algebra::right_mult_element(int x, int y, int z, const Mat& u) const {
  auto bx = basis(x, y), by = basis(y, z);
  if (u.rows() != 1 || u.cols() != by.size()) throw DimensionMismatch("element has wrong coordinate count");
  Mat m(field(), bx.size(), dim(x, z));
  const Field& f = field();
  for (std::size_t j = 0; j < by.size(); ++j) {
    if (u(0, j).is_zero()) continue;
    for (std::size_t i = 0; i < bx.size(); ++i) {
      Mat c = coords(concat(bx[i], by[j]));
      for (std::size_t k = 0; k < c.cols(); ++k) m(i, k) = f.add(m(i, k), f.mul(u(0, j), c(0, k)));
    }
  }
  return m;
}

Mat Algebra::multiply(int x, int y, int z, const Mat& u, const Mat& w) const {
  return u * right_mult_element(x, y, z, w);
}

Algebra::Ptr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mu_);
  if (op_strong_) return op_strong_;
  if (auto p = op_weak_.lock()) return p;
  BoundQuiver q;
  q.field = q_.field;
  q.vertices = q_.vertices;
  q.nilbound = q_.nilbound;
  for (const auto& a : q_.arrows) q.arrows.push_back({a.id, a.tgt, a.src});
  for (const auto& rel : q_.relations) {
    Relation r;
    for (const auto& t : rel) r.push_back({t.coeff, reversed(t.path)});
    q.relations.push_back(std::move(r));
  }
  auto op = std::const_pointer_cast<Algebra>(build(std::move(q), border_in_, border_out_));
  op->op_weak_ = weak_from_this();
  op_strong_ = op;
  return op;
}

Mat Algebra::to_opposite(int x, int y, const Mat& u) const {
  auto op = opposite();
  auto b = basis(x, y);
  Mat r(field(), 1, op->dim(y, x));
  const Field& f = field();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (u(0, i).is_zero()) continue;
    Mat c = op->coords(reversed(b[i]));
    for (std::size_t k = 0; k < c.cols(); ++k) r(0, k) = f.add(r(0, k), f.mul(u(0, i), c(0, k)));
  }
  return r;
}

bool Algebra::has_border() const {
  return std::find(border_out_.begin(), border_out_.end(), true) != border_out_.end() ||
         std::find(border_in_.begin(), border_in_.end(), true) != border_in_.end();
}

Algebra::Ptr Algebra::plain() const {
  if (!has_border()) return shared_from_this();
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->q_ = q_;
  alg->out_ = out_;
  alg->in_ = in_;
  alg->spaces_ = spaces_;
  return alg;
}

bool Algebra::same_presentation(const Algebra& o) const {
  if (this == &o) return true;
  if (!(q_.field == o.q_.field) || q_.vertices != o.q_.vertices || q_.nilbound != o.q_.nilbound) return false;
  if (q_.arrows.size() != o.q_.arrows.size() || q_.relations.size() != o.q_.relations.size()) return false;
  for (std::size_t i = 0; i < q_.arrows.size(); ++i) {
    const auto &a = q_.arrows[i], &b = o.q_.arrows[i];
    if (a.id != b.id || a.src != b.src || a.tgt != b.tgt) return false;
  }
  for (std::size_t i = 0; i < q_.relations.size(); ++i) {
    const auto &a = q_.relations[i], &b = o.q_.relations[i];
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[j].coeff == b[j].coeff) || a[j].path != b[j].path) return false;
  }
  return true;
}

std::size_t Algebra::total_dim() const {
  std::size_t d = 0;
  for (const auto& row : spaces_)
    for (const auto& [y, sp] : row) d += sp.basis.size();
  return d;
}

}  // namespace qcover
