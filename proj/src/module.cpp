#include "delooping/module.hpp"

#include <numeric>
#include <sstream>

#include "delooping/error.hpp"

namespace dl {

namespace {

Mat path_product(const std::vector<Mat>& maps, const Path& p, int dim_src, Field f) {
  Mat m = Mat::identity(dim_src, f);
  for (int a : p) m = m * maps[a];
  return m;
}

Mat rows_into(const Module& m, int w) {
  const Quiver& q = m.algebra()->quiver();
  Mat r(0, m.dim(w), m.field());
  for (int a = 0; a < m.algebra()->num_arrows(); ++a)
    if (q.arrows[a].tgt == w) r = Mat::vstack(r, m.map(a));
  return r;
}

Mat cols_from(const Module& m, int v) {
  const Quiver& q = m.algebra()->quiver();
  Mat r(m.dim(v), 0, m.field());
  for (int a = 0; a < m.algebra()->num_arrows(); ++a)
    if (q.arrows[a].src == v) r = Mat::hstack(r, m.map(a));
  return r;
}

}  // namespace

Module::Module(AlgPtr alg, std::vector<int> dims, std::vector<Mat> maps) {
  auto impl = std::make_shared<Impl>();
  const Quiver& q = alg->quiver();
  const Field f = alg->field();
  if (static_cast<int>(dims.size()) != alg->num_vertices())
    throw Error(ErrorKind::ValidationError, "dimension vector has the wrong length");
  if (static_cast<int>(maps.size()) != alg->num_arrows())
    throw Error(ErrorKind::ValidationError, "wrong number of arrow matrices");
  for (int d : dims)
    if (d < 0) throw Error(ErrorKind::ValidationError, "negative dimension");
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (static_cast<int>(maps[a].rows()) != dims[ar.src] || static_cast<int>(maps[a].cols()) != dims[ar.tgt])
      throw Error(ErrorKind::ValidationError, "matrix of arrow " + ar.name + " has shape " +
                                                  std::to_string(maps[a].rows()) + "x" +
                                                  std::to_string(maps[a].cols()) + ", expected " +
                                                  std::to_string(dims[ar.src]) + "x" + std::to_string(dims[ar.tgt]));
  }
  for (const Relation& r : alg->relations()) {
    const Path& p0 = r.terms.front().path;
    const int s = q.arrows[p0.front()].src, t = q.arrows[p0.back()].tgt;
    Mat acc(dims[s], dims[t], f);
    for (const Term& term : r.terms) acc = acc + path_product(maps, term.path, dims[s], f).scaled(term.coef);
    if (!acc.is_zero()) {
      std::string txt;
      for (std::size_t i = 0; i < r.terms.size(); ++i) {
        if (i) txt += " + ";
        txt += r.terms[i].coef.str() + " " + alg->path_name(r.terms[i].path, s);
      }
      throw Error(ErrorKind::ValidationError, "relation " + txt + " does not hold");
    }
  }
  impl->alg = std::move(alg);
  impl->dims = std::move(dims);
  impl->maps = std::move(maps);
  impl->total = std::accumulate(impl->dims.begin(), impl->dims.end(), 0);
  impl_ = impl;
}

Module Module::zero(AlgPtr alg) {
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<Mat> maps(alg->num_arrows(), Mat(0, 0, alg->field()));
  return Module(std::move(alg), dims, maps);
}

void Module::ensure_actions() const {
  std::call_once(impl_->act_once, [this] {
    const auto& basis = impl_->alg->basis();
    const Field f = field();
    impl_->actions.resize(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      impl_->actions[b] = path_product(impl_->maps, basis[b].arrows, dim(basis[b].src), f);
  });
}

const Mat& Module::act(int b) const {
  ensure_actions();
  return impl_->actions[b];
}

Mat Module::act(const SVec& x, int v, int w) const {
  Mat m(dim(v), dim(w), field());
  for (const auto& [b, c] : x) m = m + act(b).scaled(c);
  return m;
}

void Module::ensure_cover() const {
  std::call_once(impl_->cover_once, [this] {
    const Field f = field();
    for (int w = 0; w < num_vertices(); ++w) {
      Rref rr = rref(rows_into(*this, w));
      std::vector<bool> piv(dim(w), false);
      for (auto p : rr.pivots) piv[p] = true;
      for (int c = 0; c < dim(w); ++c) {
        if (piv[c]) continue;
        Mat row(1, dim(w), f);
        row(0, c) = f.one();
        impl_->gen_vertices.push_back(w);
        impl_->gen_rows.push_back(row);
      }
    }
  });
}

const std::vector<int>& Module::gen_vertices() const {
  ensure_cover();
  return impl_->gen_vertices;
}

const std::vector<Mat>& Module::gen_rows() const {
  ensure_cover();
  return impl_->gen_rows;
}

bool Module::same_data(const Module& o) const {
  return impl_->alg == o.impl_->alg && impl_->dims == o.impl_->dims && impl_->maps == o.impl_->maps;
}

std::string Module::dim_vector() const {
  std::ostringstream os;
  os << '(';
  for (int v = 0; v < num_vertices(); ++v) os << (v ? "," : "") << dim(v);
  os << ')';
  return os.str();
}

ModuleHom::ModuleHom(Module src, Module tgt, std::vector<Mat> blocks)
    : src_(std::move(src)), tgt_(std::move(tgt)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != src_.num_vertices())
    throw Error(ErrorKind::ValidationError, "homomorphism has the wrong number of blocks");
  for (int v = 0; v < src_.num_vertices(); ++v)
    if (static_cast<int>(blocks_[v].rows()) != src_.dim(v) || static_cast<int>(blocks_[v].cols()) != tgt_.dim(v))
      throw Error(ErrorKind::ValidationError, "homomorphism block has the wrong shape");
}

ModuleHom ModuleHom::zero(const Module& src, const Module& tgt) {
  std::vector<Mat> b;
  for (int v = 0; v < src.num_vertices(); ++v) b.emplace_back(src.dim(v), tgt.dim(v), src.field());
  return ModuleHom(src, tgt, b);
}

ModuleHom ModuleHom::identity(const Module& m) {
  std::vector<Mat> b;
  for (int v = 0; v < m.num_vertices(); ++v) b.push_back(Mat::identity(m.dim(v), m.field()));
  return ModuleHom(m, m, b);
}

bool ModuleHom::intertwines() const {
  const Quiver& q = src_.algebra()->quiver();
  for (int a = 0; a < src_.algebra()->num_arrows(); ++a)
    if (blocks_[q.arrows[a].src] * tgt_.map(a) != src_.map(a) * blocks_[q.arrows[a].tgt]) return false;
  return true;
}

bool ModuleHom::is_zero() const {
  for (const Mat& m : blocks_)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleHom::is_injective() const {
  for (int v = 0; v < src_.num_vertices(); ++v)
    if (static_cast<int>(dl::rank(blocks_[v])) != src_.dim(v)) return false;
  return true;
}

bool ModuleHom::is_surjective() const {
  for (int v = 0; v < src_.num_vertices(); ++v)
    if (static_cast<int>(dl::rank(blocks_[v])) != tgt_.dim(v)) return false;
  return true;
}

bool ModuleHom::is_iso() const { return src_.dims() == tgt_.dims() && is_injective(); }

int ModuleHom::rank() const {
  int r = 0;
  for (const Mat& m : blocks_) r += static_cast<int>(dl::rank(m));
  return r;
}

ModuleHom ModuleHom::then(const ModuleHom& g) const {
  std::vector<Mat> b;
  for (int v = 0; v < src_.num_vertices(); ++v) b.push_back(blocks_[v] * g.blocks_[v]);
  return ModuleHom(src_, g.tgt_, b);
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const {
  std::vector<Mat> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] + o.blocks_[v]);
  return ModuleHom(src_, tgt_, b);
}

ModuleHom ModuleHom::operator-(const ModuleHom& o) const {
  std::vector<Mat> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] - o.blocks_[v]);
  return ModuleHom(src_, tgt_, b);
}

ModuleHom ModuleHom::scaled(const Scalar& s) const {
  std::vector<Mat> b;
  for (const Mat& m : blocks_) b.push_back(m.scaled(s));
  return ModuleHom(src_, tgt_, b);
}

std::vector<Scalar> ModuleHom::flatten() const {
  std::vector<Scalar> out;
  for (const Mat& m : blocks_)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Mat ProjSum::generator(int k) const {
  const int v = verts[k];
  Mat row(1, module.dim(v), module.field());
  row(0, offsets[k][v]) = module.field().one();
  return row;
}

SVec ProjSum::component(const Mat& row, int k, int w) const {
  const auto& ps = module.algebra()->paths(verts[k], w);
  SVec out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Scalar& c = row(0, offsets[k][w] + i);
    if (!c.is_zero()) out.emplace_back(ps[i], c);
  }
  return out;
}

Mat ProjSum::element(int w, const std::vector<SVec>& comps) const {
  const AlgPtr& A = module.algebra();
  Mat row(1, module.dim(w), module.field());
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (const auto& [b, c] : comps[k]) {
      if (A->basis()[b].src != verts[k] || A->basis()[b].tgt != w)
        throw Error(ErrorKind::ValidationError, "path does not lie in the projective summand");
      row(0, offsets[k][w] + A->position(b)) += c;
    }
  return row;
}

Module simple(const AlgPtr& a, int v) {
  std::vector<int> dims(a->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (const Arrow& ar : a->quiver().arrows) maps.emplace_back(dims[ar.src], dims[ar.tgt], a->field());
  return Module(a, dims, maps);
}

Module projective(const AlgPtr& a, int v) { return proj_sum(a, {v}).module; }

ProjSum proj_sum(const AlgPtr& a, const std::vector<int>& verts) {
  const int nv = a->num_vertices();
  const Field f = a->field();
  ProjSum p;
  p.verts = verts;
  std::vector<int> dims(nv, 0);
  for (int v : verts) {
    std::vector<int> off(nv);
    for (int w = 0; w < nv; ++w) {
      off[w] = dims[w];
      dims[w] += static_cast<int>(a->paths(v, w).size());
    }
    p.offsets.push_back(off);
  }
  std::vector<Mat> maps;
  for (int ai = 0; ai < a->num_arrows(); ++ai) {
    const Arrow& ar = a->quiver().arrows[ai];
    Mat m(dims[ar.src], dims[ar.tgt], f);
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto& from = a->paths(verts[k], ar.src);
      for (std::size_t i = 0; i < from.size(); ++i)
        for (const auto& [b, c] : a->rmul(from[i], ai))
          m(p.offsets[k][ar.src] + i, p.offsets[k][ar.tgt] + a->position(b)) = c;
    }
    maps.push_back(std::move(m));
  }
  p.module = Module(a, dims, maps);
  return p;
}

Module dual(const Module& m) {
  AlgPtr op = m.algebra()->opposite();
  std::vector<Mat> maps;
  for (const Mat& x : m.maps()) maps.push_back(x.transpose());
  return Module(op, m.dims(), maps);
}

ModuleHom dual(const ModuleHom& f) {
  std::vector<Mat> b;
  for (const Mat& x : f.blocks()) b.push_back(x.transpose());
  return ModuleHom(dual(f.tgt()), dual(f.src()), b);
}

Module injective(const AlgPtr& a, int v) { return dual(projective(a->opposite(), v)); }

ModuleHom hom_from_generators(const ProjSum& p, const Module& target, const std::vector<Mat>& images) {
  const AlgPtr& A = p.module.algebra();
  std::vector<Mat> blocks;
  for (int w = 0; w < A->num_vertices(); ++w) {
    Mat blk(p.module.dim(w), target.dim(w), target.field());
    for (std::size_t k = 0; k < p.verts.size(); ++k) {
      const auto& ps = A->paths(p.verts[k], w);
      for (std::size_t i = 0; i < ps.size(); ++i) blk.set_block(p.offsets[k][w] + i, 0, images[k] * target.act(ps[i]));
    }
    blocks.push_back(std::move(blk));
  }
  return ModuleHom(p.module, target, blocks);
}

Cover projective_cover(const Module& m) {
  ProjSum p = proj_sum(m.algebra(), m.gen_vertices());
  ModuleHom eps = hom_from_generators(p, m, m.gen_rows());
  return {std::move(p), std::move(eps)};
}

std::vector<ModuleHom> hom_space(const Module& m, const Module& n) {
  std::vector<ModuleHom> out;
  if (m.is_zero() || n.is_zero()) return out;
  const AlgPtr& A = m.algebra();
  const Field f = m.field();
  const int nv = A->num_vertices();
  Cover cov = projective_cover(m);
  const ProjSum& P = cov.proj;
  const int ng = static_cast<int>(P.verts.size());
  std::vector<int> uoff(ng + 1, 0);
  for (int k = 0; k < ng; ++k) uoff[k + 1] = uoff[k] + n.dim(P.verts[k]);
  const int U = uoff[ng];
  if (U == 0) return out;

  // Images must kill the generators of ker(eps).
  Sub K = kernel(cov.eps);
  std::vector<Mat> rel(nv);
  for (int w = 0; w < nv; ++w) rel[w] = Mat(0, P.module.dim(w), f);
  const auto& kv = K.module.gen_vertices();
  const auto& kr = K.module.gen_rows();
  for (std::size_t i = 0; i < kv.size(); ++i) rel[kv[i]] = Mat::vstack(rel[kv[i]], kr[i] * K.incl.block(kv[i]));
  Mat C(U, 0, f);
  for (int w = 0; w < nv; ++w) {
    if (n.dim(w) == 0) continue;
    const Mat& Z = rel[w];
    for (std::size_t z = 0; z < Z.rows(); ++z) {
      Mat col(U, n.dim(w), f);
      for (int k = 0; k < ng; ++k) {
        const auto& ps = A->paths(P.verts[k], w);
        Mat acc(n.dim(P.verts[k]), n.dim(w), f);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const Scalar& c = Z(z, P.offsets[k][w] + i);
          if (!c.is_zero()) acc = acc + n.act(ps[i]).scaled(c);
        }
        col.set_block(uoff[k], 0, acc);
      }
      C = Mat::hstack(C, col);
    }
  }
  Mat sol = C.cols() == 0 ? Mat::identity(U, f) : kernel_basis(C);

  std::vector<Mat> sections;
  for (int w = 0; w < nv; ++w) sections.push_back(*solve(cov.eps.block(w), Mat::identity(m.dim(w), f)));
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    std::vector<Mat> imgs;
    for (int k = 0; k < ng; ++k) imgs.push_back(sol.block(s, uoff[k], 1, n.dim(P.verts[k])));
    ModuleHom F = hom_from_generators(P, n, imgs);
    std::vector<Mat> blocks;
    for (int w = 0; w < nv; ++w) blocks.push_back(sections[w] * F.block(w));
    out.emplace_back(m, n, blocks);
  }
  return out;
}

int hom_dim(const Module& m, const Module& n) { return static_cast<int>(hom_space(m, n).size()); }

Sub submodule(const Module& m, const std::vector<Mat>& rows) {
  const AlgPtr& A = m.algebra();
  std::vector<Mat> basis;
  std::vector<int> dims;
  for (int v = 0; v < m.num_vertices(); ++v) {
    basis.push_back(row_basis(rows[v]));
    dims.push_back(static_cast<int>(basis.back().rows()));
  }
  std::vector<Mat> maps;
  for (int a = 0; a < A->num_arrows(); ++a) {
    const Arrow& ar = A->quiver().arrows[a];
    auto x = solve(basis[ar.tgt], basis[ar.src] * m.map(a));
    if (!x) throw Error(ErrorKind::ValidationError, "subspace is not closed under arrow " + ar.name);
    maps.push_back(std::move(*x));
  }
  Module sub(A, dims, maps);
  return {sub, ModuleHom(sub, m, basis)};
}

Quot quotient(const Module& m, const std::vector<Mat>& rows) {
  const AlgPtr& A = m.algebra();
  const Field f = m.field();
  std::vector<Mat> comp, proj;
  std::vector<int> dims;
  for (int v = 0; v < m.num_vertices(); ++v) {
    Rref rr = rref(rows[v]);
    Mat R = rr.reduced.block(0, 0, rr.rank, m.dim(v));
    std::vector<bool> piv(m.dim(v), false);
    for (auto p : rr.pivots) piv[p] = true;
    Mat Cm(0, m.dim(v), f);
    for (int c = 0; c < m.dim(v); ++c)
      if (!piv[c]) {
        Mat e(1, m.dim(v), f);
        e(0, c) = f.one();
        Cm = Mat::vstack(Cm, e);
      }
    Mat inv = *inverse(Mat::vstack(R, Cm));
    std::vector<std::size_t> last;
    for (std::size_t i = R.rows(); i < static_cast<std::size_t>(m.dim(v)); ++i) last.push_back(i);
    proj.push_back(inv.select_cols(last));
    dims.push_back(static_cast<int>(Cm.rows()));
    comp.push_back(std::move(Cm));
  }
  std::vector<Mat> maps;
  for (int a = 0; a < A->num_arrows(); ++a) {
    const Arrow& ar = A->quiver().arrows[a];
    maps.push_back(comp[ar.src] * m.map(a) * proj[ar.tgt]);
  }
  Module q(A, dims, maps);
  return {q, ModuleHom(m, q, proj)};
}

Sum direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw Error(ErrorKind::ValidationError, "empty direct sum");
  const AlgPtr& A = ms.front().algebra();
  const Field f = A->field();
  const int nv = A->num_vertices();
  std::vector<int> dims(nv, 0);
  std::vector<std::vector<int>> off;
  for (const Module& m : ms) {
    off.push_back(dims);
    for (int v = 0; v < nv; ++v) dims[v] += m.dim(v);
  }
  std::vector<Mat> maps;
  for (int a = 0; a < A->num_arrows(); ++a) {
    const Arrow& ar = A->quiver().arrows[a];
    Mat x(dims[ar.src], dims[ar.tgt], f);
    for (std::size_t i = 0; i < ms.size(); ++i) x.set_block(off[i][ar.src], off[i][ar.tgt], ms[i].map(a));
    maps.push_back(std::move(x));
  }
  Sum s{Module(A, dims, maps), {}, {}};
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::vector<Mat> in, pr;
    for (int v = 0; v < nv; ++v) {
      Mat x(ms[i].dim(v), dims[v], f);
      x.set_block(0, off[i][v], Mat::identity(ms[i].dim(v), f));
      pr.push_back(x.transpose());
      in.push_back(std::move(x));
    }
    s.incl.emplace_back(ms[i], s.module, in);
    s.proj.emplace_back(s.module, ms[i], pr);
  }
  return s;
}

Sum direct_sum(const Module& a, const Module& b) { return direct_sum(std::vector<Module>{a, b}); }

Sub kernel(const ModuleHom& f) {
  std::vector<Mat> rows;
  for (const Mat& b : f.blocks()) rows.push_back(kernel_basis(b));
  return submodule(f.src(), rows);
}

Sub image(const ModuleHom& f) { return submodule(f.tgt(), f.blocks()); }

Quot cokernel(const ModuleHom& f) { return quotient(f.tgt(), f.blocks()); }

std::vector<Mat> radical_rows(const Module& m) {
  std::vector<Mat> rows;
  for (int v = 0; v < m.num_vertices(); ++v) rows.push_back(row_basis(rows_into(m, v)));
  return rows;
}

Structure structure(const Module& m) {
  std::vector<Mat> rad = radical_rows(m);
  std::vector<Mat> soc;
  for (int v = 0; v < m.num_vertices(); ++v) soc.push_back(kernel_basis(cols_from(m, v)));
  return {submodule(m, rad), quotient(m, rad), submodule(m, soc)};
}

std::vector<int> top_dims(const Module& m) {
  std::vector<int> d(m.num_vertices(), 0);
  for (int v : m.gen_vertices()) ++d[v];
  return d;
}

std::vector<int> socle_dims(const Module& m) {
  std::vector<int> d;
  for (int v = 0; v < m.num_vertices(); ++v) d.push_back(m.dim(v) - static_cast<int>(rank(cols_from(m, v))));
  return d;
}

std::vector<std::vector<int>> radical_layers(const Module& m) {
  const AlgPtr& A = m.algebra();
  const int nv = m.num_vertices();
  std::vector<Mat> cur;
  for (int v = 0; v < nv; ++v) cur.push_back(Mat::identity(m.dim(v), m.field()));
  std::vector<std::vector<int>> layers;
  while (true) {
    int total = 0;
    for (const Mat& r : cur) total += static_cast<int>(r.rows());
    if (total == 0) break;
    std::vector<Mat> next;
    for (int w = 0; w < nv; ++w) {
      Mat acc(0, m.dim(w), m.field());
      for (int a = 0; a < A->num_arrows(); ++a) {
        const Arrow& ar = A->quiver().arrows[a];
        if (ar.tgt == w) acc = Mat::vstack(acc, cur[ar.src] * m.map(a));
      }
      next.push_back(row_basis(acc));
    }
    std::vector<int> layer;
    for (int v = 0; v < nv; ++v) layer.push_back(static_cast<int>(cur[v].rows() - next[v].rows()));
    layers.push_back(layer);
    cur = std::move(next);
  }
  return layers;
}

BaseChange change_basis(const Module& m, const std::vector<Mat>& t) {
  const AlgPtr& A = m.algebra();
  std::vector<Mat> inv;
  for (const Mat& x : t) {
    auto i = inverse(x);
    if (!i) throw Error(ErrorKind::ValidationError, "base change is not invertible");
    inv.push_back(*i);
  }
  std::vector<Mat> maps;
  for (int a = 0; a < A->num_arrows(); ++a) {
    const Arrow& ar = A->quiver().arrows[a];
    maps.push_back(t[ar.src] * m.map(a) * inv[ar.tgt]);
  }
  Module n(A, m.dims(), maps);
  return {n, ModuleHom(m, n, inv)};
}

}  // namespace dl
