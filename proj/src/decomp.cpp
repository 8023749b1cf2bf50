#include "delooping/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "delooping/config.hpp"
#include "delooping/error.hpp"
#include "poly.hpp"

namespace dl {

namespace {

Mat flat_row(const ModuleHom& f) {
  auto v = f.flatten();
  Mat r(1, v.size(), f.src().field());
  for (std::size_t i = 0; i < v.size(); ++i) r(0, i) = v[i];
  return r;
}

void check_characteristic(const Module& m, int dim_end) {
  const Field f = m.field();
  if (f.is_rational()) return;
  const long p = f.characteristic();
  if (p <= std::max<long>(dim_end, m.total_dim()))
    throw Error(ErrorKind::CharTooSmall, "GF(" + std::to_string(p) + ") is too small for a module of dimension " +
                                             std::to_string(m.total_dim()) + " with " + std::to_string(dim_end) +
                                             "-dimensional endomorphism ring; use Q or a larger prime");
}

// trace(f then g) without forming the composite.
Scalar trace_product(const ModuleHom& f, const ModuleHom& g) {
  Scalar t = f.src().field().zero();
  for (std::size_t v = 0; v < f.blocks().size(); ++v) {
    const Mat& a = f.block(static_cast<int>(v));
    const Mat& b = g.block(static_cast<int>(v));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Scalar& x = a(i, j);
        if (x.is_zero()) continue;
        const Scalar& y = b(j, i);
        if (!y.is_zero()) t.submul(-x, y);
      }
  }
  return t;
}

bool is_local(const Module& m) {
  auto t = top_dims(m);
  auto s = socle_dims(m);
  return std::accumulate(t.begin(), t.end(), 0) == 1 || std::accumulate(s.begin(), s.end(), 0) == 1;
}

ModuleHom evaluate(const poly::Poly& p, const ModuleHom& x) {
  ModuleHom id = ModuleHom::identity(x.src());
  ModuleHom r = ModuleHom::zero(x.src(), x.src());
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r.then(x) + id.scaled(*it);
  return r;
}

// Minimal polynomial of x modulo the radical of the endomorphism ring.
poly::Poly residue_minpoly(const EndRing& E, const ModuleHom& x) {
  const Field f = E.module.field();
  Mat span = E.radical;
  std::vector<Mat> pows;
  ModuleHom cur = ModuleHom::identity(E.module);
  for (int k = 0; k <= E.dim() + 1; ++k) {
    Mat c = E.coords(cur);
    Mat basis = span;
    for (const auto& p : pows) basis = Mat::vstack(basis, p);
    if (auto sol = solve(basis, c)) {
      poly::Poly mu(k + 1, f.zero());
      mu[k] = f.one();
      const std::size_t off = span.rows();
      for (int i = 0; i < k; ++i) mu[i] = -(*sol)(0, off + i);
      return mu;
    }
    pows.push_back(c);
    cur = cur.then(x);
  }
  throw Error(ErrorKind::NoSplitFound, "minimal polynomial computation did not terminate");
}

std::optional<ModuleHom> find_idempotent(const EndRing& E, std::mt19937_64& rng) {
  const Field f = E.module.field();
  const int d = E.dim();
  std::uniform_int_distribution<int> coin(-1, 1);
  const int budget = config().idempotent_budget;
  for (int t = 0; t < budget; ++t) {
    ModuleHom x;
    if (t < d) {
      x = E.basis[t];
    } else {
      x = ModuleHom::zero(E.module, E.module);
      for (int i = 0; i < d; ++i) {
        int c = coin(rng);
        if (c) x = x + E.basis[i].scaled(f(static_cast<long>(c)));
      }
    }
    poly::Poly mu = residue_minpoly(E, x);
    if (poly::degree(mu) < 2) continue;
    auto split = poly::coprime_split(mu, f, rng);
    if (!split) continue;
    auto eg = poly::ext_gcd(split->first, split->second);
    ModuleHom e = evaluate(poly::mul(eg.s, split->first), x);
    for (int it = 0; it < 64; ++it) {
      ModuleHom e2 = e.then(e);
      if (e2.blocks() == e.blocks()) break;
      e = e2.scaled(f(3)) - e2.then(e).scaled(f(2));
    }
    if (e.then(e).blocks() != e.blocks()) continue;
    const int r = e.rank();
    if (r > 0 && r < E.module.total_dim()) return e;
  }
  return std::nullopt;
}

Piece restrict_to_image(const ModuleHom& e) {
  Sub s = image(e);
  std::vector<Mat> pb;
  for (int v = 0; v < e.src().num_vertices(); ++v) pb.push_back(coordinates(s.incl.block(v), e.block(v)));
  return {s.module, s.incl, ModuleHom(e.src(), s.module, pb)};
}

void split_into(const Module& m, const ModuleHom& incl, const ModuleHom& proj, std::vector<Piece>& out,
                std::mt19937_64& rng) {
  if (m.is_zero()) return;
  if (is_local(m)) {
    out.push_back({m, incl, proj});
    return;
  }
  EndRing E = end_ring(m);
  if (E.dim() == 1 || E.residue_dim() == 1) {
    out.push_back({m, incl, proj});
    return;
  }
  auto e = find_idempotent(E, rng);
  if (!e)
    throw Error(ErrorKind::NoSplitFound, "no idempotent found in " + std::to_string(config().idempotent_budget) +
                                             " trials for a module of dimension vector " + m.dim_vector());
  ModuleHom one_minus = ModuleHom::identity(m) - *e;
  for (const ModuleHom& idem : {*e, one_minus}) {
    Piece p = restrict_to_image(idem);
    split_into(p.module, p.incl.then(incl), proj.then(p.proj), out, rng);
  }
}

int residue_dim(const Module& x) {
  if (is_local(x)) return 1;
  return end_ring(x).residue_dim();
}

int multiplicity_with(const Module& x, int s, const Module& y) {
  if (x.is_zero()) return 0;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.dim(v) > y.dim(v)) return 0;
  check_characteristic(x, 0);
  auto F = hom_space(x, y);
  if (F.empty()) return 0;
  auto G = hom_space(y, x);
  if (G.empty()) return 0;
  Mat T(F.size(), G.size(), x.field());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) T(i, j) = trace_product(F[i], G[j]);
  return static_cast<int>(rank(T)) / s;
}

}  // namespace

Scalar trace(const ModuleHom& f) {
  Scalar t = f.src().field().zero();
  for (const Mat& b : f.blocks()) t += b.trace();
  return t;
}

Mat EndRing::coords(const ModuleHom& f) const {
  auto x = solve(flat, flat_row(f));
  if (!x) throw Error(ErrorKind::ValidationError, "map is not an endomorphism of the module");
  return *x;
}

ModuleHom EndRing::element(const Mat& c) const {
  ModuleHom r = ModuleHom::zero(module, module);
  for (int i = 0; i < dim(); ++i)
    if (!c(0, i).is_zero()) r = r + basis[i].scaled(c(0, i));
  return r;
}

EndRing end_ring(const Module& m) {
  EndRing E;
  E.module = m;
  E.basis = hom_space(m, m);
  const int d = E.dim();
  check_characteristic(m, d);
  const Field f = m.field();
  std::size_t width = 0;
  for (int v = 0; v < m.num_vertices(); ++v) width += static_cast<std::size_t>(m.dim(v)) * m.dim(v);
  E.flat = Mat(0, width, f);
  for (const auto& b : E.basis) E.flat = Mat::vstack(E.flat, flat_row(b));
  Mat gram(d, d, f);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) gram(i, j) = gram(j, i) = trace_product(E.basis[i], E.basis[j]);
  E.radical = kernel_basis(gram);
  return E;
}

Decomposition decompose(const Module& m) {
  Decomposition D;
  std::mt19937_64 rng(config().seed);
  split_into(m, ModuleHom::identity(m), ModuleHom::identity(m), D.pieces, rng);
  std::vector<int> s_of_group;
  for (int i = 0; i < D.total_pieces(); ++i) {
    const Module& x = D.pieces[i].module;
    bool placed = false;
    for (std::size_t g = 0; g < D.groups.size() && !placed; ++g) {
      const Module& rep = D.groups[g].rep;
      if (rep.dims() != x.dims()) continue;
      if (multiplicity_with(rep, s_of_group[g], x) >= 1) {
        D.groups[g].multiplicity++;
        D.groups[g].pieces.push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      D.groups.push_back({x, 1, {i}});
      s_of_group.push_back(residue_dim(x));
    }
  }
  return D;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  if (is_local(m)) return true;
  EndRing E = end_ring(m);
  if (E.dim() == 1 || E.residue_dim() == 1) return true;
  return decompose(m).total_pieces() == 1;
}

int multiplicity(const Module& x, const Module& y) { return multiplicity_with(x, residue_dim(x), y); }

IsoResult isomorphism(const Module& m, const Module& n) {
  IsoResult res;
  if (m.algebra() != n.algebra() || m.dims() != n.dims()) return res;
  if (m.is_zero()) {
    res.iso = true;
    return res;
  }
  if (top_dims(m) != top_dims(n) || socle_dims(m) != socle_dims(n) || radical_layers(m) != radical_layers(n))
    return res;
  auto H = hom_space(m, n);
  if (H.empty()) return res;
  for (const auto& h : H)
    if (h.is_iso()) {
      res.iso = true;
      res.witness = h;
      return res;
    }
  std::mt19937_64 rng(config().seed ^ 0x9e3779b97f4a7c15ULL);
  const Field f = m.field();
  long range = 1;
  for (int t = 0; t < config().iso_trials; ++t) {
    if (t > 0 && t % 8 == 0) range *= 2;
    std::uniform_int_distribution<long> dist(-range, range);
    ModuleHom h = ModuleHom::zero(m, n);
    for (const auto& b : H) {
      long c = dist(rng);
      if (c) h = h + b.scaled(f(c));
    }
    if (h.is_iso()) {
      res.iso = true;
      res.witness = h;
      return res;
    }
  }
  // Exact fallback through Krull-Schmidt multiplicities.
  try {
    Decomposition D = decompose(m);
    for (const auto& g : D.groups)
      if (multiplicity(g.rep, n) != g.multiplicity) return res;
    res.iso = true;
    return res;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSplitFound) throw;
    res.exact = false;
    monte_carlo_negatives()++;
    return res;
  }
}

bool is_isomorphic(const Module& m, const Module& n) { return isomorphism(m, n).iso; }

bool is_summand(const Module& x, const Module& y) {
  if (x.is_zero()) return true;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.dim(v) > y.dim(v)) return false;
  Decomposition D = decompose(x);
  for (const auto& g : D.groups)
    if (multiplicity(g.rep, y) < g.multiplicity) return false;
  return true;
}

bool is_projective(const Module& m) {
  int total = 0;
  for (int v : m.gen_vertices()) total += m.algebra()->paths_from_count(v);
  return total == m.total_dim();
}

Stripped strip_projectives(const Module& m) {
  const AlgPtr& A = m.algebra();
  const Field f = m.field();
  Stripped out{m, ModuleHom::identity(m), ModuleHom::identity(m), std::vector<int>(m.num_vertices(), 0)};
  std::vector<int> tops = top_dims(m);
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (tops[v] == 0) continue;
    const Module& K = out.core;
    if (K.dim(v) == 0) continue;
    Module Pv = projective(A, v);
    auto G = hom_space(K, Pv);
    if (G.empty()) continue;
    Mat T(K.dim(v), G.size(), f);
    for (std::size_t j = 0; j < G.size(); ++j)
      for (int i = 0; i < K.dim(v); ++i) T(i, j) = G[j].block(v)(i, 0);
    std::vector<std::size_t> rows = rref(T.transpose()).pivots;
    std::vector<std::size_t> cols = rref(T).pivots;
    const int r = static_cast<int>(rows.size());
    if (r == 0) continue;
    ProjSum P = proj_sum(A, std::vector<int>(r, v));
    std::vector<Mat> imgs;
    for (int k = 0; k < r; ++k) {
      Mat row(1, K.dim(v), f);
      row(0, rows[k]) = f.one();
      imgs.push_back(row);
    }
    ModuleHom F = hom_from_generators(P, K, imgs);
    std::vector<Mat> gb;
    for (int w = 0; w < K.num_vertices(); ++w) {
      Mat b(K.dim(w), 0, f);
      for (int k = 0; k < r; ++k) b = Mat::hstack(b, G[cols[k]].block(w));
      gb.push_back(b);
    }
    ModuleHom Gm(K, P.module, gb);
    ModuleHom FG = F.then(Gm);
    std::vector<Mat> inv;
    for (const Mat& b : FG.blocks()) inv.push_back(*inverse(b));
    ModuleHom FGinv(P.module, P.module, inv);
    ModuleHom pi = ModuleHom::identity(K) - Gm.then(FGinv).then(F);
    Sub ker = kernel(Gm);
    std::vector<Mat> pb;
    for (int w = 0; w < K.num_vertices(); ++w) pb.push_back(coordinates(ker.incl.block(w), pi.block(w)));
    ModuleHom to_ker(K, ker.module, pb);
    out.incl = ker.incl.then(out.incl);
    out.proj = out.proj.then(to_ker);
    out.core = ker.module;
    out.projective_multiplicity[v] = r;
  }
  return out;
}

std::vector<std::pair<Module, int>> nonprojective_summands(const Module& m) {
  std::vector<std::pair<Module, int>> out;
  Stripped s = strip_projectives(m);
  if (s.core.is_zero()) return out;
  Decomposition D = decompose(s.core);
  for (const auto& g : D.groups) out.emplace_back(g.rep, g.multiplicity);
  return out;
}

}  // namespace dl
