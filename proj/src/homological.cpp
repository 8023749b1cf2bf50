#include "delooping/homological.hpp"

#include "delooping/error.hpp"

namespace dl {

Resolution resolve(const Module& m, int len) {
  Resolution R;
  R.target = m;
  Cover cov = projective_cover(m);
  R.P.push_back(cov.proj);
  R.eps = cov.eps;
  R.kernels.push_back(kernel(cov.eps));
  for (int i = 1; i <= len; ++i) {
    const Sub& K = R.kernels.back();
    Cover c = projective_cover(K.module);
    std::vector<Mat> imgs;
    const auto& gv = K.module.gen_vertices();
    const auto& gr = K.module.gen_rows();
    for (std::size_t j = 0; j < gv.size(); ++j) imgs.push_back(gr[j] * K.incl.block(gv[j]));
    R.d.push_back(imgs);
    R.P.push_back(c.proj);
    R.kernels.push_back(kernel(c.eps));
  }
  return R;
}

ProjectivePresentation presentation(const Module& m) {
  Resolution R = resolve(m, 1);
  ProjectivePresentation p{R.P[1], R.P[0], {}, R.eps};
  p.d1 = hom_from_generators(R.P[1], R.P[0].module, R.d[0]);
  return p;
}

Sub raw_syzygy(const Module& m) { return kernel(projective_cover(m).eps); }

Module syzygy(const Module& m, int n) {
  Module x = m;
  for (int i = 0; i < n && !x.is_zero(); ++i) x = raw_syzygy(x).module;
  return strip_projectives(x).core;
}

Module cosyzygy(const Module& m, int n) { return dual(syzygy(dual(m), n)); }

std::optional<int> proj_dim(const Module& m, int cap) {
  Module x = m;
  for (int n = 0; n <= cap; ++n) {
    if (is_projective(x)) return n;
    x = raw_syzygy(x).module;
  }
  return std::nullopt;
}

std::optional<int> inj_dim(const Module& m, int cap) { return proj_dim(dual(m), cap); }

int ext_dim(const Module& m, const Module& x, int n) {
  if (n == 0) return hom_dim(m, x);
  Resolution R = resolve(m, n + 1);
  auto hdim = [&](int i) {
    int h = 0;
    for (int v : R.P[i].verts) h += x.dim(v);
    return h;
  };
  auto D = [&](int i) {
    const ProjSum& lo = R.P[i - 1];
    const ProjSum& hi = R.P[i];
    std::vector<int> roff{0}, coff{0};
    for (int v : lo.verts) roff.push_back(roff.back() + x.dim(v));
    for (int v : hi.verts) coff.push_back(coff.back() + x.dim(v));
    Mat out(roff.back(), coff.back(), x.field());
    for (std::size_t j = 0; j < hi.verts.size(); ++j) {
      const int u = hi.verts[j];
      for (std::size_t k = 0; k < lo.verts.size(); ++k) {
        SVec lam = lo.component(R.d[i - 1][j], static_cast<int>(k), u);
        if (lam.empty()) continue;
        out.set_block(roff[k], coff[j], x.act(lam, lo.verts[k], u));
      }
    }
    return out;
  };
  const int rank_next = static_cast<int>(rank(D(n + 1)));
  const int rank_here = static_cast<int>(rank(D(n)));
  return hdim(n) - rank_next - rank_here;
}

Module transpose(const Module& m) {
  const AlgPtr& A = m.algebra();
  AlgPtr op = A->opposite();
  if (m.is_zero()) return Module::zero(op);
  Resolution R = resolve(m, 1);
  const ProjSum& P0 = R.P[0];
  const ProjSum& P1 = R.P[1];
  ProjSum Q0 = proj_sum(op, P0.verts);
  ProjSum Q1 = proj_sum(op, P1.verts);
  if (P1.verts.empty()) return strip_projectives(Q0.module).core;
  std::vector<Mat> imgs;
  for (std::size_t k = 0; k < P0.verts.size(); ++k) {
    const int v = P0.verts[k];
    std::vector<SVec> comps(P1.verts.size());
    for (std::size_t j = 0; j < P1.verts.size(); ++j) {
      const int u = P1.verts[j];
      SVec lam = P0.component(R.d[0][j], static_cast<int>(k), u);
      for (const auto& [b, c] : lam) {
        const Path& p = A->basis()[b].arrows;
        SVec rev = op->path_element(u, Path(p.rbegin(), p.rend()));
        comps[j] = svec_add(comps[j], rev, c);
      }
    }
    imgs.push_back(Q1.element(v, comps));
  }
  ModuleHom dstar = hom_from_generators(Q0, Q1.module, imgs);
  return strip_projectives(cokernel(dstar).module).core;
}

int stable_hom_dim(const Module& m, const Module& n) {
  auto H = hom_space(m, n);
  if (H.empty()) return 0;
  Cover cov = projective_cover(n);
  auto HP = hom_space(m, cov.proj.module);
  if (HP.empty()) return static_cast<int>(H.size());
  std::size_t width = H.front().flatten().size();
  Mat rows(HP.size(), width, m.field());
  for (std::size_t i = 0; i < HP.size(); ++i) {
    auto v = HP[i].then(cov.eps).flatten();
    for (std::size_t j = 0; j < width; ++j) rows(i, j) = v[j];
  }
  return static_cast<int>(H.size()) - static_cast<int>(rank(rows));
}

Module mho(const Module& m) {
  if (m.is_zero()) return m;
  return strip_projectives(transpose(syzygy(transpose(m), 1))).core;
}

bool is_exact(const ShortExact& s) {
  if (!s.f.then(s.g).is_zero()) return false;
  if (!s.f.is_injective() || !s.g.is_surjective()) return false;
  for (int v = 0; v < s.b().num_vertices(); ++v)
    if (s.a().dim(v) + s.c().dim(v) != s.b().dim(v)) return false;
  return true;
}

int exactness_failure(const std::vector<ModuleHom>& maps) {
  if (maps.empty()) return -1;
  if (!maps.front().is_injective()) return 0;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const ModuleHom& f = maps[i];
    const ModuleHom& g = maps[i + 1];
    if (!f.then(g).is_zero()) return static_cast<int>(i) + 1;
    for (int v = 0; v < f.tgt().num_vertices(); ++v)
      if (static_cast<int>(rank(f.block(v)) + rank(g.block(v))) != f.tgt().dim(v)) return static_cast<int>(i) + 1;
  }
  if (!maps.back().is_surjective()) return static_cast<int>(maps.size());
  return -1;
}

ShortExact rotate_ses(const ShortExact& s) {
  if (!is_exact(s)) throw Error(ErrorKind::NotExact, "input sequence is not short exact");
  const Module& A = s.a();
  const Module& B = s.b();
  const Module& C = s.c();
  Cover cov = projective_cover(C);
  std::vector<Mat> lifts;
  const auto& gv = C.gen_vertices();
  const auto& gr = C.gen_rows();
  for (std::size_t k = 0; k < gv.size(); ++k) lifts.push_back(*solve(s.g.block(gv[k]), gr[k]));
  ModuleHom gbar = hom_from_generators(cov.proj, B, lifts);
  Sub om = kernel(cov.eps);
  ModuleHom ig = om.incl.then(gbar);
  Sum AP = direct_sum(A, cov.proj.module);
  std::vector<Mat> fb, gb;
  for (int v = 0; v < B.num_vertices(); ++v) {
    Mat fbar = *solve(s.f.block(v), ig.block(v));
    fb.push_back(Mat::hstack(fbar, om.incl.block(v)));
    gb.push_back(Mat::vstack(s.f.block(v), gbar.block(v).scaled(Scalar(-1))));
  }
  return {ModuleHom(om.module, AP.module, fb), ModuleHom(AP.module, B, gb)};
}

}  // namespace dl
