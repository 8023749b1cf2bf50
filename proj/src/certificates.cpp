#include "delooping/certificates.hpp"

#include <algorithm>
#include <random>

#include "delooping/config.hpp"
#include "delooping/decomp.hpp"
#include "delooping/error.hpp"

namespace dl {

namespace {

struct Seq {
  Module target;
  std::vector<Module> terms;
  std::vector<ModuleHom> maps;
};

Seq seq_of(const DdellCertificate& c) {
  if (c.terms.empty()) return {c.target, {c.target}, {ModuleHom::identity(c.target)}};
  return {c.target, c.terms, c.maps};
}

DdellCertificate cert_of(Seq s, int k, int bound, const std::string& note) {
  DdellCertificate c;
  c.target = std::move(s.target);
  c.k = k;
  c.bound = bound;
  c.terms = std::move(s.terms);
  c.maps = std::move(s.maps);
  c.witnesses.assign(c.terms.size(), Witness{});
  c.note = note;
  return c;
}

// f with its image inside the submodule s of f.tgt(), as a map into s.
ModuleHom corestrict(const ModuleHom& f, const Sub& s) {
  std::vector<Mat> b;
  for (int v = 0; v < f.src().num_vertices(); ++v) {
    auto x = solve(s.incl.block(v), f.block(v));
    if (!x) throw Error(ErrorKind::NotExact, "image does not lie in the submodule");
    b.push_back(std::move(*x));
  }
  return ModuleHom(f.src(), s.module, b);
}

// h': P -> Y with h'.then(g) = h, generator by generator.
ModuleHom lift(const ProjSum& p, const ModuleHom& h, const ModuleHom& g) {
  std::vector<Mat> imgs;
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    const int v = p.verts[k];
    auto x = solve(g.block(v), p.generator(static_cast<int>(k)) * h.block(v));
    if (!x) throw Error(ErrorKind::NotExact, "map does not lift");
    imgs.push_back(std::move(*x));
  }
  return hom_from_generators(p, g.src(), imgs);
}

ModuleHom inverse_hom(const ModuleHom& f) {
  std::vector<Mat> b;
  for (const Mat& x : f.blocks()) {
    auto y = inverse(x);
    if (!y) throw Error(ErrorKind::ValidationError, "map is not an isomorphism");
    b.push_back(std::move(*y));
  }
  return ModuleHom(f.tgt(), f.src(), b);
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Horseshoe applied to every short exact piece of s, with the cover `cov` of
// the target. The result ends in ker_t = ker(cov.eps).
Seq shift(const Seq& s, const Cover& cov, const Sub& ker_t) {
  const AlgPtr& a = s.target.algebra();
  const int nv = a->num_vertices();
  const int n = static_cast<int>(s.terms.size()) - 1;
  std::vector<Sub> z;  // z[j] = ker maps[j] inside C_j
  std::vector<ModuleHom> beta;
  std::vector<Cover> covers;
  for (int j = 0; j <= n; ++j) z.push_back(kernel(s.maps[j]));
  for (int j = 0; j <= n; ++j) beta.push_back(j == 0 ? s.maps[0] : corestrict(s.maps[j], z[j - 1]));
  for (int j = 0; j <= n; ++j) covers.push_back(projective_cover(z[j].module));
  auto cover_below = [&](int j) -> const Cover& { return j == 0 ? cov : covers[j - 1]; };

  std::vector<ProjSum> e;
  std::vector<Sub> kers;
  for (int j = 0; j <= n; ++j) {
    const Cover& cx = covers[j];
    const Cover& cz = cover_below(j);
    ProjSum ej = proj_sum(a, concat(cx.proj.verts, cz.proj.verts));
    std::vector<Mat> imgs;
    for (std::size_t k = 0; k < cx.proj.verts.size(); ++k) {
      const int v = cx.proj.verts[k];
      imgs.push_back(cx.proj.generator(static_cast<int>(k)) * cx.eps.block(v) * z[j].incl.block(v));
    }
    for (std::size_t k = 0; k < cz.proj.verts.size(); ++k) {
      const int v = cz.proj.verts[k];
      auto x = solve(beta[j].block(v), cz.proj.generator(static_cast<int>(k)) * cz.eps.block(v));
      if (!x) throw Error(ErrorKind::NotExact, "sequence is not exact at term " + std::to_string(j));
      imgs.push_back(std::move(*x));
    }
    ModuleHom psi = hom_from_generators(ej, s.terms[j], imgs);
    kers.push_back(kernel(psi));
    e.push_back(std::move(ej));
  }

  Seq out;
  out.target = ker_t.module;
  for (int j = 0; j <= n; ++j) {
    out.terms.push_back(kers[j].module);
    const Module& below = j == 0 ? cov.proj.module : e[j - 1].module;
    const Sub& kb = j == 0 ? ker_t : kers[j - 1];
    std::vector<Mat> blocks;
    for (int v = 0; v < nv; ++v) {
      const int dx = covers[j].proj.module.dim(v);
      const int dz = cover_below(j).proj.module.dim(v);
      Mat sh(e[j].module.dim(v), below.dim(v), a->field());
      for (int i = 0; i < dz; ++i) sh(dx + i, i) = a->field().one();
      auto x = solve(kb.incl.block(v), kers[j].incl.block(v) * sh);
      if (!x) throw Error(ErrorKind::NotExact, "shifted map leaves the kernel");
      blocks.push_back(std::move(*x));
    }
    out.maps.emplace_back(kers[j].module, kb.module, blocks);
  }
  return out;
}

// Replaces the target T by T' along r: T -> T' whose kernel is the image of
// the projective q under q_incl.
DdellCertificate retarget(const DdellCertificate& c, const ModuleHom& r, const ProjSum& q, const ModuleHom& q_incl) {
  Seq s = seq_of(c);
  DdellCertificate out = c;
  out.target = r.tgt();
  out.terms = s.terms;
  out.maps = s.maps;
  out.witnesses.assign(out.terms.size(), Witness{});
  if (!c.terms.empty()) out.witnesses = c.witnesses;
  const ModuleHom d0 = s.maps[0];
  out.maps[0] = d0.then(r);
  if (q.module.is_zero()) return out;
  ModuleHom ell = lift(q, q_incl, d0);
  if (s.terms.size() == 1) {
    out.terms.push_back(q.module);
    out.maps.push_back(ell);
    out.witnesses.push_back(Witness{});
    return out;
  }
  Sum c1 = direct_sum(s.terms[1], q.module);
  out.terms[1] = c1.module;
  std::vector<Mat> up, down;
  for (int v = 0; v < c1.module.num_vertices(); ++v) {
    up.push_back(Mat::vstack(s.maps[1].block(v), ell.block(v)));
    if (s.terms.size() > 2)
      down.push_back(Mat::hstack(s.maps[2].block(v), Mat(s.terms[2].dim(v), q.module.dim(v), c1.module.field())));
  }
  out.maps[1] = ModuleHom(c1.module, s.terms[0], up);
  if (s.terms.size() > 2) out.maps[2] = ModuleHom(s.terms[2], c1.module, down);
  out.witnesses[1] = Witness{};
  return out;
}

bool same_algebra(const DdellCertificate& c, const Module& m) { return m.algebra() == c.target.algebra(); }

ModuleHom combination(const std::vector<ModuleHom>& basis, const std::vector<long>& coef) {
  const Field f = basis.front().src().field();
  ModuleHom h = ModuleHom::zero(basis.front().src(), basis.front().tgt());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coef[i] != 0) h = h + basis[i].scaled(f(coef[i]));
  return h;
}

Module power_radical_quotient(const Module& m, int j) {
  std::vector<Mat> rows = radical_rows(m);
  Sub r = submodule(m, rows);
  for (int i = 1; i < j; ++i) {
    Sub next = submodule(r.module, radical_rows(r.module));
    std::vector<Mat> in_m;
    for (int v = 0; v < m.num_vertices(); ++v) in_m.push_back(next.incl.block(v) * r.incl.block(v));
    r = submodule(m, in_m);
  }
  std::vector<Mat> blocks;
  for (int v = 0; v < m.num_vertices(); ++v) blocks.push_back(r.incl.block(v));
  return quotient(m, blocks).module;
}

void add_candidate(std::vector<Module>& pool, const Module& m) {
  if (m.is_zero()) return;
  for (const Module& x : pool)
    if (x.same_data(m)) return;
  pool.push_back(m);
}

void sort_by_dim(std::vector<Module>& pool) {
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Module& x, const Module& y) { return x.total_dim() < y.total_dim(); });
}

class DdellSearcher {
 public:
  DdellSearcher(const AlgPtr& a, const SearchOptions& opt) : engine_(engine_for(a)), opt_(opt) {
    for (const Module& m : opt.pool) add_candidate(base_, m);
    if (opt.use_closure) {
      SyzygyGraph g = simple_closure(a, opt.closure_caps);
      for (const auto& node : g.nodes())
        if (!node.over_dim) add_candidate(base_, node.rep);
    }
  }

  std::optional<Seq> find(const Module& m, int k, int b, int depth) {
    if (m.is_zero() || is_projective(m)) return Seq{m, {m}, {ModuleHom::identity(m)}};
    if (le(m, k, b) == Truth::True) return Seq{m, {m}, {ModuleHom::identity(m)}};
    if (b == 0 || depth == 0) return std::nullopt;
    if (failed(m, k, b)) return std::nullopt;
    std::vector<Module> pool = base_;
    Module p = projective_cover(m).proj.module;
    const int loewy = static_cast<int>(radical_layers(p).size());
    for (int j = 1; j <= loewy; ++j) add_candidate(pool, power_radical_quotient(p, j));
    sort_by_dim(pool);
    for (const Module& c : pool) {
      if (le(c, k, b) != Truth::True) continue;
      auto basis = hom_space(c, m);
      if (basis.empty()) continue;
      std::vector<Module> kernels;
      auto surj = sample_homs(basis, opt_.surjections_per_candidate, config().sample_budget, [&](const ModuleHom& h) {
        if (!h.is_surjective()) return false;
        Module kk = kernel(h).module;
        if (kk.is_zero()) return false;
        for (const Module& x : kernels)
          if (x.dims() == kk.dims() && is_isomorphic(x, kk)) return false;
        kernels.push_back(kk);
        return true;
      });
      for (const ModuleHom& s : surj) {
        Sub kk = kernel(s);
        auto rest = find(kk.module, k + 1, b - 1, depth - 1);
        if (!rest) continue;
        Seq out{m, {c}, {s}};
        out.terms.insert(out.terms.end(), rest->terms.begin(), rest->terms.end());
        out.maps.push_back(rest->maps[0].then(kk.incl));
        out.maps.insert(out.maps.end(), rest->maps.begin() + 1, rest->maps.end());
        return out;
      }
    }
    failures_.push_back({m, k, b});
    return std::nullopt;
  }

  Truth le(const Module& m, int k, int n) {
    for (const auto& e : le_memo_)
      if (e.k == k && e.n == n && e.m.same_data(m)) return e.t;
    Truth t = engine_.k_dell_le(m, k, n);
    le_memo_.push_back({m, k, n, t});
    return t;
  }

 private:
  struct Failure {
    Module m;
    int k, b;
  };
  struct LeEntry {
    Module m;
    int k, n;
    Truth t;
  };

  bool failed(const Module& m, int k, int b) const {
    for (const auto& f : failures_)
      if (f.k == k && f.b >= b && f.m.dims() == m.dims() && is_isomorphic(f.m, m)) return true;
    return false;
  }

  DellEngine& engine_;
  const SearchOptions& opt_;
  std::vector<Module> base_;
  std::vector<Failure> failures_;
  std::vector<LeEntry> le_memo_;
};

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Confirmed: return "confirmed";
    case CertStatus::NotExact: return "not-exact";
    case CertStatus::WitnessFails: return "witness-fails";
    case CertStatus::WitnessUnknown: return "witness-unknown";
    case CertStatus::Malformed: return "malformed";
  }
  return "?";
}

VerifyResult verify_ddell(const DdellCertificate& c) {
  VerifyResult r;
  auto fail = [&](CertStatus s, int idx, const std::string& msg) {
    r.status = s;
    r.index = idx;
    r.message = msg;
    return r;
  };
  if (c.k < 1 || c.bound < 0) return fail(CertStatus::Malformed, -1, "k must be positive and the bound nonnegative");
  if (c.terms.empty()) {
    if (!c.maps.empty() || !c.witnesses.empty()) return fail(CertStatus::Malformed, -1, "maps without terms");
    if (!c.target.is_zero() && !is_projective(c.target))
      return fail(CertStatus::Malformed, -1, "empty certificate for a non-projective target");
    r.status = CertStatus::Confirmed;
    r.bound = c.bound;
    return r;
  }
  const int n = c.length();
  if (c.maps.size() != c.terms.size() || c.witnesses.size() != c.terms.size())
    return fail(CertStatus::Malformed, -1, "need one map and one witness per term");
  if (n > c.bound) return fail(CertStatus::Malformed, n, "length " + std::to_string(n) + " exceeds the bound");
  for (int i = 0; i <= n; ++i) {
    const Module& below = i == 0 ? c.target : c.terms[i - 1];
    if (!same_algebra(c, c.terms[i])) return fail(CertStatus::Malformed, i, "term over a different algebra");
    if (!c.maps[i].src().same_data(c.terms[i]) || !c.maps[i].tgt().same_data(below))
      return fail(CertStatus::Malformed, i, "map " + std::to_string(i) + " has the wrong source or target");
    if (!c.maps[i].intertwines())
      return fail(CertStatus::Malformed, i, "map " + std::to_string(i) + " is not a module homomorphism");
  }
  std::vector<ModuleHom> chain(c.maps.rbegin(), c.maps.rend());
  const int bad = exactness_failure(chain);
  if (bad >= 0) {
    const int at = n - bad;
    return fail(CertStatus::NotExact, at, at < 0 ? "not exact at the target" : "not exact at term " + std::to_string(at));
  }
  for (int i = 0; i <= n; ++i) {
    const Witness& w = c.witnesses[i];
    const int budget = c.bound - i;
    Truth t;
    if (w.over) {
      if (w.over->algebra() != c.target.algebra()) return fail(CertStatus::Malformed, i, "witness over a different algebra");
      Module x = syzygy(c.terms[i], budget);
      Module y = syzygy(*w.over, c.bound + c.k);
      t = Truth::True;
      for (const auto& [piece, mult] : nonprojective_summands(x))
        if (multiplicity(piece, y) < mult) t = Truth::False;
    } else {
      t = k_dell_le(c.terms[i], i + c.k, budget, w.method);
    }
    const std::string what = std::to_string(i + c.k) + "-dell C_" + std::to_string(i) + " <= " + std::to_string(budget);
    if (t == Truth::False) return fail(CertStatus::WitnessFails, i, what + " fails");
    if (t == Truth::Unknown) return fail(CertStatus::WitnessUnknown, i, what + " is inconclusive");
  }
  r.status = CertStatus::Confirmed;
  r.bound = c.bound;
  return r;
}

DdellCertificate trivial_certificate(const Module& m, int k, int bound) {
  return cert_of(Seq{m, {m}, {ModuleHom::identity(m)}}, k, bound, "trivial");
}

DdellCertificate resolution_certificate(const Module& m, int k, int n) {
  if (n == 0) return trivial_certificate(m, k, 0);
  Resolution res = resolve(m, n - 1);
  Seq s{m, {}, {}};
  for (int i = 0; i < n; ++i) {
    s.terms.push_back(res.P[i].module);
    s.maps.push_back(i == 0 ? res.eps : hom_from_generators(res.P[i], res.P[i - 1].module, res.d[i - 1]));
  }
  s.terms.push_back(res.kernels[n - 1].module);
  s.maps.push_back(res.kernels[n - 1].incl);
  return cert_of(std::move(s), k, n, "truncated projective resolution");
}

DdellCertificate cert_extend(const ShortExact& ses, const DdellCertificate& cert_a, const DdellCertificate& cert_c) {
  if (!is_exact(ses)) throw Error(ErrorKind::NotExact, "input sequence is not short exact");
  if (cert_a.k != cert_c.k) throw Error(ErrorKind::ValidationError, "certificates have different k");
  if (!cert_a.target.same_data(ses.a()) || !cert_c.target.same_data(ses.c()))
    throw Error(ErrorKind::ValidationError, "certificate targets do not match the sequence");
  const int k = cert_a.k;
  const AlgPtr& alg = ses.b().algebra();
  const int nv = alg->num_vertices();
  if (ses.a().is_zero()) {
    DdellCertificate out = cert_c;
    out.target = ses.b();
    Seq s = seq_of(cert_c);
    if (!cert_c.terms.empty()) out.maps[0] = s.maps[0].then(inverse_hom(ses.g));
    return out;
  }
  Seq d = seq_of(cert_a);
  Seq e = seq_of(cert_c);
  const int n1 = static_cast<int>(d.terms.size()) - 1;

  std::vector<Cover> covers{projective_cover(ses.c())};
  std::vector<Sub> ks{kernel(covers[0].eps)};
  for (int i = 1; i <= n1; ++i) {
    covers.push_back(projective_cover(ks.back().module));
    ks.push_back(kernel(covers.back().eps));
  }
  auto dp = [&](int i) { return covers[i].eps.then(ks[i - 1].incl); };
  const ModuleHom d0f = d.maps[0].then(ses.f);
  auto dlow = [&](int i) { return i == 0 ? d0f : d.maps[i]; };

  std::vector<ModuleHom> theta{lift(covers[0].proj, covers[0].eps, ses.g)};
  for (int i = 1; i <= n1; ++i)
    theta.push_back(lift(covers[i].proj, dp(i).then(theta[i - 1]).scaled(Scalar(-1)), dlow(i - 1)));

  Seq out{ses.b(), {}, {}};
  for (int i = 0; i <= n1; ++i) {
    Sum x = direct_sum(d.terms[i], covers[i].proj.module);
    out.terms.push_back(x.module);
    std::vector<Mat> blocks;
    const ModuleHom dpi = i == 0 ? ModuleHom() : dp(i);
    for (int v = 0; v < nv; ++v) {
      if (i == 0) {
        blocks.push_back(Mat::vstack(d0f.block(v), theta[0].block(v)));
      } else {
        Mat zero(d.terms[i].dim(v), covers[i - 1].proj.module.dim(v), alg->field());
        blocks.push_back(Mat::vstack(Mat::hstack(d.maps[i].block(v), zero), Mat::hstack(theta[i].block(v), dpi.block(v))));
      }
    }
    out.maps.emplace_back(x.module, i == 0 ? ses.b() : out.terms[i - 1], blocks);
  }

  const Sub& kfin = ks[n1];
  const ModuleHom last = dlow(n1);
  std::vector<Mat> jb;
  for (int v = 0; v < nv; ++v) {
    Mat iota = kfin.incl.block(v);
    auto sigma = solve(last.block(v), (iota * theta[n1].block(v)).scaled(Scalar(-1)));
    if (!sigma) throw Error(ErrorKind::NotExact, "certificate for the submodule is not exact");
    jb.push_back(Mat::hstack(*sigma, iota));
  }
  ModuleHom j(kfin.module, out.terms[n1], jb);

  Seq sh = e;
  for (int i = 0; i <= n1; ++i) sh = shift(sh, covers[i], ks[i]);
  for (std::size_t t = 0; t < sh.terms.size(); ++t) {
    out.terms.push_back(sh.terms[t]);
    out.maps.push_back(t == 0 ? sh.maps[0].then(j) : sh.maps[t]);
  }
  return cert_of(std::move(out), k, cert_a.bound + cert_c.bound + 1, "extension");
}

DdellCertificate cert_syzygy(const DdellCertificate& cert) {
  const Module& m = cert.target;
  Cover cov = projective_cover(m);
  Sub om = kernel(cov.eps);
  if (cert.terms.empty() || om.module.is_zero()) {
    DdellCertificate c = cert_of(Seq{om.module, {}, {}}, cert.k + 1, 0, "syzygy of a projective");
    c.witnesses.clear();
    if (!om.module.is_zero() && !is_projective(om.module)) return trivial_certificate(om.module, cert.k + 1, 0);
    return c;
  }
  if (cert.bound == 0) return trivial_certificate(om.module, cert.k + 1, 0);
  Seq s = shift(seq_of(cert), cov, om);
  const int n = cert.length();
  const int bound = n == cert.bound ? cert.bound : cert.bound - 1;
  return cert_of(std::move(s), cert.k + 1, bound, "syzygy");
}

DdellCertificate cert_submodule(const ModuleHom& inj, const DdellCertificate& cert_n) {
  const Module& m = inj.src();
  const Module& n = inj.tgt();
  if (!inj.is_injective()) throw Error(ErrorKind::ValidationError, "map is not injective");
  if (!cert_n.target.same_data(n)) throw Error(ErrorKind::ValidationError, "certificate target is not the ambient module");
  if (m.is_zero() || is_projective(m)) {
    DdellCertificate c = cert_of(Seq{m, {}, {}}, cert_n.k, 0, "projective");
    c.witnesses.clear();
    return c;
  }
  if (inj.is_iso()) {
    DdellCertificate out = cert_n;
    out.target = m;
    if (cert_n.terms.empty()) return out;
    out.maps[0] = cert_n.maps[0].then(inverse_hom(inj));
    return out;
  }
  Quot q = cokernel(inj);
  ShortExact rot = rotate_ses({inj, q.proj});
  DdellCertificate first = trivial_certificate(rot.a(), cert_n.k, 0);
  DdellCertificate mid = cert_extend(rot, first, cert_n);
  const Module& mp = rot.b();
  Cover cov = projective_cover(n);
  std::vector<Mat> rb, qb;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const int dm = m.dim(v), dp = cov.proj.module.dim(v);
    rb.push_back(Mat::vstack(Mat::identity(dm, m.field()), Mat(dp, dm, m.field())));
    qb.push_back(Mat::hstack(Mat(dp, dm, m.field()), Mat::identity(dp, m.field())));
  }
  ModuleHom r(mp, m, rb);
  ModuleHom q_incl(cov.proj.module, mp, qb);
  DdellCertificate out = retarget(mid, r, cov.proj, q_incl);
  out.note = "submodule";
  return out;
}

Tag DdellSearch::tag() const {
  if (!cert) return Tag::Unknown;
  return cert->bound == lower_bound ? Tag::Exact : Tag::UpperBound;
}

DdellSearch search_ddell(const Module& m, int k, const SearchOptions& opt) {
  if (k < 1 || opt.bound_cap < 0 || opt.depth_cap < 0) throw Error(ErrorKind::Usage, "caps must be nonnegative");
  DdellSearch res;
  if (m.is_zero() || is_projective(m)) {
    DdellCertificate c = cert_of(Seq{m, {}, {}}, k, 0, "projective");
    c.witnesses.clear();
    res.cert = c;
    res.lower_reason = "projective";
    return res;
  }
  DdellSearcher s(m.algebra(), opt);
  for (int b = 0; b <= opt.bound_cap; ++b) {
    auto seq = s.find(m, k, b, opt.depth_cap);
    if (seq) {
      const char* note = seq->terms.size() == 1 ? "trivial" : "search";
      res.cert = cert_of(std::move(*seq), k, b, note);
      return res;
    }
    if (b == 0 && s.le(m, k, 0) == Truth::False) {
      res.lower_bound = 1;
      res.lower_reason = std::to_string(k) + "-dell is positive, so no certificate has bound 0";
    }
  }
  return res;
}

Sub socle_layer(const Module& m, int j) {
  const AlgPtr& a = m.algebra();
  std::vector<Mat> rows;
  for (int v = 0; v < m.num_vertices(); ++v) {
    Mat acts(m.dim(v), 0, m.field());
    for (int b = 0; b < a->dim(); ++b) {
      const auto& el = a->basis()[b];
      if (el.src != v || static_cast<int>(el.arrows.size()) != j) continue;
      acts = Mat::hstack(acts, m.act(b));
    }
    rows.push_back(acts.cols() == 0 ? Mat::identity(m.dim(v), m.field()) : kernel_basis(acts));
  }
  return submodule(m, rows);
}

Module injective_envelope(const Module& m) {
  std::vector<Module> parts;
  auto soc = socle_dims(m);
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int i = 0; i < soc[v]; ++i) parts.push_back(injective(m.algebra(), v));
  if (parts.empty()) return Module::zero(m.algebra());
  return parts.size() == 1 ? parts.front() : direct_sum(parts).module;
}

std::vector<ModuleHom> sample_homs(const std::vector<ModuleHom>& basis, int want, int budget,
                                   const std::function<bool(const ModuleHom&)>& pred) {
  std::vector<ModuleHom> out;
  if (basis.empty() || want <= 0) return out;
  const std::size_t h = basis.size();
  auto consider = [&](const ModuleHom& x) {
    if (pred(x)) out.push_back(x);
    return static_cast<int>(out.size()) >= want;
  };
  for (const auto& b : basis)
    if (consider(b)) return out;
  int tried = 0;
  if (h >= 2) {
    std::vector<long> coef(h, 0);
    while (tried < budget) {
      std::size_t i = 0;
      while (i < h) {
        coef[i] = coef[i] == 0 ? 1 : (coef[i] == 1 ? -1 : 0);
        if (coef[i] != 0) break;
        ++i;
      }
      if (i == h) break;
      if (std::count_if(coef.begin(), coef.end(), [](long c) { return c != 0; }) < 2) continue;
      ++tried;
      if (consider(combination(basis, coef))) return out;
    }
  }
  std::mt19937_64 rng(config().seed);
  long range = 2;
  for (int t = 0; t < budget; ++t) {
    if (t > 0 && t % 16 == 0) range *= 2;
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<long> coef(h);
    for (auto& c : coef) c = dist(rng);
    if (consider(combination(basis, coef))) return out;
  }
  return out;
}

SubddellSearch search_subddell(const Module& m, const std::vector<Module>& pool, int cap, bool use_closure,
                               GraphCaps closure_caps) {
  SubddellSearch res;
  res.bound.tag = Tag::ExceedsCap;
  res.bound.method = "adjoint";
  if (m.is_zero()) {
    res.bound = {Tag::Exact, 0, "zero"};
    return res;
  }
  DellEngine& eng = engine_for(m.algebra());
  std::vector<std::pair<Module, std::string>> cands;
  auto add = [&](const Module& x, const std::string& label) {
    if (x.is_zero()) return;
    for (const auto& [y, l] : cands)
      if (y.same_data(x)) return;
    cands.emplace_back(x, label);
  };
  add(m, "self");
  Module env = injective_envelope(m);
  const int ll = static_cast<int>(radical_layers(env).size());
  for (int j = 1; j < ll; ++j) add(socle_layer(env, j).module, "soc^" + std::to_string(j) + " I");
  add(env, "I");
  for (std::size_t i = 0; i < pool.size(); ++i) add(pool[i], "pool " + std::to_string(i));
  if (use_closure) {
    SyzygyGraph g = simple_closure(m.algebra(), closure_caps);
    for (int i = 0; i < g.size(); ++i)
      if (!g.node(i).over_dim) add(g.node(i).rep, "node " + std::to_string(i));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& x, const auto& y) { return x.first.total_dim() < y.first.total_dim(); });
  bool unknown = false;
  for (const auto& [n, label] : cands) {
    if (n.total_dim() < m.total_dim()) continue;
    const int limit = res.bound.tag == Tag::UpperBound || res.bound.tag == Tag::Exact ? res.bound.value - 1 : cap;
    if (limit < 0) break;
    auto basis = hom_space(m, n);
    auto inj = sample_homs(basis, 1, config().sample_budget, [](const ModuleHom& h) { return h.is_injective(); });
    if (inj.empty()) continue;
    Bound d = eng.k_dell(n, 1, limit);
    if (d.tag == Tag::Unknown) unknown = true;
    if (d.tag != Tag::Exact && d.tag != Tag::UpperBound) continue;
    res.bound = {d.value == 0 ? Tag::Exact : Tag::UpperBound, d.value, d.method};
    res.embedding = inj.front();
    res.over_label = label;
  }
  if (!res.embedding && unknown) res.bound.tag = Tag::Unknown;
  return res;
}

}  // namespace dl
