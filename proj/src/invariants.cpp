#include "delooping/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

#include "delooping/decomp.hpp"
#include "delooping/error.hpp"
#include "delooping/homological.hpp"

namespace dl {

SyzygyGraph::SyzygyGraph(AlgPtr a, GraphCaps caps) : alg_(std::move(a)), caps_(caps) {
  if (caps_.depth <= 0 || caps_.dim <= 0) throw Error(ErrorKind::Usage, "graph caps must be positive");
}

int SyzygyGraph::find(const Module& m) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].rep.dims() == m.dims() && is_isomorphic(nodes_[i].rep, m)) return i;
  return -1;
}

int SyzygyGraph::find_or_add(const Module& m, int depth) {
  int i = find(m);
  if (i < 0) {
    nodes_.push_back({m, depth, false, false});
    edges_.emplace_back();
    queue_.push_back(size() - 1);
    return size() - 1;
  }
  if (depth < nodes_[i].depth) {
    nodes_[i].depth = depth;
    if (!nodes_[i].expanded && !nodes_[i].over_dim) queue_.push_back(i);
  }
  return i;
}

SyzygyGraph::Summands SyzygyGraph::add_seed(const Module& m, const std::string& label) {
  Summands out;
  for (const auto& [x, mult] : nonprojective_summands(m)) out.emplace_back(find_or_add(x, 0), mult);
  seed_labels_.push_back(label);
  seed_summands_.push_back(out);
  expand();
  return out;
}

void SyzygyGraph::expand() {
  std::size_t head = 0;
  while (head < queue_.size()) {
    const int i = queue_[head++];
    if (nodes_[i].expanded) continue;
    if (nodes_[i].rep.total_dim() > caps_.dim) {
      nodes_[i].over_dim = true;
      continue;
    }
    if (nodes_[i].depth >= caps_.depth) continue;
    const int depth = nodes_[i].depth;
    Module om = syzygy(nodes_[i].rep, 1);
    std::vector<Edge> es;
    if (!om.is_zero()) {
      Decomposition D = decompose(om);
      for (const auto& g : D.groups) es.push_back({find_or_add(g.rep, depth + 1), g.multiplicity});
    }
    edges_[i] = es;
    nodes_[i].expanded = true;
  }
  queue_.clear();
  for (int i = 0; i < size(); ++i)
    if (!nodes_[i].expanded && !nodes_[i].over_dim) queue_.push_back(i);
}

bool SyzygyGraph::closed() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.expanded; });
}

bool SyzygyGraph::depth_capped() const {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.expanded && !n.over_dim; });
}

bool SyzygyGraph::dim_capped() const {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.over_dim; });
}

std::vector<int> SyzygyGraph::provenance(int i) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < seed_summands_.size(); ++s) {
    std::vector<bool> seen(size(), false);
    std::deque<int> q;
    for (const auto& [n, mult] : seed_summands_[s]) {
      if (!seen[n]) q.push_back(n);
      seen[n] = true;
    }
    while (!q.empty()) {
      int n = q.front();
      q.pop_front();
      for (const Edge& e : edges_[n])
        if (!seen[e.to]) {
          seen[e.to] = true;
          q.push_back(e.to);
        }
    }
    if (seen[i]) out.push_back(static_cast<int>(s));
  }
  return out;
}

namespace {

std::vector<bool> step(const SyzygyGraph& g, const std::vector<bool>& s) {
  std::vector<bool> next(g.size(), false);
  for (int i = 0; i < g.size(); ++i)
    if (s[i])
      for (const auto& e : g.edges(i)) next[e.to] = true;
  return next;
}

}  // namespace

std::vector<bool> SyzygyGraph::walk_endpoints(int len) const {
  std::vector<bool> s(size(), true);
  for (int j = 0; j < len; ++j) {
    auto next = step(*this, s);
    if (next == s) break;
    s = next;
  }
  return s;
}

std::vector<bool> SyzygyGraph::recurrent() const { return walk_endpoints(size() + 1); }

bool SyzygyGraph::closed_from(int i) const {
  std::vector<bool> seen(size(), false);
  std::deque<int> q{i};
  seen[i] = true;
  while (!q.empty()) {
    int n = q.front();
    q.pop_front();
    if (!nodes_[n].expanded) return false;
    for (const Edge& e : edges_[n])
      if (!seen[e.to]) {
        seen[e.to] = true;
        q.push_back(e.to);
      }
  }
  return true;
}

Mat SyzygyGraph::lattice_map() const {
  Mat L(size(), size(), Field());
  for (int j = 0; j < size(); ++j)
    for (const Edge& e : edges_[j]) L(e.to, j) += Scalar(e.mult);
  return L;
}

SyzygyGraph syzygy_closure(const AlgPtr& a, const std::vector<Module>& seeds, GraphCaps caps) {
  SyzygyGraph g(a, caps);
  for (std::size_t i = 0; i < seeds.size(); ++i) g.add_seed(seeds[i], "seed" + std::to_string(i));
  return g;
}

SyzygyGraph simple_closure(const AlgPtr& a, GraphCaps caps) {
  SyzygyGraph g(a, caps);
  for (int v = 0; v < a->num_vertices(); ++v) g.add_seed(simple(a, v), "S" + a->quiver().vertices[v]);
  return g;
}

bool infinitely_deloopable(int node, const SyzygyGraph& g) {
  if (g.recurrent()[node]) return true;
  if (!g.closed())
    throw Error(ErrorKind::GraphTruncated, "syzygy closure truncated at depth " + std::to_string(g.caps().depth) +
                                               " / dimension " + std::to_string(g.caps().dim));
  return false;
}

const char* to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    default: return "unknown";
  }
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Adjoint: return "adjoint";
    case Method::Pool: return "pool";
    default: return "auto";
  }
}

const char* to_string(Tag t) {
  switch (t) {
    case Tag::Exact: return "exact";
    case Tag::UpperBound: return "upper-bound";
    case Tag::ExceedsCap: return "exceeds-cap";
    default: return "unknown";
  }
}

std::string Bound::str() const {
  switch (tag) {
    case Tag::Exact: return std::to_string(value);
    case Tag::UpperBound: return "<= " + std::to_string(value);
    case Tag::ExceedsCap: return "exceeds cap";
    default: return "unknown";
  }
}

Bound sup_bound(const std::vector<Bound>& bs) {
  Bound out{Tag::Exact, 0, ""};
  bool exceeds = false, unknown = false, upper = false;
  for (const Bound& b : bs) {
    if (b.tag == Tag::ExceedsCap) exceeds = true;
    if (b.tag == Tag::Unknown) unknown = true;
    if (b.tag == Tag::UpperBound) upper = true;
    if (b.tag == Tag::Exact || b.tag == Tag::UpperBound) out.value = std::max(out.value, b.value);
    if (out.method.find(b.method) == std::string::npos) out.method += (out.method.empty() ? "" : ",") + b.method;
  }
  if (exceeds) out.tag = Tag::ExceedsCap;
  else if (unknown) out.tag = Tag::Unknown;
  else if (upper) out.tag = Tag::UpperBound;
  if (out.tag == Tag::ExceedsCap || out.tag == Tag::Unknown) out.value = -1;
  return out;
}

DellEngine::DellEngine(AlgPtr a, GraphCaps caps) : alg_(std::move(a)), caps_(caps) {}

SyzygyGraph& DellEngine::graph() {
  if (!graph_) graph_ = simple_closure(alg_, caps_);
  return *graph_;
}

void DellEngine::add_pool(const Module& m, const std::string& label) { graph().add_seed(m, label); }

const AdjunctionGate& DellEngine::adjunction_gate() {
  if (gate_) return *gate_;
  AdjunctionGate g;
  std::vector<Module> xs;
  const SyzygyGraph small = simple_closure(alg_, {2, 12});
  for (const auto& n : small.nodes())
    if (n.rep.total_dim() <= 12 && xs.size() < 8) xs.push_back(n.rep);
  std::vector<Module> mx, oy;
  for (const auto& x : xs) {
    mx.push_back(mho(x));
    oy.push_back(syzygy(x, 1));
  }
  g.passed = true;
  for (std::size_t i = 0; i < xs.size() && g.passed; ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      ++g.pairs;
      int lhs = stable_hom_dim(mx[i], xs[j]);
      int rhs = stable_hom_dim(xs[i], oy[j]);
      if (lhs != rhs) {
        g.passed = false;
        g.failure = "node pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(lhs) +
                    " != " + std::to_string(rhs);
        break;
      }
    }
  gate_ = g;
  return *gate_;
}

bool DellEngine::adjoint_le(const Module& m, int n, int shift) {
  Module x = n == 0 ? strip_projectives(m).core : syzygy(m, n);
  if (x.is_zero()) return true;
  Module y = x;
  for (int i = 0; i < shift; ++i) y = mho(y);
  for (int i = 0; i < shift && !y.is_zero(); ++i) y = raw_syzygy(y).module;
  if (y.is_zero()) return false;
  return is_summand(x, y);
}

Truth DellEngine::pool_le(const Module& m, int k, int n) {
  Module x = n == 0 ? m : syzygy(m, n);
  auto parts = nonprojective_summands(x);
  if (parts.empty()) return Truth::True;
  SyzygyGraph& g = graph();
  auto reach = g.walk_endpoints(n + k);
  for (const auto& [p, mult] : parts) {
    int i = g.find(p);
    if (i < 0 || !reach[i]) return Truth::Unknown;
  }
  return Truth::True;
}

Truth DellEngine::k_dell_le(const Module& m, int k, int n, Method method) {
  if (k < 1 || n < 0) throw Error(ErrorKind::Usage, "k_dell_le needs k >= 1 and n >= 0");
  if (m.algebra() != alg_) throw Error(ErrorKind::ValidationError, "module over a different algebra");
  const bool adjoint_ok = adjunction_gate().passed;
  if (method == Method::Adjoint) {
    if (k != 1) throw Error(ErrorKind::MethodUnavailable, "adjoint method decides k = 1 only");
    if (!adjoint_ok) throw Error(ErrorKind::MethodUnavailable, "adjunction gate failed: " + gate_->failure);
    return adjoint_le(m, n, n + 1) ? Truth::True : Truth::False;
  }
  if (method == Method::Pool) return pool_le(m, k, n);
  if (k == 1 && adjoint_ok) return adjoint_le(m, n, n + 1) ? Truth::True : Truth::False;
  if (adjoint_ok && !graph_) return adjoint_le(m, n, n + k) ? Truth::True : Truth::False;
  Truth t = pool_le(m, k, n);
  if (t == Truth::Unknown && adjoint_ok) return adjoint_le(m, n, n + k) ? Truth::True : Truth::False;
  return t;
}

Bound DellEngine::k_dell(const Module& m, int k, int cap, Method method) {
  Bound b;
  if (method == Method::Auto)
    b.method = k == 1 && adjunction_gate().passed ? "adjoint" : (adjunction_gate().passed ? "pool+adjoint" : "pool");
  else
    b.method = to_string(method);
  bool definite = true;
  for (int n = 0; n <= cap; ++n) {
    Truth t = k_dell_le(m, k, n, method);
    if (t == Truth::True) {
      b.tag = definite ? Tag::Exact : Tag::UpperBound;
      b.value = n;
      return b;
    }
    if (t == Truth::Unknown) definite = false;
  }
  b.tag = definite ? Tag::ExceedsCap : Tag::Unknown;
  return b;
}

Bound DellEngine::dell_algebra(int k, int cap, Method method) {
  std::vector<Bound> bs;
  for (int v = 0; v < alg_->num_vertices(); ++v) bs.push_back(k_dell(simple(alg_, v), k, cap, method));
  return sup_bound(bs);
}

namespace {

std::mutex engines_mu;
std::map<const PathAlgebra*, std::unique_ptr<DellEngine>>& engines() {
  static std::map<const PathAlgebra*, std::unique_ptr<DellEngine>> e;
  return e;
}

}  // namespace

DellEngine& engine_for(const AlgPtr& a) {
  std::lock_guard<std::mutex> lock(engines_mu);
  auto& e = engines()[a.get()];
  if (!e) e = std::make_unique<DellEngine>(a);
  return *e;
}

void set_engine_caps(const AlgPtr& a, GraphCaps caps) {
  std::lock_guard<std::mutex> lock(engines_mu);
  engines()[a.get()] = std::make_unique<DellEngine>(a, caps);
}

Truth k_dell_le(const Module& m, int k, int n, Method method) {
  return engine_for(m.algebra()).k_dell_le(m, k, n, method);
}

Bound k_dell(const Module& m, int k, int cap, Method method) {
  return engine_for(m.algebra()).k_dell(m, k, cap, method);
}

Bound dell(const Module& m, int cap) { return k_dell(m, 1, cap); }

namespace {

PhiResult stabilization(const Mat& L, const Mat& U) {
  PhiResult r;
  Mat w = U;
  const int steps = static_cast<int>(L.rows()) + 2;
  for (int j = 0; j <= steps; ++j) {
    r.ranks.push_back(static_cast<int>(rank(w)));
    w = L * w;
  }
  int last = static_cast<int>(r.ranks.size()) - 1;
  int v = last;
  while (v > 0 && r.ranks[v - 1] == r.ranks[last]) --v;
  r.value = v;
  r.ranks.resize(std::min<std::size_t>(r.ranks.size(), v + 2));
  return r;
}

void require_closed(const SyzygyGraph& g) {
  if (!g.closed())
    throw Error(ErrorKind::GraphTruncated, "syzygy closure not finite within depth " + std::to_string(g.caps().depth) +
                                               " / dimension " + std::to_string(g.caps().dim));
}

}  // namespace

PhiResult phi_T_dim(const SyzygyGraph& g) {
  require_closed(g);
  if (g.size() == 0) return {0, {0}};
  return stabilization(g.lattice_map(), Mat::identity(g.size(), Field()));
}

PhiResult phi_of_nodes(const SyzygyGraph& g, const std::vector<int>& nodes) {
  std::vector<int> cols;
  for (int n : nodes)
    if (std::find(cols.begin(), cols.end(), n) == cols.end()) cols.push_back(n);
  if (cols.empty()) return {0, {0}};
  std::vector<int> reach;
  std::vector<bool> seen(g.size(), false);
  for (int n : cols) {
    if (!g.closed_from(n))
      throw Error(ErrorKind::GraphTruncated, "syzygy closure not finite within depth " + std::to_string(g.caps().depth) +
                                                 " / dimension " + std::to_string(g.caps().dim));
    seen[n] = true;
    reach.push_back(n);
  }
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (const auto& e : g.edges(reach[i]))
      if (!seen[e.to]) {
        seen[e.to] = true;
        reach.push_back(e.to);
      }
  std::sort(reach.begin(), reach.end());
  const Mat full = g.lattice_map();
  Mat L = full.select_rows(std::vector<std::size_t>(reach.begin(), reach.end()))
              .select_cols(std::vector<std::size_t>(reach.begin(), reach.end()));
  Mat U(reach.size(), cols.size(), Field());
  for (std::size_t c = 0; c < cols.size(); ++c)
    U(std::lower_bound(reach.begin(), reach.end(), cols[c]) - reach.begin(), c) = Scalar(1);
  return stabilization(L, U);
}

PhiResult phi(const std::vector<Module>& ms, GraphCaps caps) {
  if (ms.empty()) return {0, {0}};
  SyzygyGraph g = syzygy_closure(ms.front().algebra(), ms, caps);
  std::vector<int> nodes;
  for (const auto& s : g.seed_summands())
    for (const auto& [n, mult] : s) nodes.push_back(n);
  return phi_of_nodes(g, nodes);
}

Module path_module(const AlgPtr& a, int b) {
  const BasisPath& q = a->basis()[b];
  if (q.length() == 0) throw Error(ErrorKind::Usage, "path module needs a path of positive length");
  Module P = projective(a, q.src);
  std::vector<Mat> rows;
  for (int w = 0; w < a->num_vertices(); ++w) {
    const auto& ps = a->paths(q.src, w);
    Mat r(0, ps.size(), a->field());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Path& arr = a->basis()[ps[i]].arrows;
      if (arr.size() >= q.arrows.size() && std::equal(q.arrows.begin(), q.arrows.end(), arr.begin())) {
        Mat e(1, ps.size(), a->field());
        e(0, i) = a->field().one();
        r = Mat::vstack(r, e);
      }
    }
    rows.push_back(r);
  }
  return submodule(P, rows).module;
}

namespace {

constexpr int kInfinite = -1;

// Projective dimension of every node from a closed region of the graph.
std::vector<int> node_pds(const SyzygyGraph& g) {
  const auto rec = g.recurrent();
  std::vector<int> pd(g.size(), -2);
  std::function<int(int)> go = [&](int i) -> int {
    if (pd[i] != -2) return pd[i];
    if (!g.closed_from(i))
      throw Error(ErrorKind::GraphTruncated, "syzygy closure of a path module not finite within caps");
    if (rec[i]) return pd[i] = kInfinite;
    int best = 1;
    for (const auto& e : g.edges(i)) {
      int s = go(e.to);
      if (s == kInfinite) return pd[i] = kInfinite;
      best = std::max(best, s + 1);
    }
    return pd[i] = best;
  };
  for (int i = 0; i < g.size(); ++i) go(i);
  return pd;
}

// u * v for basis paths, with non-composable products zero.
bool product_nonzero(const PathAlgebra& a, int u, int v) {
  if (a.basis()[u].tgt != a.basis()[v].src) return false;
  return !a.multiply({{u, Scalar(1)}}, {{v, Scalar(1)}}).empty();
}

}  // namespace

FindimResult monomial_findim(const AlgPtr& b, GraphCaps caps) {
  if (!b->is_monomial()) throw Error(ErrorKind::NotMonomial, "algebra " + b->name() + " is not monomial");
  const auto& basis = b->basis();
  const int nb = b->dim();
  SyzygyGraph g(b, caps);
  std::vector<SyzygyGraph::Summands> parts(nb);
  for (int i = 0; i < nb; ++i)
    if (basis[i].length() >= 1) parts[i] = g.add_seed(path_module(b, i), b->path_name(basis[i].arrows, basis[i].src));
  auto npd = node_pds(g);

  FindimResult res;
  res.pd.assign(nb, 0);
  bool any_finite = false;
  for (int i = 0; i < nb; ++i) {
    if (basis[i].length() == 0) continue;
    int d = 0;
    for (const auto& [n, mult] : parts[i]) {
      if (npd[n] == kInfinite) {
        d = kInfinite;
        break;
      }
      d = std::max(d, npd[n]);
    }
    res.pd[i] = d;
    if (d != kInfinite) {
      res.s = any_finite ? std::max(res.s, d) : d;
      any_finite = true;
    }
  }
  if (!any_finite) throw Error(ErrorKind::ConditionsFail, "no path module of finite projective dimension");

  // Arrow basis indices and whether their path modules have infinite pd.
  const int na = b->num_arrows();
  if (na > 64) throw Error(ErrorKind::ConditionsFail, "too many arrows for the annihilator search");
  std::vector<int> arrow_basis(na, -1);
  for (int i = 0; i < nb; ++i)
    if (basis[i].length() == 1) arrow_basis[basis[i].arrows[0]] = i;
  std::uint64_t infinite_arrows = 0;
  for (int a = 0; a < na; ++a)
    if (arrow_basis[a] >= 0 && res.pd[arrow_basis[a]] == kInfinite) infinite_arrows |= std::uint64_t(1) << a;

  for (int q = 0; q < nb; ++q) {
    if (basis[q].length() == 0 || res.pd[q] != res.s) continue;
    CriticalPath cp;
    cp.q = q;
    cp.r = basis[q].arrows.back();
    cp.p.assign(basis[q].arrows.begin(), basis[q].arrows.end() - 1);
    SVec pel = b->path_element(basis[q].src, cp.p);
    const int pb = pel.empty() ? -1 : pel.front().first;

    std::vector<int> gens;
    for (int u = 0; u < nb; ++u) {
      if (basis[u].length() == 0 || product_nonzero(*b, u, q)) continue;
      if (basis[u].length() > 1) {
        Path rest(basis[u].arrows.begin() + 1, basis[u].arrows.end());
        SVec ue = b->path_element(b->quiver().arrows[basis[u].arrows[0]].tgt, rest);
        if (ue.empty() || !product_nonzero(*b, ue.front().first, q)) continue;
      }
      gens.push_back(u);
      cp.left_annihilator.push_back(basis[u].arrows);
    }
    auto kills_p = [&](int u) { return pb < 0 || !product_nonzero(*b, u, pb); };
    if (std::all_of(gens.begin(), gens.end(), kills_p)) {
      cp.condition = 1;
      res.critical.push_back(cp);
      continue;
    }
    if (gens.size() > 20) throw Error(ErrorKind::ConditionsFail, "left annihilator has too many generators");
    std::vector<std::uint64_t> kill(gens.size(), 0), touch(gens.size(), 0);
    std::vector<bool> hits_p(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (int a = 0; a < na; ++a) {
        if (arrow_basis[a] < 0) continue;
        if (!product_nonzero(*b, gens[j], arrow_basis[a])) kill[j] |= std::uint64_t(1) << a;
        if (basis[gens[j]].tgt == b->quiver().arrows[a].src) touch[j] |= std::uint64_t(1) << a;
      }
      hits_p[j] = !kills_p(gens[j]);
    }
    const std::uint64_t subsets = std::uint64_t(1) << gens.size();
    for (std::uint64_t s = 1; s < subsets; ++s) {
      std::uint64_t killed = ~std::uint64_t(0), touched = 0;
      bool hit = false;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (s >> j & 1) {
          killed &= kill[j];
          touched |= touch[j];
          hit = hit || hits_p[j];
        }
      if (!hit) continue;
      std::uint64_t ok = killed & touched & infinite_arrows;
      if (!ok)
        throw Error(ErrorKind::ConditionsFail,
                    "critical path " + b->path_name(basis[q].arrows, basis[q].src) + " fails both conditions");
      if (s == subsets - 1 || cp.witness_arrows.empty()) {
        cp.witness_arrows.clear();
        for (int a = 0; a < na; ++a)
          if (ok >> a & 1) cp.witness_arrows.push_back(a);
      }
    }
    cp.condition = 2;
    res.critical.push_back(cp);
  }
  res.findim = res.s + 1;
  return res;
}

}  // namespace dl
