#include "delooping/algebra.hpp"

#include <algorithm>

#include "delooping/error.hpp"

namespace dl {

int Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

SVec svec_add(const SVec& a, const SVec& b, const Scalar& scale) {
  std::map<int, Scalar> acc;
  for (const auto& [i, c] : a) acc[i] += c;
  for (const auto& [i, c] : b) acc[i] += c * scale;
  SVec out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

namespace {

void check_quiver(const Quiver& q) {
  const int nv = static_cast<int>(q.vertices.size());
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j])
        throw Error(ErrorKind::InvalidArrow, "duplicate vertex " + q.vertices[i]);
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw Error(ErrorKind::InvalidArrow, "arrow " + a.name + " has an undeclared endpoint");
    for (std::size_t j = 0; j < i; ++j)
      if (q.arrows[j].name == a.name) throw Error(ErrorKind::InvalidArrow, "duplicate arrow " + a.name);
  }
}

// Source and target of a composable path; throws on a gap.
std::pair<int, int> path_ends(const Quiver& q, const Path& p) {
  for (int a : p)
    if (a < 0 || a >= static_cast<int>(q.arrows.size()))
      throw Error(ErrorKind::InvalidArrow, "relation uses an unknown arrow");
  for (std::size_t i = 1; i < p.size(); ++i)
    if (q.arrows[p[i - 1]].tgt != q.arrows[p[i]].src)
      throw Error(ErrorKind::InvalidArrow,
                  "arrows " + q.arrows[p[i - 1]].name + " and " + q.arrows[p[i]].name + " do not compose");
  return {q.arrows[p.front()].src, q.arrows[p.back()].tgt};
}

}  // namespace

AlgPtr PathAlgebra::build(const Quiver& q, const std::vector<Relation>& rels, Field f, int degree_cap,
                          std::string name) {
  check_quiver(q);
  std::shared_ptr<PathAlgebra> A(new PathAlgebra());
  A->name_ = std::move(name);
  A->quiver_ = q;
  A->field_ = f;
  A->degree_cap_ = degree_cap;
  const int nv = static_cast<int>(q.vertices.size());
  const int na = static_cast<int>(q.arrows.size());

  // Normalize and validate the relations.
  for (const Relation& r : rels) {
    Relation nr;
    for (const Term& t : r.terms) {
      if (t.path.empty()) throw Error(ErrorKind::NotAdmissible, "relation term without arrows");
      Scalar c = f.zero() + t.coef;
      if (!c.is_zero()) nr.terms.push_back({c, t.path});
    }
    if (nr.terms.empty()) continue;
    auto ends = path_ends(q, nr.terms.front().path);
    std::size_t len = nr.terms.front().path.size();
    for (const Term& t : nr.terms) {
      if (t.path.size() != len)
        throw Error(ErrorKind::NonGradedRelation, "relation mixes paths of lengths " + std::to_string(len) +
                                                      " and " + std::to_string(t.path.size()));
      if (path_ends(q, t.path) != ends)
        throw Error(ErrorKind::NonGradedRelation, "relation terms are not parallel");
    }
    if (len < 2) throw Error(ErrorKind::NotAdmissible, "relation of length " + std::to_string(len) + " < 2");
    A->relations_.push_back(std::move(nr));
  }

  // Degree 0.
  for (int v = 0; v < nv; ++v) {
    A->trivial_.push_back(static_cast<int>(A->basis_.size()));
    A->basis_.push_back({v, v, {}});
  }
  std::vector<std::vector<int>> by_degree(1);
  for (int v = 0; v < nv; ++v) by_degree[0].push_back(v);
  A->rmul_.assign(nv, std::vector<SVec>(na));

  // Right multiplication of an element (all of degree < d) by a path of arrows.
  auto chain = [&](SVec x, const Path& p, std::size_t upto) {
    for (std::size_t i = 0; i < upto && !x.empty(); ++i) {
      SVec next;
      for (const auto& [b, c] : x) next = svec_add(next, A->rmul_[b][p[i]], c);
      x = std::move(next);
    }
    return x;
  };

  int d = 1;
  for (;; ++d) {
    if (d > degree_cap)
      throw Error(ErrorKind::NotAdmissible,
                  "paths of length " + std::to_string(degree_cap) + " are not all zero; raise the degree cap");
    // Candidates (b, a) with b of degree d-1.
    std::vector<std::pair<int, int>> cand;
    std::map<std::pair<int, int>, int> cand_index;
    for (int b : by_degree[d - 1])
      for (int a = 0; a < na; ++a)
        if (q.arrows[a].src == A->basis_[b].tgt) {
          cand_index[{b, a}] = static_cast<int>(cand.size());
          cand.emplace_back(b, a);
        }
    const int nc = static_cast<int>(cand.size());
    if (nc == 0) break;
    // Columns are stored in reverse so that later candidates become pivots and
    // earlier (lexicographically smaller) paths survive as basis elements.
    auto col = [&](int ci) { return static_cast<std::size_t>(nc - 1 - ci); };
    std::vector<std::vector<Scalar>> rows;
    for (const Relation& r : A->relations_) {
      const int L = static_cast<int>(r.terms.front().path.size());
      if (L > d) continue;
      const int src = q.arrows[r.terms.front().path.front()].src;
      for (int b : by_degree[d - L]) {
        if (A->basis_[b].tgt != src) continue;
        std::vector<Scalar> row(nc, f.zero());
        bool nonzero = false;
        for (const Term& t : r.terms) {
          SVec x = chain(SVec{{b, f.one()}}, t.path, t.path.size() - 1);
          for (const auto& [u, c] : x) {
            auto it = cand_index.find({u, t.path.back()});
            if (it == cand_index.end()) continue;
            row[col(it->second)] += c * t.coef;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    Mat R = Mat::from_rows(rows, nc, f);
    Rref rr = rref(R);
    std::vector<int> pivot_row(nc, -1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) pivot_row[nc - 1 - static_cast<int>(rr.pivots[i])] = static_cast<int>(i);
    std::vector<int> new_index(nc, -1);
    by_degree.emplace_back();
    for (int ci = 0; ci < nc; ++ci) {
      if (pivot_row[ci] >= 0) continue;
      auto [b, a] = cand[ci];
      BasisPath bp{A->basis_[b].src, q.arrows[a].tgt, A->basis_[b].arrows};
      bp.arrows.push_back(a);
      new_index[ci] = static_cast<int>(A->basis_.size());
      by_degree[d].push_back(new_index[ci]);
      A->basis_.push_back(std::move(bp));
      A->rmul_.emplace_back(na);
    }
    for (int ci = 0; ci < nc; ++ci) {
      auto [b, a] = cand[ci];
      SVec val;
      if (pivot_row[ci] < 0) {
        val.emplace_back(new_index[ci], f.one());
      } else {
        for (int cj = 0; cj < nc; ++cj) {
          if (new_index[cj] < 0) continue;
          const Scalar& e = rr.reduced(pivot_row[ci], col(cj));
          if (!e.is_zero()) val.emplace_back(new_index[cj], -e);
        }
      }
      A->rmul_[b][a] = std::move(val);
    }
    if (by_degree[d].empty()) break;
  }
  A->nilpotency_ = d;

  A->paths_.assign(nv, std::vector<std::vector<int>>(nv));
  A->position_.assign(A->basis_.size(), 0);
  for (int b = 0; b < A->dim(); ++b) {
    auto& lst = A->paths_[A->basis_[b].src][A->basis_[b].tgt];
    A->position_[b] = static_cast<int>(lst.size());
    lst.push_back(b);
  }
  return A;
}

int PathAlgebra::paths_from_count(int v) const {
  int n = 0;
  for (int w = 0; w < num_vertices(); ++w) n += static_cast<int>(paths_[v][w].size());
  return n;
}

SVec PathAlgebra::path_element(int start, const Path& p) const {
  SVec x{{trivial_[start], field_.one()}};
  int cur = start;
  for (int a : p) {
    if (quiver_.arrows[a].src != cur) return {};
    cur = quiver_.arrows[a].tgt;
    SVec next;
    for (const auto& [b, c] : x) next = svec_add(next, rmul_[b][a], c);
    x = std::move(next);
    if (x.empty()) return x;
  }
  return x;
}

SVec PathAlgebra::multiply(const SVec& x, const SVec& y) const {
  SVec out;
  for (const auto& [j, cj] : y) {
    const BasisPath& bj = basis_[j];
    SVec part;
    for (const auto& [i, ci] : x)
      if (basis_[i].tgt == bj.src) part.emplace_back(i, ci * cj);
    for (int a : bj.arrows) {
      SVec next;
      for (const auto& [b, c] : part) next = svec_add(next, rmul_[b][a], c);
      part = std::move(next);
    }
    out = svec_add(out, part, field_.one());
  }
  return out;
}

bool PathAlgebra::is_monomial() const {
  for (const Relation& r : relations_)
    if (r.terms.size() != 1) return false;
  return true;
}

AlgPtr PathAlgebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (auto back = op_back_.lock()) return back;
  if (op_) return op_;
  Quiver q;
  q.vertices = quiver_.vertices;
  for (const Arrow& a : quiver_.arrows) q.arrows.push_back({a.name, a.tgt, a.src});
  std::vector<Relation> rels;
  for (const Relation& r : relations_) {
    Relation nr;
    for (const Term& t : r.terms) nr.terms.push_back({t.coef, Path(t.path.rbegin(), t.path.rend())});
    rels.push_back(nr);
  }
  std::string nm = name_.size() > 3 && name_.substr(name_.size() - 3) == "^op" ? name_.substr(0, name_.size() - 3)
                                                                              : name_ + "^op";
  auto op = build(q, rels, field_, degree_cap_, nm);
  op->op_back_ = weak_from_this();
  op_ = op;
  return op;
}

std::string PathAlgebra::path_name(const Path& p, int start) const {
  if (p.empty()) return "e" + quiver_.vertices[start];
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '*';
    s += quiver_.arrows[p[i]].name;
  }
  return s;
}

}  // namespace dl
