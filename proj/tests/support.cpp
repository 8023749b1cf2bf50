#include "support.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace dltest {

using namespace dl;

std::string fixture_path(const std::string& file) { return std::string(DL_FIXTURE_DIR) + "/" + file; }
std::string data_path(const std::string& file) { return std::string(DL_TEST_DATA_DIR) + "/" + file; }

AlgPtr fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, AlgPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  AlgPtr a = load_algebra(fixture_path(name + ".alg"));
  cache.emplace(name, a);
  return a;
}

Module fixture_module(const std::string& ref, const AlgPtr& a) {
  if (ref.size() >= 2 && (ref[0] == 'S' || ref[0] == 'P' || ref[0] == 'I') &&
      a->quiver().vertex_index(ref.substr(1)) >= 0)
    return resolve_module(ref, a);
  return resolve_module(fixture_path(ref), a);
}

Module kr_module(const AlgPtr& a, const mpq_class& alpha) {
  const Field f = a->field();
  auto unit = [&](const Scalar& s, int col) {
    Mat m(3, 3, f);
    m(0, col) = s;
    return m;
  };
  std::vector<Mat> maps(a->num_arrows());
  maps[a->quiver().arrow_index("x")] = unit(f(alpha), 1);
  maps[a->quiver().arrow_index("y")] = unit(f.one(), 1);
  maps[a->quiver().arrow_index("z")] = unit(f.one(), 2);
  return Module(a, {3}, maps);
}

Module uniserial(const AlgPtr& a, const std::string& start, const std::vector<std::string>& arrows) {
  const Quiver& q = a->quiver();
  std::vector<int> dims(a->num_vertices(), 0);
  std::vector<std::pair<int, int>> slots;  // (vertex, index at vertex)
  int v = q.vertex_index(start);
  slots.push_back({v, dims[v]++});
  std::vector<int> used;
  for (const auto& name : arrows) {
    int ai = q.arrow_index(name);
    used.push_back(ai);
    v = q.arrows[ai].tgt;
    slots.push_back({v, dims[v]++});
  }
  std::vector<Mat> maps;
  for (const Arrow& ar : q.arrows) maps.emplace_back(dims[ar.src], dims[ar.tgt], a->field());
  for (std::size_t i = 0; i < used.size(); ++i)
    maps[used[i]](slots[i].second, slots[i + 1].second) = a->field().one();
  return Module(a, dims, maps);
}

Mat random_matrix(std::size_t rows, std::size_t cols, Field f, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  Mat m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f(d(rng));
  return m;
}

std::vector<Mat> random_base_change(const Module& m, std::mt19937_64& rng) {
  std::vector<Mat> t;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const std::size_t n = m.dim(v);
    Mat x;
    do {
      x = random_matrix(n, n, m.field(), rng, 3);
    } while (rank(x) != n);
    t.push_back(x);
  }
  return t;
}

Sub random_submodule(const Module& m, std::mt19937_64& rng, int gens) {
  std::vector<int> support;
  for (int v = 0; v < m.num_vertices(); ++v)
    if (m.dim(v) > 0) support.push_back(v);
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  std::vector<int> verts;
  std::vector<Mat> rows;
  for (int i = 0; i < gens; ++i) {
    const int v = support[pick(rng)];
    Mat row;
    do {
      row = random_matrix(1, m.dim(v), m.field(), rng);
    } while (row.is_zero());
    verts.push_back(v);
    rows.push_back(row);
  }
  return image(hom_from_generators(proj_sum(m.algebra(), verts), m, rows));
}

Module random_module(const AlgPtr& a, std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> vert(0, a->num_vertices() - 1);
  std::uniform_int_distribution<int> coin(1, 2);
  for (;;) {
    std::vector<int> verts(coin(rng));
    for (int& v : verts) v = vert(rng);
    Module p = proj_sum(a, verts).module;
    Module m = coin(rng) == 1 && p.total_dim() > 1 ? cokernel(random_submodule(p, rng, coin(rng)).incl).module : p;
    if (!m.is_zero() && m.total_dim() <= max_dim) return m;
  }
}

ShortExact random_ses(const AlgPtr& a, std::mt19937_64& rng) {
  for (;;) {
    Module b = random_module(a, rng);
    Sub s = random_submodule(b, rng);
    if (s.module.total_dim() == b.total_dim()) continue;
    return {s.incl, cokernel(s.incl).proj};
  }
}

std::vector<Module> tree_modules(const AlgPtr& a) {
  std::vector<Module> out;
  auto add = [&](const Module& m) {
    for (const Piece& p : decompose(m).pieces) {
      if (p.module.is_zero()) continue;
      bool seen = false;
      for (const Module& o : out)
        if (o.dims() == p.module.dims() && is_isomorphic(o, p.module)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(p.module);
    }
  };
  auto quotients = [&](const AlgPtr& alg, bool take_dual) {
    for (int v = 0; v < alg->num_vertices(); ++v) {
      ProjSum pv = proj_sum(alg, {v});
      std::vector<int> paths;
      for (int w = 0; w < alg->num_vertices(); ++w)
        for (int b : alg->paths(v, w))
          if (alg->basis()[b].length() > 0) paths.push_back(b);
      if (paths.size() > 10) paths.resize(10);
      for (unsigned mask = 0; mask < (1u << paths.size()); ++mask) {
        std::vector<int> verts;
        std::vector<Mat> rows;
        for (std::size_t i = 0; i < paths.size(); ++i)
          if (mask >> i & 1) {
            const int w = alg->basis()[paths[i]].tgt;
            verts.push_back(w);
            rows.push_back(pv.element(w, {SVec{{paths[i], alg->field().one()}}}));
          }
        Module q = verts.empty() ? pv.module : cokernel(image(hom_from_generators(proj_sum(alg, verts), pv.module, rows)).incl).module;
        add(take_dual ? dual(q) : q);
      }
    }
  };
  quotients(a, false);
  quotients(a->opposite(), true);
  return out;
}

std::map<std::string, PhiOracle> phi_oracle() {
  std::map<std::string, PhiOracle> out;
  std::ifstream in(data_path("phi_oracle.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ') continue;
    std::istringstream is(line);
    std::string name, word;
    PhiOracle o;
    is >> name >> word >> o.nodes >> word;
    while (is >> word && word != "phi_T") o.ranks.push_back(std::stoi(word));
    is >> o.phi_t;
    out[name] = o;
  }
  return out;
}

bool chain_exact(const std::vector<ModuleHom>& maps) {
  if (maps.empty()) return true;
  const int nv = maps.front().src().num_vertices();
  for (int v = 0; v < nv; ++v) {
    if (rank(maps.front().block(v)) != static_cast<std::size_t>(maps.front().src().dim(v))) return false;
    if (rank(maps.back().block(v)) != static_cast<std::size_t>(maps.back().tgt().dim(v))) return false;
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
      const Mat& f = maps[i].block(v);
      const Mat& g = maps[i + 1].block(v);
      if (f.rows() > 0 && g.cols() > 0 && !(f * g).is_zero()) return false;
      if (rank(f) + rank(g) != static_cast<std::size_t>(maps[i].tgt().dim(v))) return false;
    }
  }
  return true;
}

}  // namespace dltest
