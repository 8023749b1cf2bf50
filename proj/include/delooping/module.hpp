#pragma once

#include <memory>
#include <string>
#include <vector>

#include "delooping/algebra.hpp"

namespace dl {

// A right module given as a representation: one space per vertex and, for
// each arrow a: i -> j, a dims(i) x dims(j) matrix.
class Module {
 public:
  Module() = default;
  // Validates shapes and relations; throws ValidationError naming the relation.
  Module(AlgPtr alg, std::vector<int> dims, std::vector<Mat> maps);
  static Module zero(AlgPtr alg);

  const AlgPtr& algebra() const { return impl_->alg; }
  Field field() const { return impl_->alg->field(); }
  int num_vertices() const { return static_cast<int>(impl_->dims.size()); }
  int dim(int v) const { return impl_->dims[v]; }
  const std::vector<int>& dims() const { return impl_->dims; }
  int total_dim() const { return impl_->total; }
  bool is_zero() const { return impl_->total == 0; }
  const Mat& map(int arrow) const { return impl_->maps[arrow]; }
  const std::vector<Mat>& maps() const { return impl_->maps; }

  // Action of basis element b: dims(src b) x dims(tgt b).
  const Mat& act(int b) const;
  // Action of a combination of basis paths v -> w.
  Mat act(const SVec& x, int v, int w) const;

  // Minimal generators: generator k sits at vertex gen_vertex[k] with the
  // given 1 x dim row.
  const std::vector<int>& gen_vertices() const;
  const std::vector<Mat>& gen_rows() const;

  bool same_data(const Module& o) const;
  std::string dim_vector() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  void ensure_actions() const;
  void ensure_cover() const;

  struct Impl {
    AlgPtr alg;
    std::vector<int> dims;
    std::vector<Mat> maps;
    int total = 0;
    mutable std::once_flag act_once, cover_once;
    mutable std::vector<Mat> actions;
    mutable std::vector<int> gen_vertices;
    mutable std::vector<Mat> gen_rows;
  };
};

class ModuleHom {
 public:
  ModuleHom() = default;
  ModuleHom(Module src, Module tgt, std::vector<Mat> blocks);
  static ModuleHom zero(const Module& src, const Module& tgt);
  static ModuleHom identity(const Module& m);

  const Module& src() const { return src_; }
  const Module& tgt() const { return tgt_; }
  const Mat& block(int v) const { return blocks_[v]; }
  const std::vector<Mat>& blocks() const { return blocks_; }

  bool intertwines() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  int rank() const;

  // f.then(g) is g after f.
  ModuleHom then(const ModuleHom& g) const;
  ModuleHom operator+(const ModuleHom& o) const;
  ModuleHom operator-(const ModuleHom& o) const;
  ModuleHom scaled(const Scalar& s) const;
  // Entries of all blocks, flattened vertex by vertex.
  std::vector<Scalar> flatten() const;

 private:
  Module src_, tgt_;
  std::vector<Mat> blocks_;
};

// Direct sum of indecomposable projectives P_{verts[0]} + P_{verts[1]} + ...
struct ProjSum {
  Module module;
  std::vector<int> verts;
  std::vector<std::vector<int>> offsets;  // offsets[k][w]: start of summand k at vertex w

  // Row of the generator e_{v_k} of summand k.
  Mat generator(int k) const;
  // Component of a row at vertex w along summand k, as a combination of paths v_k -> w.
  SVec component(const Mat& row, int k, int w) const;
  // Row at vertex w from per-summand path combinations.
  Mat element(int w, const std::vector<SVec>& comps) const;
};

Module simple(const AlgPtr& a, int v);
Module projective(const AlgPtr& a, int v);
ProjSum proj_sum(const AlgPtr& a, const std::vector<int>& verts);
Module injective(const AlgPtr& a, int v);
Module dual(const Module& m);
ModuleHom dual(const ModuleHom& f);

// The map P -> target sending generator k to images[k] (a 1 x dim_target(v_k) row).
ModuleHom hom_from_generators(const ProjSum& p, const Module& target, const std::vector<Mat>& images);

struct Cover {
  ProjSum proj;
  ModuleHom eps;
};
Cover projective_cover(const Module& m);

std::vector<ModuleHom> hom_space(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);

struct Sub {
  Module module;
  ModuleHom incl;
};
struct Quot {
  Module module;
  ModuleHom proj;
};
struct Sum {
  Module module;
  std::vector<ModuleHom> incl, proj;
};

// Submodule spanned per vertex by the given rows; must be closed under the arrows.
Sub submodule(const Module& m, const std::vector<Mat>& rows);
Quot quotient(const Module& m, const std::vector<Mat>& rows);
Sum direct_sum(const std::vector<Module>& ms);
Sum direct_sum(const Module& a, const Module& b);
Sub kernel(const ModuleHom& f);
Sub image(const ModuleHom& f);
Quot cokernel(const ModuleHom& f);

struct Structure {
  Sub radical;
  Quot top;
  Sub socle;
};
Structure structure(const Module& m);
std::vector<Mat> radical_rows(const Module& m);
std::vector<int> top_dims(const Module& m);
std::vector<int> socle_dims(const Module& m);
// Dimension vectors of rad^i m / rad^{i+1} m until zero.
std::vector<std::vector<int>> radical_layers(const Module& m);

// New module with basis rows t[v] at each vertex, plus the iso from m.
struct BaseChange {
  Module module;
  ModuleHom iso;  // m -> module
};
BaseChange change_basis(const Module& m, const std::vector<Mat>& t);

}  // namespace dl
