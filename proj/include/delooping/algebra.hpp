#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "delooping/matrix.hpp"

namespace dl {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;  // -1 when absent
  int arrow_index(const std::string& name) const;   // -1 when absent
};

// A path is a sequence of arrow indices; composition is left to right.
using Path = std::vector<int>;

struct Term {
  Scalar coef;
  Path path;
};

struct Relation {
  std::vector<Term> terms;
};

// Sparse combination of basis elements.
using SVec = std::vector<std::pair<int, Scalar>>;

struct BasisPath {
  int src = 0;
  int tgt = 0;
  Path arrows;  // empty for the trivial path e_src
  int length() const { return static_cast<int>(arrows.size()); }
};

class PathAlgebra;
using AlgPtr = std::shared_ptr<const PathAlgebra>;

// Finite-dimensional quotient KQ/I of a path algebra by a length-graded ideal.
class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
 public:
  static AlgPtr build(const Quiver& q, const std::vector<Relation>& rels, Field f,
                      int degree_cap = 32, std::string name = "");

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  Field field() const { return field_; }
  int degree_cap() const { return degree_cap_; }
  int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
  int num_arrows() const { return static_cast<int>(quiver_.arrows.size()); }
  int dim() const { return static_cast<int>(basis_.size()); }
  // Least N with every path of length N zero.
  int nilpotency() const { return nilpotency_; }
  const std::vector<BasisPath>& basis() const { return basis_; }
  int trivial(int v) const { return trivial_[v]; }
  // Basis indices of paths v -> w, in basis order.
  const std::vector<int>& paths(int v, int w) const { return paths_[v][w]; }
  // Position of basis element b inside paths(src(b), tgt(b)).
  int position(int b) const { return position_[b]; }
  int paths_from_count(int v) const;
  // b * arrow as a combination of basis elements.
  const SVec& rmul(int b, int arrow) const { return rmul_[b][arrow]; }

  SVec path_element(int start, const Path& p) const;
  SVec multiply(const SVec& x, const SVec& y) const;
  bool is_monomial() const;
  AlgPtr opposite() const;
  std::string path_name(const Path& p, int start) const;

 private:
  PathAlgebra() = default;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  int degree_cap_ = 32;
  int nilpotency_ = 1;
  std::vector<BasisPath> basis_;
  std::vector<int> trivial_;
  std::vector<std::vector<std::vector<int>>> paths_;
  std::vector<int> position_;
  std::vector<std::vector<SVec>> rmul_;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const PathAlgebra> op_;
  mutable std::weak_ptr<const PathAlgebra> op_back_;
};

SVec svec_add(const SVec& a, const SVec& b, const Scalar& scale);

}  // namespace dl
