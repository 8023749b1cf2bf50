#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "delooping/module.hpp"

namespace dl {

struct GraphCaps {
  int depth = 12;
  int dim = 60;
};

// Indecomposable non-projective modules reachable from the seeds under
// M -> summands of Omega M, one representative per isomorphism class.
class SyzygyGraph {
 public:
  struct Node {
    Module rep;
    int depth = 0;
    bool expanded = false;
    bool over_dim = false;
  };
  struct Edge {
    int to = 0;
    int mult = 0;
  };
  using Summands = std::vector<std::pair<int, int>>;  // (node, multiplicity)

  SyzygyGraph(AlgPtr a, GraphCaps caps = {});

  const AlgPtr& algebra() const { return alg_; }
  const GraphCaps& caps() const { return caps_; }
  // Adds a seed, expands breadth-first and returns its summands.
  Summands add_seed(const Module& m, const std::string& label = "");
  // Node isomorphic to the indecomposable m, or -1.
  int find(const Module& m) const;
  // Node for the indecomposable non-projective m, created (unexpanded) if needed.
  int find_or_add(const Module& m, int depth);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_[i]; }
  const std::vector<Edge>& edges(int i) const { return edges_[i]; }
  const std::vector<std::string>& seed_labels() const { return seed_labels_; }
  const std::vector<Summands>& seed_summands() const { return seed_summands_; }

  // Some node was left unexpanded by the depth cap.
  bool depth_capped() const;
  // Some node exceeds the dimension cap.
  bool dim_capped() const;
  bool closed() const;
  // Seeds whose closure contains node i.
  std::vector<int> provenance(int i) const;
  // Nodes that end walks of length exactly len (walks run through expanded nodes).
  std::vector<bool> walk_endpoints(int len) const;
  // Nodes on or downstream of a directed cycle.
  std::vector<bool> recurrent() const;
  // Every node reachable from i has been expanded.
  bool closed_from(int i) const;
  // Integer matrix with L(i, j) = multiplicity of node i in Omega(node j).
  Mat lattice_map() const;

 private:
  void expand();

  AlgPtr alg_;
  GraphCaps caps_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::string> seed_labels_;
  std::vector<Summands> seed_summands_;
  std::vector<int> queue_;
};

SyzygyGraph syzygy_closure(const AlgPtr& a, const std::vector<Module>& seeds, GraphCaps caps = {});
// Closure seeded by all simple modules.
SyzygyGraph simple_closure(const AlgPtr& a, GraphCaps caps = {});

// On or downstream of a cycle, hence a summand of syzygies of every order.
// Throws GraphTruncated when the answer depends on unexpanded nodes.
bool infinitely_deloopable(int node, const SyzygyGraph& g);

enum class Truth { False, True, Unknown };
enum class Method { Auto, Adjoint, Pool };
enum class Tag { Exact, UpperBound, ExceedsCap, Unknown };

const char* to_string(Truth t);
const char* to_string(Method m);
const char* to_string(Tag t);

struct Bound {
  Tag tag = Tag::Unknown;
  int value = -1;  // meaningful for Exact and UpperBound
  std::string method;
  std::string str() const;
};

// Combined bound of a supremum.
Bound sup_bound(const std::vector<Bound>& bs);

struct AdjunctionGate {
  bool passed = false;
  int pairs = 0;
  std::string failure;
};

// Per-algebra state for delooping-level questions: the syzygy closure of the
// simples together with registered pool modules.
class DellEngine {
 public:
  explicit DellEngine(AlgPtr a, GraphCaps caps = {});

  const AlgPtr& algebra() const { return alg_; }
  const GraphCaps& caps() const { return caps_; }
  // Built on first use.
  SyzygyGraph& graph();
  void add_pool(const Module& m, const std::string& label = "");

  // Checks dim stHom(mho X, Y) = dim stHom(X, Omega Y) on small closure nodes.
  const AdjunctionGate& adjunction_gate();

  // k-dell m <= n? Adjoint answers exactly (k = 1); pool answers True or Unknown.
  // Auto with k > 1 uses the adjoint test for the shift n + k, or the pool
  // first once the closure graph exists.
  Truth k_dell_le(const Module& m, int k, int n, Method method = Method::Auto);
  Bound k_dell(const Module& m, int k, int cap = 8, Method method = Method::Auto);
  Bound dell_algebra(int k, int cap = 8, Method method = Method::Auto);

 private:
  // Omega^n m a summand of Omega^shift mho^shift Omega^n m.
  bool adjoint_le(const Module& m, int n, int shift);
  Truth pool_le(const Module& m, int k, int n);

  AlgPtr alg_;
  GraphCaps caps_;
  std::optional<SyzygyGraph> graph_;
  std::optional<AdjunctionGate> gate_;
};

// Module-level entry points; they share one engine per algebra.
DellEngine& engine_for(const AlgPtr& a);
// Replaces the shared engine of a with a fresh one using the given caps.
void set_engine_caps(const AlgPtr& a, GraphCaps caps);
Truth k_dell_le(const Module& m, int k, int n, Method method = Method::Auto);
Bound k_dell(const Module& m, int k, int cap = 8, Method method = Method::Auto);
Bound dell(const Module& m, int cap = 8);

struct PhiResult {
  int value = 0;
  std::vector<int> ranks;  // rank of L^n U for n = 0, 1, ...
};

// Stabilization index of L^n on the lattice of all closure nodes.
PhiResult phi_T_dim(const SyzygyGraph& g);
// Stabilization index of L^n on the span of the given nodes; everything
// reachable from them must be expanded.
PhiResult phi_of_nodes(const SyzygyGraph& g, const std::vector<int>& nodes);
// Stabilization index of L^n on the span of the summands of ms.
PhiResult phi(const std::vector<Module>& ms, GraphCaps caps = {});

// The path module qB for a nonzero basis path q of positive length.
Module path_module(const AlgPtr& a, int basis_index);

struct CriticalPath {
  int q = -1;  // basis index
  Path p;      // q = p r with r the last arrow
  int r = -1;
  std::vector<Path> left_annihilator;  // minimal generators
  int condition = 0;                   // 1 or 2
  std::vector<int> witness_arrows;     // arrows used for condition 2
};

struct FindimResult {
  int s = 0;
  int findim = 0;
  std::vector<int> pd;  // per basis path of length >= 1, -1 for infinite
  std::vector<CriticalPath> critical;
};

// Both conditions of the monomial Findim criterion for the right modules qB.
FindimResult monomial_findim(const AlgPtr& b, GraphCaps caps = {});

}  // namespace dl
