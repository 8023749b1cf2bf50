#pragma once

#include <optional>
#include <vector>

#include "delooping/module.hpp"

namespace dl {

struct EndRing {
  Module module;
  std::vector<ModuleHom> basis;
  Mat radical;  // rows: coordinates of a radical basis with respect to `basis`
  Mat flat;     // row i: entries of basis[i]
  int dim() const { return static_cast<int>(basis.size()); }
  int residue_dim() const { return dim() - static_cast<int>(radical.rows()); }
  // Coordinates of an endomorphism in `basis`.
  Mat coords(const ModuleHom& f) const;
  ModuleHom element(const Mat& coords) const;
  ModuleHom multiply(int i, int j) const { return basis[i].then(basis[j]); }
};

EndRing end_ring(const Module& m);
// Trace of an endomorphism as a linear map on the underlying space.
Scalar trace(const ModuleHom& f);

struct Piece {
  Module module;
  ModuleHom incl;  // piece -> m
  ModuleHom proj;  // m -> piece
};

struct Decomposition {
  std::vector<Piece> pieces;
  struct Group {
    Module rep;
    int multiplicity = 0;
    std::vector<int> pieces;
  };
  std::vector<Group> groups;
  int total_pieces() const { return static_cast<int>(pieces.size()); }
};

Decomposition decompose(const Module& m);
bool is_indecomposable(const Module& m);

struct IsoResult {
  bool iso = false;
  bool exact = true;  // false for a Monte Carlo negative
  std::optional<ModuleHom> witness;
};
IsoResult isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);

// Number of copies of the indecomposable x inside y.
int multiplicity(const Module& x, const Module& y);
bool is_summand(const Module& x, const Module& y);

bool is_projective(const Module& m);

struct Stripped {
  Module core;
  ModuleHom incl;  // core -> m
  ModuleHom proj;  // m -> core, with incl.then(proj) = id
  std::vector<int> projective_multiplicity;  // per vertex
};
Stripped strip_projectives(const Module& m);

// Non-projective indecomposable summands with multiplicities.
std::vector<std::pair<Module, int>> nonprojective_summands(const Module& m);

}  // namespace dl
