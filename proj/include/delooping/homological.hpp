#pragma once

#include <optional>
#include <vector>

#include "delooping/decomp.hpp"
#include "delooping/module.hpp"

namespace dl {

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0. d[i][j] is the
// image of generator j of P[i+1] in P[i], a row at that generator's vertex.
struct Resolution {
  Module target;
  std::vector<ProjSum> P;
  std::vector<std::vector<Mat>> d;
  ModuleHom eps;
  std::vector<Sub> kernels;  // kernels[i] = ker(P_i -> P_{i-1}), i.e. the raw (i+1)-st syzygy
};

// Resolution with P_0 .. P_len.
Resolution resolve(const Module& m, int len);

struct ProjectivePresentation {
  ProjSum p1, p0;
  ModuleHom d1, eps;
};
ProjectivePresentation presentation(const Module& m);

// Kernel of the projective cover, projective summands kept.
Sub raw_syzygy(const Module& m);
Module syzygy(const Module& m, int n = 1);
Module cosyzygy(const Module& m, int n = 1);

// Least n <= cap with the n-th syzygy projective; empty when the cap is exceeded.
std::optional<int> proj_dim(const Module& m, int cap = 20);
std::optional<int> inj_dim(const Module& m, int cap = 20);

int ext_dim(const Module& m, const Module& x, int n);

Module transpose(const Module& m);
int stable_hom_dim(const Module& m, const Module& n);
Module mho(const Module& m);

struct ShortExact {
  ModuleHom f;  // A -> B
  ModuleHom g;  // B -> C
  const Module& a() const { return f.src(); }
  const Module& b() const { return f.tgt(); }
  const Module& c() const { return g.tgt(); }
};

bool is_exact(const ShortExact& s);
// Exactness of a composable chain of maps at every interior joint, with
// injectivity of the first and surjectivity of the last map.
// Returns the index of the first failing joint, or -1.
int exactness_failure(const std::vector<ModuleHom>& maps);

// 0 -> Omega C -> A + P_C -> B -> 0 built from 0 -> A -> B -> C -> 0.
ShortExact rotate_ses(const ShortExact& s);

}  // namespace dl
