#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "delooping/certificates.hpp"
#include "delooping/decomp.hpp"
#include "delooping/homological.hpp"
#include "delooping/invariants.hpp"
#include "delooping/io.hpp"
#include "delooping/module.hpp"

namespace dltest {

std::string fixture_path(const std::string& file);
std::string data_path(const std::string& file);

// Fixture algebra by name, loaded once.
dl::AlgPtr fixture(const std::string& name);
// S<v>, P<v>, I<v> or a module file inside the fixture directory.
dl::Module fixture_module(const std::string& ref, const dl::AlgPtr& a);

// M(alpha) over the six-dimensional local algebra: x, y, z send the top to
// alpha v', v', v''.
dl::Module kr_module(const dl::AlgPtr& a, const mpq_class& alpha);
// Uniserial module along a path of arrow names starting at vertex `start`.
dl::Module uniserial(const dl::AlgPtr& a, const std::string& start, const std::vector<std::string>& arrows);

dl::Mat random_matrix(std::size_t rows, std::size_t cols, dl::Field f, std::mt19937_64& rng, int range = 2);
// Invertible per-vertex matrices for m.
std::vector<dl::Mat> random_base_change(const dl::Module& m, std::mt19937_64& rng);
// Inclusion of the submodule of m generated by `gens` random elements.
dl::Sub random_submodule(const dl::Module& m, std::mt19937_64& rng, int gens = 1);
// Nonzero quotient of a sum of one or two indecomposable projectives.
dl::Module random_module(const dl::AlgPtr& a, std::mt19937_64& rng, int max_dim = 12);
// 0 -> A -> B -> C -> 0 from a random submodule A of a random module B.
dl::ShortExact random_ses(const dl::AlgPtr& a, std::mt19937_64& rng);

// Indecomposable modules, one per isomorphism class, among the summands of
// P_v / (submodule generated by a set of basis paths) and the duals of the
// same construction over the opposite algebra.
std::vector<dl::Module> tree_modules(const dl::AlgPtr& a);

struct PhiOracle {
  int nodes = 0;
  std::vector<int> ranks;
  int phi_t = 0;
};
// Checked-in output of scripts/phi_oracle.py, keyed by algebra name.
std::map<std::string, PhiOracle> phi_oracle();

// Rank-based exactness of a chain of maps, computed block by block.
bool chain_exact(const std::vector<dl::ModuleHom>& maps);

}  // namespace dltest
