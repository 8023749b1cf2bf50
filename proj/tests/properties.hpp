#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dltest {

struct SuiteResult {
  std::string name;
  int required = 0;
  int checked = 0;
  int failed = 0;
  std::string first_failure;
  bool passed() const { return failed == 0 && checked >= required; }
  std::string summary() const;
};

// Ext^{a+b}(M, N) = Ext^a(Omega^b M, N) on random tuples over all fixtures.
SuiteResult ext_shift_suite(int tuples, std::uint64_t seed);
// id M <= n iff Ext^{n+1}(S, M) = 0 for every simple S, on modules of finite id.
SuiteResult simple_detects_id_suite(int modules, std::uint64_t seed);
// Rotated random short exact sequences are exact with the expected terms.
SuiteResult rotate_suite(int sequences, std::uint64_t seed);
// dim stHom(mho X, Y) = dim stHom(X, Omega Y) on pairs of indecomposables.
SuiteResult adjunction_suite(const std::vector<std::string>& algebras);
// Decompositions, multiplicities and isomorphism survive random base changes.
SuiteResult base_change_suite(int changes, std::uint64_t seed);
// Every certificate combinator output verifies with the prescribed bound.
SuiteResult combinator_suite(std::uint64_t seed);

}  // namespace dltest
