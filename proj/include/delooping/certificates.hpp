#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "delooping/homological.hpp"
#include "delooping/invariants.hpp"

namespace dl {

// Evidence for (i+k)-dell C_i <= m-i. With `over` set the check is the explicit
// summand test Omega^{m-i} C_i | Omega^{m+k} over; otherwise k_dell_le re-derives it.
struct Witness {
  Method method = Method::Auto;
  std::optional<Module> over;
};

// An exact sequence 0 -> C_n -> ... -> C_0 -> target -> 0 with per-term
// witnesses, claiming k-ddell target <= bound. maps[0]: C_0 -> target and
// maps[i]: C_i -> C_{i-1}. No terms at all is allowed for a projective target.
struct DdellCertificate {
  Module target;
  int k = 1;
  int bound = 0;
  std::vector<Module> terms;
  std::vector<ModuleHom> maps;
  std::vector<Witness> witnesses;
  std::string note;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

enum class CertStatus { Confirmed, NotExact, WitnessFails, WitnessUnknown, Malformed };
const char* to_string(CertStatus s);

struct VerifyResult {
  CertStatus status = CertStatus::Malformed;
  int index = -1;  // term index of the failure; -1 is the target
  int bound = -1;  // confirmed bound
  std::string message;
  bool confirmed() const { return status == CertStatus::Confirmed; }
};

VerifyResult verify_ddell(const DdellCertificate& c);

// [M] with the identity; valid when k-dell M <= bound.
DdellCertificate trivial_certificate(const Module& m, int k, int bound);
// P_0, ..., P_{n-1}, raw Omega^n M from the minimal resolution, with bound n.
DdellCertificate resolution_certificate(const Module& m, int k, int n);

// k-ddell B <= m1 + m2 + 1 from certificates for A and C.
DdellCertificate cert_extend(const ShortExact& ses, const DdellCertificate& cert_a, const DdellCertificate& cert_c);
// (k+1)-ddell of the raw syzygy Omega M.
DdellCertificate cert_syzygy(const DdellCertificate& cert);
// Certificate for a submodule from one for the ambient module.
DdellCertificate cert_submodule(const ModuleHom& inj, const DdellCertificate& cert_n);

struct SearchOptions {
  int bound_cap = 4;
  int depth_cap = 3;
  int surjections_per_candidate = 3;
  std::vector<Module> pool;
  // Nodes of a small syzygy closure of the simples join the pool.
  bool use_closure = true;
  GraphCaps closure_caps{4, 12};
};

struct DdellSearch {
  std::optional<DdellCertificate> cert;
  int lower_bound = 0;
  std::string lower_reason;
  Tag tag() const;
};

DdellSearch search_ddell(const Module& m, int k, const SearchOptions& opt = {});

struct SubddellSearch {
  Bound bound;
  std::optional<ModuleHom> embedding;  // m -> over
  std::string over_label;
};

// Minimizes dell N over pool modules N admitting an injection from m.
SubddellSearch search_subddell(const Module& m, const std::vector<Module>& pool = {}, int cap = 8,
                               bool use_closure = true, GraphCaps closure_caps = {4, 12});

// Submodule of m killed by every path of length j.
Sub socle_layer(const Module& m, int j);
Module injective_envelope(const Module& m);

// Hom samples: basis elements, then {-1,0,1} combinations, then seeded random
// integer combinations with doubling range, until `want` satisfy pred or the
// budget runs out.
std::vector<ModuleHom> sample_homs(const std::vector<ModuleHom>& basis, int want, int budget,
                                   const std::function<bool(const ModuleHom&)>& pred);

}  // namespace dl
