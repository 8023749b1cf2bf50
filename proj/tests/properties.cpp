#include "properties.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "support.hpp"

namespace dltest {

using namespace dl;

namespace {

const std::vector<std::string> kAll{"fixA", "fixMono", "fixKR-A", "fixKR-L", "fixCyl"};

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok) {
    ++r.failed;
    if (r.first_failure.empty()) r.first_failure = what;
  }
}

std::vector<std::pair<std::string, int>> group_key(const Module& m) {
  std::vector<std::pair<std::string, int>> key;
  for (const auto& g : decompose(m).groups) key.push_back({g.rep.dim_vector(), g.multiplicity});
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << (checked - failed) << "/" << checked << " hold (need " << required << ")";
  if (!first_failure.empty()) os << "; first failure: " << first_failure;
  return os.str();
}

SuiteResult ext_shift_suite(int tuples, std::uint64_t seed) {
  SuiteResult r{"Ext shift", tuples};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shift(1, 2);
  for (int t = 0; t < tuples; ++t) {
    const std::string& name = kAll[t % kAll.size()];
    AlgPtr a = fixture(name);
    Module m = random_module(a, rng, 8);
    Module n = random_module(a, rng, 8);
    const int n1 = shift(rng), n2 = shift(rng);
    const int whole = ext_dim(m, n, n1 + n2);
    const bool ok = whole == ext_dim(syzygy(m, n2), n, n1) && whole == ext_dim(m, cosyzygy(n, n2), n1);
    record(r, ok, name + " " + m.dim_vector() + " " + n.dim_vector() + " n1=" + std::to_string(n1) +
                      " n2=" + std::to_string(n2));
  }
  return r;
}

SuiteResult simple_detects_id_suite(int modules, std::uint64_t seed) {
  SuiteResult r{"simple modules detect injective dimension", modules};
  std::mt19937_64 rng(seed);
  int positive = 0;
  for (int attempt = 0; r.checked < modules && attempt < 40 * modules; ++attempt) {
    const std::string& name = kAll[attempt % kAll.size()];
    AlgPtr a = fixture(name);
    Module x = attempt % 3 == 2 ? dual(random_module(a->opposite(), rng, 8)) : random_module(a, rng, 8);
    std::optional<int> id;
    Module y = x;
    for (int n = 0; n <= 6 && y.total_dim() <= 30; ++n) {
      if (is_projective(dual(y))) {
        id = n;
        break;
      }
      y = cosyzygy(y, 1);
    }
    if (!id) continue;
    if (inj_dim(x, 6) != id) {
      record(r, false, name + " " + x.dim_vector() + ": inj_dim disagrees with the cosyzygy count");
      continue;
    }
    if (*id > 0) ++positive;
    Module last = *id == 0 ? x : dual(raw_syzygy(dual(cosyzygy(x, *id - 1))).module);
    bool ok = true;
    bool some = false;
    for (int v = 0; v < a->num_vertices(); ++v) {
      Module s = simple(a, v);
      const int at = ext_dim(s, x, *id);
      if (at != 0) some = true;
      if (socle_dims(last)[v] > 0 && at == 0) ok = false;
      if (ext_dim(s, x, *id + 1) != 0) ok = false;
    }
    record(r, ok && some, name + " " + x.dim_vector() + " id=" + std::to_string(*id));
  }
  if (positive == 0) record(r, false, "no module of positive injective dimension sampled");
  return r;
}

SuiteResult rotate_suite(int sequences, std::uint64_t seed) {
  SuiteResult r{"rotated sequences are exact", sequences};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < sequences; ++t) {
    const std::string& name = kAll[t % kAll.size()];
    ShortExact s = random_ses(fixture(name), rng);
    ShortExact rot = rotate_ses(s);
    Sub om = raw_syzygy(s.c());
    const bool ok = chain_exact({rot.f, rot.g}) && rot.c().same_data(s.b()) && is_isomorphic(rot.a(), om.module) &&
                    rot.b().total_dim() == s.a().total_dim() + projective_cover(s.c()).proj.module.total_dim();
    record(r, ok, name + " " + s.a().dim_vector() + " -> " + s.b().dim_vector());
  }
  return r;
}

SuiteResult adjunction_suite(const std::vector<std::string>& algebras) {
  SuiteResult r{"mho is left adjoint to Omega", 1};
  for (const auto& name : algebras) {
    AlgPtr a = fixture(name);
    std::vector<Module> xs;
    for (const Module& m : tree_modules(a))
      if (!is_projective(m)) xs.push_back(m);
    std::vector<Module> mx, oy;
    for (const Module& x : xs) {
      mx.push_back(mho(x));
      oy.push_back(syzygy(x, 1));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const int lhs = stable_hom_dim(mx[i], xs[j]);
        const int rhs = stable_hom_dim(xs[i], oy[j]);
        record(r, lhs == rhs,
               name + " " + xs[i].dim_vector() + " x " + xs[j].dim_vector() + ": " + std::to_string(lhs) +
                   " vs " + std::to_string(rhs));
      }
  }
  return r;
}

SuiteResult base_change_suite(int changes, std::uint64_t seed) {
  SuiteResult r{"Krull-Schmidt data is basis independent", changes};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < changes; ++t) {
    const std::string& name = kAll[t % kAll.size()];
    AlgPtr a = fixture(name);
    Module m = random_module(a, rng);
    if (t % 2 == 1) m = direct_sum(m, random_module(a, rng, 6)).module;
    BaseChange bc = change_basis(m, random_base_change(m, rng));
    bool ok = bc.iso.is_iso() && group_key(m) == group_key(bc.module) && is_isomorphic(m, bc.module);
    for (const auto& g : decompose(m).groups) ok = ok && multiplicity(g.rep, bc.module) == g.multiplicity;
    record(r, ok, name + " " + m.dim_vector());
  }
  return r;
}

SuiteResult combinator_suite(std::uint64_t seed) {
  SuiteResult r{"combinator outputs verify at the prescribed bound", 20};
  auto check = [&](const DdellCertificate& c, int bound, int k, const std::string& what) {
    VerifyResult v = verify_ddell(c);
    record(r, v.confirmed() && c.bound == bound && c.k == k,
           what + ": " + to_string(v.status) + " bound " + std::to_string(c.bound) + " expected " +
               std::to_string(bound) + (v.message.empty() ? "" : " (" + v.message + ")"));
  };
  for (const std::string name : {"fixA", "fixMono"}) {
    AlgPtr a = fixture(name);
    std::vector<int> dells;
    for (int v = 0; v < a->num_vertices(); ++v) {
      Module s = simple(a, v);
      const int d = dell(s).value;
      check(trivial_certificate(s, 1, d), d, 1, name + " trivial S" + std::to_string(v + 1));
      DdellCertificate res = resolution_certificate(s, 1, d);
      check(res, d, 1, name + " resolution S" + std::to_string(v + 1));
      const int syz_bound = d == 0 ? 0 : (res.length() == d ? d : d - 1);
      check(cert_syzygy(res), syz_bound, 2, name + " syzygy of resolution S" + std::to_string(v + 1));
    }
  }
  std::mt19937_64 rng(seed);
  int extensions = 0, submodules = 0;
  for (int attempt = 0; attempt < 60 && (extensions < 6 || submodules < 6); ++attempt) {
    AlgPtr a = fixture(attempt % 2 ? "fixMono" : "fixA");
    ShortExact s = random_ses(a, rng);
    Bound da = dell(s.a()), db = dell(s.b()), dc = dell(s.c());
    if (extensions < 6 && da.tag == Tag::Exact && dc.tag == Tag::Exact) {
      DdellCertificate ca = trivial_certificate(s.a(), 1, da.value);
      DdellCertificate cc = resolution_certificate(s.c(), 1, dc.value);
      check(cert_extend(s, ca, cc), da.value + dc.value + 1, 1, a->name() + " extension " + s.b().dim_vector());
      ++extensions;
    }
    if (submodules < 6 && db.tag == Tag::Exact) {
      DdellCertificate cn = trivial_certificate(s.b(), 1, db.value);
      const int bound = is_projective(s.a()) ? 0 : db.value + 1;
      check(cert_submodule(s.f, cn), bound, 1, a->name() + " submodule " + s.a().dim_vector());
      ++submodules;
    }
  }
  CertificateFile kr = load_certificate(fixture_path("kr-s2.cert"));
  check(cert_syzygy(kr.cert), 1, 2, "syzygy of the local certificate");
  AlgPtr kra = fixture("fixKR-A");
  Module m2 = kr_module(kra, 2);
  Structure st = structure(m2);
  ShortExact ext{st.socle.incl, cokernel(st.socle.incl).proj};
  check(cert_extend(ext, trivial_certificate(ext.a(), 1, 0), trivial_certificate(ext.c(), 1, 0)), 1, 1,
        "M(2) from its socle sequence");
  return r;
}

}  // namespace dltest
