#include <doctest.h>

#include "delooping/error.hpp"
#include "support.hpp"

using namespace dl;
using dltest::fixture;
using dltest::fixture_module;
using dltest::fixture_path;
using dltest::kr_module;
using dltest::uniserial;

namespace {

ShortExact socle_sequence(const Module& m) {
  Structure st = structure(m);
  return {st.socle.incl, cokernel(st.socle.incl).proj};
}

ShortExact mono_sequence() {
  AlgPtr a = fixture("fixMono");
  Module u = uniserial(a, "1", {"alpha1"});
  return socle_sequence(u);
}

}  // namespace

TEST_CASE("checked-in certificates verify") {
  for (const char* file : {"kr-s2.cert", "mono-s1.cert"}) {
    CertificateFile cf = load_certificate(fixture_path(file));
    VerifyResult r = verify_ddell(cf.cert);
    CHECK_MESSAGE(r.confirmed(), file, ": ", r.message);
    CHECK(r.bound == 1);
    CHECK(cf.cert.length() == 1);
  }
}

TEST_CASE("printing and parsing a certificate round-trips") {
  for (const char* file : {"kr-s2.cert", "mono-s1.cert"}) {
    CertificateFile cf = load_certificate(fixture_path(file));
    std::string text = print_certificate(cf.cert, cf.algebra_path);
    CertificateFile again = parse_certificate(text, cf.algebra);
    CHECK(same_certificate(again.cert, cf.cert));
    CHECK(verify_ddell(again.cert).status == verify_ddell(cf.cert).status);
    CHECK(print_certificate(again.cert, cf.algebra_path) == text);
  }
  AlgPtr a = fixture("fixMono");
  DdellCertificate r = resolution_certificate(simple(a, 0), 1, 2);
  r.witnesses[1].over = simple(a, 1);
  CertificateFile back = parse_certificate(print_certificate(r), a);
  CHECK(same_certificate(back.cert, r));
}

TEST_CASE("a (k+1)-certificate is also a k-certificate") {
  AlgPtr a = fixture("fixA");
  DdellCertificate c = trivial_certificate(simple(a, 1), 3, 1);
  REQUIRE(verify_ddell(c).confirmed());
  for (int k = 2; k >= 1; --k) {
    c.k = k;
    CHECK(verify_ddell(c).confirmed());
  }
}

TEST_CASE("rejections") {
  CertificateFile cf = load_certificate(fixture_path("mono-s1.cert"));
  DdellCertificate broken = cf.cert;
  broken.maps[1] = ModuleHom::zero(broken.maps[1].src(), broken.maps[1].tgt());
  CHECK(verify_ddell(broken).status == CertStatus::NotExact);

  DdellCertificate tight = cf.cert;
  tight.bound = 0;
  CHECK(verify_ddell(tight).status == CertStatus::Malformed);

  AlgPtr a = fixture("fixMono");
  VerifyResult w = verify_ddell(trivial_certificate(simple(a, 0), 1, 1));
  CHECK(w.status == CertStatus::WitnessFails);
  CHECK(w.index == 0);

  DdellCertificate missing = cf.cert;
  missing.witnesses.pop_back();
  CHECK(verify_ddell(missing).status == CertStatus::Malformed);

  DdellCertificate empty = cf.cert;
  empty.terms.clear();
  empty.maps.clear();
  empty.witnesses.clear();
  CHECK(verify_ddell(empty).status == CertStatus::Malformed);

  DdellCertificate over = cf.cert;
  over.witnesses[1].over = simple(cf.cert.target.algebra(), 4);
  CHECK(verify_ddell(over).status == CertStatus::WitnessFails);
}

TEST_CASE("resolution certificates") {
  AlgPtr a = fixture("fixMono");
  for (int v = 0; v < 5; ++v) {
    Module s = simple(a, v);
    const int d = dell(s).value;
    DdellCertificate c = resolution_certificate(s, 1, d);
    VerifyResult r = verify_ddell(c);
    CHECK(r.confirmed());
    CHECK(c.bound == d);
  }
}

TEST_CASE("extension with a zero submodule returns the quotient certificate") {
  AlgPtr a = fixture("fixMono");
  Module s1 = simple(a, 0);
  DdellCertificate cc = resolution_certificate(s1, 1, 2);
  ShortExact ses{ModuleHom::zero(Module::zero(a), s1), ModuleHom::identity(s1)};
  DdellCertificate out = cert_extend(ses, trivial_certificate(Module::zero(a), 1, 0), cc);
  CHECK(same_certificate(out, cc));
}

TEST_CASE("splicing two resolutions") {
  ShortExact ses = mono_sequence();
  const int da = dell(ses.a()).value, dc = dell(ses.c()).value;
  DdellCertificate out = cert_extend(ses, resolution_certificate(ses.a(), 1, da), resolution_certificate(ses.c(), 1, dc));
  CHECK(out.bound == da + dc + 1);
  CHECK(verify_ddell(out).confirmed());
  CHECK(out.target.same_data(ses.b()));
}

TEST_CASE("extension certificate for M(2) over the local algebra") {
  AlgPtr a = fixture("fixKR-A");
  Module m2 = kr_module(a, 2);
  ShortExact ses = socle_sequence(m2);
  CHECK(ses.a().total_dim() == 2);
  DdellCertificate c =
      cert_extend(ses, trivial_certificate(ses.a(), 1, 0), trivial_certificate(ses.c(), 1, 0));
  CHECK(c.bound == 1);
  CHECK(verify_ddell(c).confirmed());
  CHECK(k_dell_le(m2, 1, 0) == Truth::False);
}

TEST_CASE("syzygy certificates") {
  AlgPtr a = fixture("fixKR-A");
  ModuleHom s_in_a = hom_space(simple(a, 0), projective(a, 0)).at(0);
  Module m = cokernel(s_in_a).module;
  CHECK(is_isomorphic(syzygy(m, 1), simple(a, 0)));
  DdellCertificate c = trivial_certificate(m, 1, 1);
  REQUIRE(verify_ddell(c).confirmed());
  DdellCertificate s = cert_syzygy(c);
  CHECK(s.k == 2);
  CHECK(is_isomorphic(s.target, simple(a, 0)));
  CHECK(verify_ddell(s).confirmed());

  AlgPtr mono = fixture("fixMono");
  DdellCertificate r = resolution_certificate(simple(mono, 0), 1, 2);
  DdellCertificate rs = cert_syzygy(r);
  CHECK(rs.bound == 2);
  CHECK(rs.length() == 2);
  CHECK(verify_ddell(rs).confirmed());

  DdellCertificate z = cert_syzygy(trivial_certificate(simple(mono, 1), 1, 0));
  CHECK(z.bound == 0);
  CHECK(z.k == 2);
  CHECK(verify_ddell(z).confirmed());
}

TEST_CASE("submodule certificates") {
  AlgPtr a = fixture("fixMono");
  Module i1 = injective(a, 0);
  ModuleHom inj = hom_space(simple(a, 0), i1).at(0);
  const int d = dell(i1).value;
  DdellCertificate cn = trivial_certificate(i1, 1, d);
  REQUIRE(verify_ddell(cn).confirmed());
  DdellCertificate c = cert_submodule(inj, cn);
  CHECK(c.target.same_data(simple(a, 0)));
  CHECK(c.bound == d + 1);
  CHECK(verify_ddell(c).confirmed());

  DdellCertificate same = cert_submodule(ModuleHom::identity(i1), cn);
  CHECK(same.bound == cn.bound);
  CHECK(verify_ddell(same).confirmed());

  Module p4 = projective(a, 3);
  ModuleHom into = hom_space(p4, projective(a, 2)).at(0);
  REQUIRE(into.is_injective());
  DdellCertificate pc = cert_submodule(into, trivial_certificate(projective(a, 2), 1, 0));
  CHECK(pc.bound == 0);
  CHECK(pc.terms.empty());
  CHECK(verify_ddell(pc).confirmed());
}

TEST_CASE("searching for ddell certificates") {
  AlgPtr a = fixture("fixMono");
  DdellSearch s1 = search_ddell(simple(a, 0), 1);
  REQUIRE(s1.cert);
  CHECK(s1.cert->bound == 1);
  CHECK(s1.lower_bound == 1);
  CHECK(s1.tag() == Tag::Exact);
  REQUIRE(s1.cert->terms.size() == 2);
  CHECK(is_isomorphic(s1.cert->terms[0], uniserial(a, "1", {"alpha1"})));
  CHECK(is_isomorphic(s1.cert->terms[1], simple(a, 1)));
  CHECK(verify_ddell(*s1.cert).confirmed());

  DdellSearch p = search_ddell(projective(a, 1), 1);
  REQUIRE(p.cert);
  CHECK(p.cert->terms.empty());
  CHECK(p.cert->bound == 0);

  AlgPtr l = fixture("fixKR-L");
  DdellSearch s2 = search_ddell(simple(l, 1), 1);
  REQUIRE(s2.cert);
  CHECK(s2.cert->bound == 1);
  CHECK(s2.lower_bound == 1);
  CHECK(verify_ddell(*s2.cert).confirmed());
}

TEST_CASE("searching for sub-ddell") {
  AlgPtr a = fixture("fixMono");
  SubddellSearch s = search_subddell(simple(a, 0));
  CHECK(s.bound.value == 1);
  REQUIRE(s.embedding);
  CHECK(is_isomorphic(s.embedding->tgt(), uniserial(a, "2", {"alpha2"})));
  CHECK(s.embedding->is_injective());

  AlgPtr a2 = parse_algebra("vertices 1 2\narrow a: 1 -> 2\n");
  Module s1 = simple(a2, 0);
  CHECK(is_isomorphic(injective(a2, 0), s1));
  CHECK(search_subddell(s1).bound.value == dell(s1).value);

  AlgPtr l = fixture("fixKR-L");
  CHECK(search_subddell(simple(l, 1), {}, 2).bound.tag == Tag::ExceedsCap);
}

TEST_CASE("socle layers and injective envelopes") {
  AlgPtr a = fixture("fixMono");
  Module p2 = projective(a, 1);
  CHECK(socle_layer(p2, 1).module.dims() == socle_dims(p2));
  CHECK(socle_layer(p2, 4).module.total_dim() == p2.total_dim());
  Module env = injective_envelope(simple(a, 0));
  CHECK(is_isomorphic(env, injective(a, 0)));
}
