#include <doctest.h>

#include <random>

#include "delooping/error.hpp"
#include "support.hpp"

using namespace dl;
using dltest::fixture;
using dltest::fixture_module;
using dltest::uniserial;

namespace {

const char* const kAll[] = {"fixA", "fixMono", "fixKR-A", "fixKR-L", "fixCyl"};

using Dims = std::vector<int>;

}  // namespace

TEST_CASE("simples") {
  Module s5 = simple(fixture("fixMono"), 4);
  CHECK(s5.total_dim() == 1);
  CHECK(s5.dims() == Dims{0, 0, 0, 0, 1});
  for (const char* name : kAll) {
    AlgPtr b = fixture(name);
    for (int v = 0; v < b->num_vertices(); ++v) {
      Module s = simple(b, v);
      CHECK(top_dims(s) == s.dims());
      CHECK(is_isomorphic(structure(projective(b, v)).top.module, s));
    }
  }
  CHECK(simple(fixture("fixKR-L"), 1).dims() == Dims{0, 1});
}

TEST_CASE("projectives") {
  AlgPtr a = fixture("fixMono");
  CHECK(is_isomorphic(projective(a, 3), uniserial(a, "4", {"epsilon"})));
  CHECK(projective(a, 1).total_dim() == 7);
  CHECK(projective(fixture("fixKR-L"), 1).dims() == Dims{3, 1});
  CHECK(socle_dims(projective(a, 0)) == Dims{0, 0, 1, 0, 0});
  CHECK(radical_layers(projective(a, 1)) ==
        std::vector<Dims>{{0, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}});
}

TEST_CASE("injectives") {
  AlgPtr a = fixture("fixMono");
  Module i1 = injective(a, 0);
  CHECK(i1.total_dim() == 2);
  CHECK(is_isomorphic(i1, uniserial(a, "2", {"alpha2"})));
  for (const char* name : kAll) {
    AlgPtr b = fixture(name);
    for (int v = 0; v < b->num_vertices(); ++v)
      CHECK(is_isomorphic(structure(injective(b, v)).socle.module, simple(b, v)));
  }
  AlgPtr k = parse_algebra("vertices 1\n");
  CHECK(is_isomorphic(injective(k, 0), simple(k, 0)));
  CHECK(is_isomorphic(projective(k, 0), simple(k, 0)));
}

TEST_CASE("hom spaces") {
  AlgPtr a = fixture("fixMono");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(hom_dim(simple(a, i), simple(a, j)) == (i == j ? 1 : 0));
  CHECK(hom_dim(projective(a, 0), simple(a, 0)) == 1);
  for (const auto& f : hom_space(projective(a, 1), injective(a, 1))) CHECK(f.intertwines());
}

TEST_CASE("Yoneda: dim Hom(P_v, M) = dim M at v") {
  std::mt19937_64 rng(5);
  for (const char* name : kAll) {
    AlgPtr a = fixture(name);
    for (int t = 0; t < 4; ++t) {
      Module m = dltest::random_module(a, rng);
      for (int v = 0; v < a->num_vertices(); ++v) CHECK(hom_dim(projective(a, v), m) == m.dim(v));
    }
  }
}

TEST_CASE("duality") {
  std::mt19937_64 rng(7);
  for (const char* name : kAll) {
    AlgPtr a = fixture(name);
    for (int t = 0; t < 3; ++t) {
      Module m = dltest::random_module(a, rng);
      Module d = dual(m);
      CHECK(d.algebra() == a->opposite());
      CHECK(d.dims() == m.dims());
      CHECK(is_isomorphic(dual(d), m));
    }
    for (int v = 0; v < a->num_vertices(); ++v) {
      CHECK(is_isomorphic(dual(simple(a, v)), simple(a->opposite(), v)));
      CHECK(is_isomorphic(dual(projective(a->opposite(), v)), injective(a, v)));
    }
  }
  CHECK(dual(projective(fixture("fixMono")->opposite(), 4)).total_dim() == 4);
}

TEST_CASE("radical, top and socle") {
  AlgPtr a = fixture("fixMono");
  Structure p1 = structure(projective(a, 0));
  CHECK(is_isomorphic(p1.socle.module, simple(a, 2)));
  CHECK(p1.radical.module.dims() == Dims{0, 1, 1, 0, 0});
  Sum ss = direct_sum(simple(a, 0), simple(a, 3));
  CHECK(structure(ss.module).radical.module.is_zero());
  CHECK(structure(ss.module).top.module.dims() == ss.module.dims());
}

TEST_CASE("kernels and cokernels") {
  AlgPtr a = fixture("fixMono");
  Module p = projective(a, 1);
  CHECK(kernel(ModuleHom::identity(p)).module.is_zero());
  CHECK(is_isomorphic(cokernel(ModuleHom::zero(simple(a, 0), p)).module, p));
  AlgPtr l = fixture("fixKR-L");
  Module v2 = fixture_module("kr-l-2v.mod", l);
  Module s1 = simple(l, 0);
  auto homs = hom_space(s1, v2);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0].is_injective());
  CHECK(is_isomorphic(cokernel(homs[0]).module, simple(l, 1)));
}

TEST_CASE("projective covers") {
  AlgPtr a = fixture("fixMono");
  for (int v = 0; v < 5; ++v) {
    Cover c = projective_cover(projective(a, v));
    CHECK(c.eps.is_iso());
    CHECK(c.proj.verts == std::vector<int>{v});
  }
  Cover s1 = projective_cover(simple(a, 0));
  CHECK(s1.proj.verts == std::vector<int>{0});
  CHECK(s1.eps.is_surjective());
  AlgPtr l = fixture("fixKR-L");
  Cover c = projective_cover(fixture_module("kr-l-2v.mod", l));
  CHECK(c.proj.verts == std::vector<int>{1});
  CHECK(c.eps.is_surjective());
}

TEST_CASE("relation violations name the relation") {
  AlgPtr a = fixture("fixMono");
  try {
    parse_module("dims 1:1 2:1\nmap alpha1 [[1]]\nmap alpha2 [[1]]\n", a);
    FAIL("module accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(std::string(e.what()).find("alpha1*alpha2") != std::string::npos);
  }
  CHECK_THROWS_AS(Module(a, {1, 1, 0, 0, 0}, std::vector<Mat>(6)), Error);
}

TEST_CASE("base change gives an isomorphic module") {
  std::mt19937_64 rng(9);
  for (const char* name : kAll) {
    AlgPtr a = fixture(name);
    Module m = dltest::random_module(a, rng);
    BaseChange bc = change_basis(m, dltest::random_base_change(m, rng));
    CHECK(bc.iso.intertwines());
    CHECK(bc.iso.is_iso());
    CHECK(is_isomorphic(bc.module, m));
  }
}

TEST_CASE("maps from generators") {
  AlgPtr a = fixture("fixMono");
  Module m = uniserial(a, "2", {"alpha2", "alpha1"});
  ProjSum p = proj_sum(a, {1});
  Mat top(1, 2, a->field());
  top(0, 0) = a->field().one();
  ModuleHom f = hom_from_generators(p, m, {top});
  CHECK(f.intertwines());
  CHECK(f.is_surjective());
  CHECK(kernel(f).module.total_dim() == 7 - 3);
  ModuleHom g = f.then(ModuleHom::identity(m));
  CHECK(g.flatten() == f.flatten());
  CHECK((f - f).is_zero());
}
