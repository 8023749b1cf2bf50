#include <doctest.h>

#include "delooping/error.hpp"
#include "support.hpp"

using namespace dl;
using dltest::fixture;
using dltest::uniserial;

namespace {

int node_of(const SyzygyGraph& g, const Module& m) { return g.find(m); }

int path_index(const AlgPtr& a, const std::string& arrow) {
  const int ai = a->quiver().arrow_index(arrow);
  for (int b = 0; b < a->dim(); ++b)
    if (a->basis()[b].arrows == Path{ai}) return b;
  return -1;
}

}  // namespace

TEST_CASE("fixMono syzygy closure") {
  AlgPtr a = fixture("fixMono");
  SyzygyGraph g = simple_closure(a);
  CHECK(g.closed());
  CHECK(g.size() == dltest::phi_oracle().at("fixMono").nodes);
  CHECK(node_of(g, simple(a, 1)) >= 0);
  CHECK(node_of(g, uniserial(a, "1", {"alpha1"})) >= 0);
  CHECK(node_of(g, uniserial(a, "2", {"gamma"})) >= 0);
  CHECK(node_of(g, simple(a, 4)) == -1);
  CHECK(g.seed_labels().size() == 5);
}

TEST_CASE("fixCyl closure is truncated by the dimension cap") {
  AlgPtr a = fixture("fixCyl");
  SyzygyGraph g = syzygy_closure(a, {simple(a, 1)}, {12, 12});
  CHECK_FALSE(g.closed());
  CHECK(g.dim_capped());
  int widest = 0;
  for (const auto& n : g.nodes()) widest = std::max(widest, n.rep.total_dim());
  CHECK(widest > 12);
}

TEST_CASE("semisimple algebra has an empty closure") {
  AlgPtr k = parse_algebra("vertices 1 2\n");
  SyzygyGraph g = simple_closure(k);
  CHECK(g.size() == 0);
  CHECK(g.closed());
  CHECK(phi_T_dim(g).value == 0);
}

TEST_CASE("infinitely deloopable modules") {
  AlgPtr fa = fixture("fixA");
  SyzygyGraph ga = simple_closure(fa);
  CHECK(infinitely_deloopable(node_of(ga, simple(fa, 2)), ga));
  CHECK_FALSE(infinitely_deloopable(node_of(ga, simple(fa, 0)), ga));
  AlgPtr a = fixture("fixMono");
  SyzygyGraph g = simple_closure(a);
  CHECK(infinitely_deloopable(node_of(g, simple(a, 1)), g));
  CHECK(infinitely_deloopable(node_of(g, uniserial(a, "1", {"alpha1"})), g));
  CHECK_FALSE(infinitely_deloopable(node_of(g, uniserial(a, "2", {"gamma"})), g));
  CHECK_FALSE(infinitely_deloopable(node_of(g, simple(a, 0)), g));
  AlgPtr cyl = fixture("fixCyl");
  SyzygyGraph gc = syzygy_closure(cyl, {simple(cyl, 1)}, {3, 12});
  CHECK_THROWS_AS(infinitely_deloopable(0, gc), Error);
}

TEST_CASE("k_dell_le on fixMono") {
  AlgPtr a = fixture("fixMono");
  CHECK(k_dell_le(simple(a, 3), 1, 1) == Truth::True);
  CHECK(k_dell_le(simple(a, 3), 1, 0) == Truth::False);
  CHECK(k_dell_le(simple(a, 0), 1, 2) == Truth::True);
  CHECK(k_dell_le(simple(a, 0), 1, 1) == Truth::False);
  CHECK(k_dell_le(simple(a, 0), 1, 2, Method::Pool) == Truth::True);
  CHECK(k_dell_le(simple(a, 0), 1, 1, Method::Pool) == Truth::Unknown);
  CHECK_THROWS_AS(k_dell_le(simple(a, 0), 2, 1, Method::Adjoint), Error);
}

TEST_CASE("dell values on fixMono") {
  AlgPtr a = fixture("fixMono");
  std::vector<int> values;
  for (int v = 0; v < 5; ++v) {
    Bound b = dell(simple(a, v));
    CHECK(b.tag == Tag::Exact);
    values.push_back(b.value);
  }
  CHECK(values == std::vector<int>{2, 0, 0, 1, 0});
  Bound alg = engine_for(a).dell_algebra(1);
  CHECK(alg.tag == Tag::Exact);
  CHECK(alg.value == 2);
}

TEST_CASE("fixA: k-dell is one for every k") {
  AlgPtr a = fixture("fixA");
  for (int k = 1; k <= 5; ++k) {
    Bound b = engine_for(a).dell_algebra(k);
    CHECK(b.value == 1);
  }
  CHECK(dell(simple(a, 2)).value == 0);
  for (int k = 2; k <= 5; ++k) {
    CHECK(k_dell_le(simple(a, 1), k, 1, Method::Pool) == Truth::True);
    CHECK(k_dell(simple(a, 1), k).value == 1);
  }
}

TEST_CASE("dell of S_2 over the one-point extension exceeds a small cap") {
  AlgPtr l = fixture("fixKR-L");
  Bound b = engine_for(l).k_dell(simple(l, 1), 1, 2, Method::Adjoint);
  CHECK(b.tag == Tag::ExceedsCap);
  CHECK(dell(simple(l, 0)).value == 0);
}

TEST_CASE("phi dimensions match the brute-force oracle") {
  auto oracle = dltest::phi_oracle();
  for (const char* name : {"fixA", "fixMono"}) {
    AlgPtr a = fixture(name);
    SyzygyGraph g = simple_closure(a);
    PhiResult p = phi_T_dim(g);
    CHECK(p.value == oracle.at(name).phi_t);
    CHECK(p.ranks == oracle.at(name).ranks);
    CHECK(engine_for(a).dell_algebra(1).value <= p.value);
  }
  AlgPtr fa = fixture("fixA");
  std::vector<Module> simples;
  for (int v = 0; v < 3; ++v) simples.push_back(simple(fa, v));
  CHECK(phi(simples).value <= phi_T_dim(simple_closure(fa)).value);
}

TEST_CASE("phi of small sets") {
  AlgPtr a = fixture("fixMono");
  CHECK(phi({projective(a, 1)}).value == 0);
  PhiResult s4 = phi({simple(a, 3)});
  CHECK(s4.value == 1);
  CHECK(s4.ranks.at(0) == 1);
  CHECK(s4.ranks.at(1) == 0);
}

TEST_CASE("lattice map counts syzygy summands") {
  AlgPtr a = fixture("fixMono");
  SyzygyGraph g = simple_closure(a);
  Mat l = g.lattice_map();
  const int s1 = g.find(simple(a, 0));
  const int u23 = g.find(uniserial(a, "2", {"gamma"}));
  const int s2 = g.find(simple(a, 1));
  const int u12 = g.find(uniserial(a, "1", {"alpha1"}));
  CHECK(l(u23, s1) == Scalar(1));
  CHECK(l(s2, u23) == Scalar(1));
  CHECK(l(u12, u23) == Scalar(1));
  CHECK(l(s1, s1) == Scalar(0));
}

TEST_CASE("monomial Findim criterion on the opposite of fixMono") {
  AlgPtr op = fixture("fixMono")->opposite();
  FindimResult f = monomial_findim(op);
  CHECK(f.s == 0);
  CHECK(f.findim == 1);
  std::vector<int> crit;
  for (const auto& c : f.critical) crit.push_back(c.q);
  std::sort(crit.begin(), crit.end());
  std::vector<int> expected{path_index(op, "alpha1"), path_index(op, "epsilon")};
  std::sort(expected.begin(), expected.end());
  CHECK(crit == expected);
}

TEST_CASE("monomial Findim of the A_2 path algebra") {
  AlgPtr a = parse_algebra("vertices 1 2\narrow a: 1 -> 2\n");
  FindimResult f = monomial_findim(a);
  CHECK(f.findim == 1);
  CHECK(proj_dim(simple(a, 0)) == 1);
  CHECK_THROWS_AS(monomial_findim(fixture("fixKR-A")), Error);
}

TEST_CASE("suprema of tagged bounds") {
  CHECK(sup_bound({{Tag::Exact, 1, ""}, {Tag::Exact, 2, ""}}).value == 2);
  CHECK(sup_bound({{Tag::Exact, 1, ""}, {Tag::UpperBound, 3, ""}}).tag == Tag::UpperBound);
  CHECK(sup_bound({{Tag::Exact, 1, ""}, {Tag::ExceedsCap, -1, ""}}).tag == Tag::ExceedsCap);
  CHECK(sup_bound({{Tag::Exact, 1, ""}, {Tag::Unknown, -1, ""}}).tag == Tag::Unknown);
}
