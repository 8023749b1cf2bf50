#include "delooping/report.hpp"

#include <filesystem>
#include <fstream>

#include "delooping/config.hpp"
#include "delooping/error.hpp"
#include "delooping/io.hpp"

namespace dl {

using nlohmann::json;

namespace {

json tagged(Tag tag, int value, const std::string& method = "") {
  json j;
  j["tag"] = to_string(tag);
  j["value"] = tag == Tag::Exact || tag == Tag::UpperBound ? json(value) : json(nullptr);
  if (!method.empty()) j["method"] = method;
  return j;
}

json unknown_entry(const std::string& reason) {
  json j = tagged(Tag::Unknown, -1);
  j["reason"] = reason;
  return j;
}

std::string vname(const AlgPtr& a, int v) { return a->quiver().vertices[v]; }

}  // namespace

json bound_json(const Bound& b) { return tagged(b.tag, b.value, b.method); }

json build_report(const AlgPtr& a, const ReportOptions& opt) {
  set_engine_caps(a, opt.caps);
  DellEngine& eng = engine_for(a);
  json rep;
  rep["schema"] = kReportSchema;
  rep["algebra"] = {{"name", a->name()},
                    {"field", a->field().name()},
                    {"vertices", a->quiver().vertices},
                    {"arrows", a->num_arrows()},
                    {"dimension", a->dim()},
                    {"monomial", a->is_monomial()}};
  rep["settings"] = {{"dell_cap", opt.dell_cap},
                     {"depth_cap", opt.caps.depth},
                     {"dim_cap", opt.caps.dim},
                     {"ddell_bound_cap", opt.search.bound_cap},
                     {"ddell_depth_cap", opt.search.depth_cap},
                     {"method", to_string(opt.method)},
                     {"seed", config().seed},
                     {"iso_trials", config().iso_trials},
                     {"sample_budget", config().sample_budget},
                     {"k", opt.ks}};
  json unknowns = json::array();
  const AdjunctionGate& gate = eng.adjunction_gate();
  rep["adjunction_gate"] = {{"passed", gate.passed}, {"pairs", gate.pairs}, {"failure", gate.failure}};

  std::optional<FindimResult> fo;
  std::string findim_note;
  if (a->is_monomial()) {
    try {
      fo = monomial_findim(a->opposite(), opt.caps);
    } catch (const Error& e) {
      findim_note = e.what();
    }
  }

  std::vector<Bound> dells, ddells, subs;
  std::vector<std::vector<Bound>> kdells(opt.ks.size());
  int ddell_lower = 0;
  json simples = json::array();
  for (int v = 0; v < a->num_vertices(); ++v) {
    Module s = simple(a, v);
    const std::string label = "S" + vname(a, v);
    json row;
    row["vertex"] = vname(a, v);

    Bound d = eng.k_dell(s, 1, opt.dell_cap, opt.method);
    dells.push_back(d);
    row["dell"] = bound_json(d);
    if (d.tag == Tag::ExceedsCap || d.tag == Tag::Unknown) unknowns.push_back("dell " + label + ": " + to_string(d.tag));

    json kd = json::object();
    for (std::size_t i = 0; i < opt.ks.size(); ++i) {
      Method m = opt.ks[i] > 1 && opt.method == Method::Adjoint ? Method::Auto : opt.method;
      Bound b = eng.k_dell(s, opt.ks[i], opt.dell_cap, m);
      kdells[i].push_back(b);
      kd[std::to_string(opt.ks[i])] = bound_json(b);
      if (b.tag == Tag::ExceedsCap || b.tag == Tag::Unknown)
        unknowns.push_back(std::to_string(opt.ks[i]) + "-dell " + label + ": " + to_string(b.tag));
    }
    row["kdell"] = kd;

    DdellSearch sr = search_ddell(s, 1, opt.search);
    json dd;
    if (sr.cert) {
      dd = tagged(sr.tag(), sr.cert->bound, "search");
      dd["length"] = sr.cert->length();
      json terms = json::array();
      for (const auto& t : sr.cert->terms) terms.push_back(t.dim_vector());
      dd["terms"] = terms;
      VerifyResult vr = verify_ddell(*sr.cert);
      dd["verified"] = to_string(vr.status);
      if (!opt.cert_dir.empty()) {
        std::filesystem::create_directories(opt.cert_dir);
        const std::string file = (std::filesystem::path(opt.cert_dir) / (a->name() + "-" + label + ".cert")).string();
        std::ofstream(file) << print_certificate(*sr.cert, opt.algebra_path);
        dd["certificate"] = file;
      }
      ddells.push_back({sr.tag(), sr.cert->bound, "search"});
    } else {
      dd = tagged(Tag::Unknown, -1, "search");
      dd["reason"] = "no certificate within bound cap " + std::to_string(opt.search.bound_cap);
      ddells.push_back({Tag::Unknown, -1, "search"});
      unknowns.push_back("ddell " + label + ": no certificate found");
    }
    dd["lower_bound"] = sr.lower_bound;
    if (!sr.lower_reason.empty()) dd["lower_reason"] = sr.lower_reason;
    ddell_lower = std::max(ddell_lower, sr.lower_bound);
    row["ddell"] = dd;

    SubddellSearch sub = search_subddell(s, opt.search.pool, opt.dell_cap, opt.search.use_closure,
                                         opt.search.closure_caps);
    json sj = bound_json(sub.bound);
    if (sub.embedding) {
      sj["over"] = sub.embedding->tgt().dim_vector();
      sj["over_source"] = sub.over_label;
    }
    subs.push_back(sub.bound);
    if (sub.bound.tag == Tag::ExceedsCap || sub.bound.tag == Tag::Unknown)
      unknowns.push_back("sub-ddell " + label + ": " + to_string(sub.bound.tag));
    row["subddell"] = sj;

    try {
      std::vector<int> nodes;
      for (const auto& [n, mult] : eng.graph().seed_summands().at(v)) nodes.push_back(n);
      PhiResult p = phi_of_nodes(eng.graph(), nodes);
      row["phi"] = {{"tag", "exact"}, {"value", p.value}, {"ranks", p.ranks}};
    } catch (const Error& e) {
      row["phi"] = unknown_entry(e.what());
      unknowns.push_back("phi " + label + ": syzygy closure truncated");
    }
    simples.push_back(row);
  }
  rep["simples"] = simples;

  json alg;
  alg["dell"] = bound_json(sup_bound(dells));
  json kd = json::object();
  for (std::size_t i = 0; i < opt.ks.size(); ++i) kd[std::to_string(opt.ks[i])] = bound_json(sup_bound(kdells[i]));
  alg["kdell"] = kd;

  const int findim_op = fo ? fo->findim : -1;
  Bound dsup = sup_bound(ddells);
  json ddj = bound_json(dsup);
  int lower = ddell_lower;
  std::string lower_source = "summand tests";
  if (findim_op > lower) {
    lower = findim_op;
    lower_source = "Findim of the opposite algebra";
  }
  if (dsup.tag == Tag::UpperBound && dsup.value == lower) ddj["tag"] = "exact";
  ddj["lower_bound"] = lower;
  ddj["lower_source"] = lower_source;
  alg["ddell"] = ddj;

  Bound ssup = sup_bound(subs);
  json sj = bound_json(ssup);
  if (findim_op >= 0) {
    sj["lower_bound"] = findim_op;
    sj["lower_source"] = "Findim of the opposite algebra";
    if (ssup.tag == Tag::UpperBound && ssup.value == findim_op) sj["tag"] = "exact";
  }
  alg["subddell"] = sj;

  try {
    PhiResult p = phi_T_dim(eng.graph());
    alg["phi_T_dim"] = {{"tag", "exact"}, {"value", p.value}, {"ranks", p.ranks}};
  } catch (const Error& e) {
    alg["phi_T_dim"] = unknown_entry(e.what());
    unknowns.push_back("phi_T_dim: syzygy closure truncated");
  }
  alg["closure"] = {{"nodes", eng.graph().size()},
                    {"closed", eng.graph().closed()},
                    {"depth_capped", eng.graph().depth_capped()},
                    {"dim_capped", eng.graph().dim_capped()}};

  if (fo) {
    json f = tagged(Tag::Exact, fo->findim, "monomial criterion");
    f["s"] = fo->s;
    json crit = json::array();
    const AlgPtr op = a->opposite();
    for (const auto& c : fo->critical) {
      json cj;
      cj["path"] = op->path_name(op->basis()[c.q].arrows, op->basis()[c.q].src);
      cj["condition"] = c.condition;
      json ws = json::array();
      for (int w : c.witness_arrows) ws.push_back(op->quiver().arrows[w].name);
      cj["witness_arrows"] = ws;
      crit.push_back(cj);
    }
    f["critical"] = crit;
    alg["findim_op"] = f;
  } else if (!findim_note.empty()) {
    alg["findim_op"] = unknown_entry(findim_note);
  }

  json external = json::array();
  if (opt.citations.is_object() && opt.citations.contains(a->name())) {
    for (const auto& [key, val] : opt.citations[a->name()].items()) {
      json e = val;
      e["invariant"] = key;
      e["computed"] = false;
      external.push_back(e);
    }
  }
  alg["external"] = external;
  rep["invariants"] = alg;
  rep["unknowns"] = unknowns;
  rep["monte_carlo_negatives"] = monte_carlo_negatives().load();
  return rep;
}

bool report_inconclusive(const json& report) { return !report.value("unknowns", json::array()).empty(); }

}  // namespace dl
