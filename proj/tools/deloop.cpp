#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "delooping/certificates.hpp"
#include "delooping/config.hpp"
#include "delooping/decomp.hpp"
#include "delooping/error.hpp"
#include "delooping/homological.hpp"
#include "delooping/invariants.hpp"
#include "delooping/io.hpp"
#include "delooping/report.hpp"

using nlohmann::json;
using namespace dl;

namespace {

constexpr int kComputed = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;

struct Common {
  std::string algebra;
  std::vector<std::string> modules;
  std::vector<std::string> pool;
  int cap = 8;
  int depth = 12;
  int dim_cap = 60;
  std::string method = "auto";
  std::uint64_t seed = Config{}.seed;
  bool json_out = false;
};

void add_common(CLI::App* sub, Common& c, bool with_algebra = true, bool with_module = true) {
  if (with_algebra) sub->add_option("algebra", c.algebra, "algebra file")->required();
  if (with_module) sub->add_option("-m,--module", c.modules, "module: S<v>, P<v>, I<v> or a module file");
  sub->add_option("--cap", c.cap, "largest delooping level tried")->check(CLI::NonNegativeNumber);
  sub->add_option("--depth", c.depth, "depth cap of syzygy closures")->check(CLI::PositiveNumber);
  sub->add_option("--dim-cap", c.dim_cap, "dimension cap of syzygy closures")->check(CLI::PositiveNumber);
  sub->add_option("--method", c.method, "auto, adjoint or pool")->check(CLI::IsMember({"auto", "adjoint", "pool"}));
  sub->add_option("--seed", c.seed, "seed of the randomized routines");
  sub->add_option("--pool", c.pool, "extra modules for certificate searches");
  sub->add_flag("--json", c.json_out, "machine-readable output");
}

Method method_of(const std::string& s) {
  if (s == "adjoint") return Method::Adjoint;
  if (s == "pool") return Method::Pool;
  return Method::Auto;
}

struct Loaded {
  AlgPtr alg;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<Module> pool;
};

Loaded load(const Common& c, bool simples_by_default) {
  config().seed = c.seed;
  Loaded l;
  l.alg = load_algebra(c.algebra);
  set_engine_caps(l.alg, {c.depth, c.dim_cap});
  for (const auto& r : c.modules) l.modules.emplace_back(r, resolve_module(r, l.alg));
  if (l.modules.empty() && simples_by_default)
    for (int v = 0; v < l.alg->num_vertices(); ++v)
      l.modules.emplace_back("S" + l.alg->quiver().vertices[v], simple(l.alg, v));
  for (const auto& r : c.pool) l.pool.push_back(resolve_module(r, l.alg));
  return l;
}

bool conclusive(const Bound& b) { return b.tag == Tag::Exact || b.tag == Tag::UpperBound; }

std::string describe(const Bound& b, int cap) {
  if (b.tag == Tag::ExceedsCap) return "exceeds cap " + std::to_string(cap);
  return b.str();
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

json summands_json(const Module& m) {
  json arr = json::array();
  for (const auto& [piece, mult] : nonprojective_summands(m))
    arr.push_back({{"dims", piece.dim_vector()}, {"multiplicity", mult}});
  return arr;
}

int cmd_alg_check(const Common& c) {
  AlgPtr a = load_algebra(c.algebra);
  json j = {{"name", a->name()},
            {"field", a->field().name()},
            {"vertices", a->quiver().vertices},
            {"arrows", a->num_arrows()},
            {"relations", a->relations().size()},
            {"dimension", a->dim()},
            {"nilpotency", a->nilpotency()},
            {"monomial", a->is_monomial()}};
  json proj = json::object();
  std::ostringstream os;
  os << a->name() << ": field " << a->field().name() << ", " << a->num_vertices() << " vertices, " << a->num_arrows()
     << " arrows, dimension " << a->dim() << (a->is_monomial() ? ", monomial" : "") << '\n';
  for (int v = 0; v < a->num_vertices(); ++v) {
    Module p = projective(a, v);
    proj[a->quiver().vertices[v]] = p.dim_vector();
    os << "  P" << a->quiver().vertices[v] << " dims " << p.dim_vector() << '\n';
  }
  j["projectives"] = proj;
  emit(c, j, os.str());
  return kComputed;
}

int cmd_syzygy(const Common& c, int n) {
  Loaded l = load(c, true);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& [name, m] : l.modules) {
    Module x = m;
    json steps = json::array();
    for (int i = 1; i <= n; ++i) {
      x = syzygy(x, 1);
      steps.push_back({{"n", i}, {"dims", x.dim_vector()}, {"total", x.total_dim()}, {"summands", summands_json(x)}});
      os << "Omega^" << i << ' ' << name << ": dims " << x.dim_vector() << " total " << x.total_dim() << '\n';
    }
    arr.push_back({{"module", name}, {"syzygies", steps}});
  }
  emit(c, arr, os.str());
  return kComputed;
}

int cmd_kdell(const Common& c, int k) {
  Loaded l = load(c, false);
  const bool whole = l.modules.empty();
  if (whole)
    for (int v = 0; v < l.alg->num_vertices(); ++v)
      l.modules.emplace_back("S" + l.alg->quiver().vertices[v], simple(l.alg, v));
  DellEngine& eng = engine_for(l.alg);
  const std::string name = k == 1 ? "dell" : std::to_string(k) + "-dell";
  json j = json::object();
  json per = json::object();
  std::ostringstream os;
  std::vector<Bound> bs;
  bool ok = true;
  for (const auto& [ref, m] : l.modules) {
    Bound b = eng.k_dell(m, k, c.cap, method_of(c.method));
    bs.push_back(b);
    ok = ok && conclusive(b);
    per[ref] = bound_json(b);
    os << name << '(' << ref << ") " << describe(b, c.cap) << " (" << b.method << ")\n";
  }
  j["modules"] = per;
  if (whole) {
    Bound s = sup_bound(bs);
    j["algebra"] = bound_json(s);
    os << name << "(algebra) " << describe(s, c.cap) << '\n';
  }
  j["cap"] = c.cap;
  emit(c, j, os.str());
  return ok ? kComputed : kInconclusive;
}

int cmd_ddell(const Common& c, int k, int bound_cap, const std::string& out) {
  Loaded l = load(c, true);
  SearchOptions opt;
  opt.bound_cap = bound_cap;
  opt.pool = l.pool;
  json arr = json::array();
  std::ostringstream os;
  bool ok = true;
  for (const auto& [ref, m] : l.modules) {
    DdellSearch s = search_ddell(m, k, opt);
    json e = {{"module", ref}, {"k", k}, {"lower_bound", s.lower_bound}};
    if (s.cert) {
      e["tag"] = to_string(s.tag());
      e["value"] = s.cert->bound;
      e["length"] = s.cert->length();
      json terms = json::array();
      for (const auto& t : s.cert->terms) terms.push_back(t.dim_vector());
      e["terms"] = terms;
      os << k << "-ddell(" << ref << ") " << (s.tag() == Tag::Exact ? "= " : "<= ") << s.cert->bound << " using "
         << s.cert->length() << ", terms";
      for (const auto& t : s.cert->terms) os << ' ' << t.dim_vector();
      os << '\n';
      if (!out.empty()) {
        std::string file = out;
        if (l.modules.size() > 1) file = out + "." + ref + ".cert";
        std::ofstream(file) << print_certificate(*s.cert, std::filesystem::absolute(c.algebra).string());
        e["certificate"] = file;
      }
    } else {
      ok = false;
      e["tag"] = "unknown";
      e["value"] = nullptr;
      os << k << "-ddell(" << ref << ") no certificate with bound <= " << bound_cap << '\n';
    }
    if (!s.lower_reason.empty()) {
      e["lower_reason"] = s.lower_reason;
      os << "  lower bound " << s.lower_bound << ": " << s.lower_reason << '\n';
    }
    arr.push_back(e);
  }
  emit(c, arr, os.str());
  return ok ? kComputed : kInconclusive;
}

int cmd_subddell(const Common& c) {
  Loaded l = load(c, true);
  json arr = json::array();
  std::ostringstream os;
  bool ok = true;
  for (const auto& [ref, m] : l.modules) {
    SubddellSearch s = search_subddell(m, l.pool, c.cap);
    json e = bound_json(s.bound);
    e["module"] = ref;
    os << "sub-ddell(" << ref << ") " << describe(s.bound, c.cap);
    if (s.embedding) {
      e["over"] = s.embedding->tgt().dim_vector();
      e["over_source"] = s.over_label;
      os << " via " << ref << " -> " << s.embedding->tgt().dim_vector() << " (" << s.over_label << ")";
    }
    os << '\n';
    ok = ok && conclusive(s.bound);
    arr.push_back(e);
  }
  emit(c, arr, os.str());
  return ok ? kComputed : kInconclusive;
}

int cmd_phidim(const Common& c) {
  Loaded l = load(c, false);
  json j;
  std::ostringstream os;
  try {
    PhiResult p;
    if (l.modules.empty()) {
      p = phi_T_dim(engine_for(l.alg).graph());
      os << "phi_T dim " << p.value;
    } else {
      std::vector<Module> ms;
      for (const auto& [r, m] : l.modules) ms.push_back(m);
      p = phi(ms, {c.depth, c.dim_cap});
      os << "phi dim " << p.value;
    }
    os << " (ranks";
    for (int r : p.ranks) os << ' ' << r;
    os << ")\n";
    j = {{"tag", "exact"}, {"value", p.value}, {"ranks", p.ranks}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GraphTruncated) throw;
    j = {{"tag", "unknown"}, {"value", nullptr}, {"reason", e.what()}};
    os << "phi dim unknown: " << e.what() << '\n';
    emit(c, j, os.str());
    return kInconclusive;
  }
  emit(c, j, os.str());
  return kComputed;
}

int cmd_tset(const Common& c) {
  Loaded l = load(c, false);
  std::vector<Module> seeds;
  for (const auto& [r, m] : l.modules) seeds.push_back(m);
  SyzygyGraph g = seeds.empty() ? simple_closure(l.alg, {c.depth, c.dim_cap})
                                : syzygy_closure(l.alg, seeds, {c.depth, c.dim_cap});
  json nodes = json::array();
  std::ostringstream os;
  for (int i = 0; i < g.size(); ++i) {
    const auto& nd = g.node(i);
    json edges = json::array();
    for (const auto& e : g.edges(i)) edges.push_back({{"to", e.to}, {"multiplicity", e.mult}});
    nodes.push_back({{"id", i},
                     {"dims", nd.rep.dim_vector()},
                     {"total", nd.rep.total_dim()},
                     {"depth", nd.depth},
                     {"expanded", nd.expanded},
                     {"over_dim", nd.over_dim},
                     {"omega", edges}});
    os << "node " << i << " dims " << nd.rep.dim_vector() << " depth " << nd.depth;
    if (nd.over_dim) os << " over dim cap";
    if (!nd.expanded && !nd.over_dim) os << " unexpanded";
    os << " ->";
    for (const auto& e : g.edges(i)) os << ' ' << e.to << (e.mult > 1 ? "x" + std::to_string(e.mult) : "");
    os << '\n';
  }
  const bool closed = g.closed();
  json j = {{"nodes", nodes},
            {"closed", closed},
            {"depth_capped", g.depth_capped()},
            {"dim_capped", g.dim_capped()},
            {"depth_cap", c.depth},
            {"dim_cap", c.dim_cap}};
  if (closed) {
    j["status"] = "finite";
    os << "closure finite: " << g.size() << " indecomposable non-projective modules\n";
  } else {
    j["status"] = "growth";
    os << "growth: no finite closure within depth " << c.depth << " and dimension " << c.dim_cap << '\n';
  }
  emit(c, j, os.str());
  return closed ? kComputed : kInconclusive;
}

int cmd_findim(const Common& c, bool op) {
  Loaded l = load(c, false);
  AlgPtr b = op ? l.alg->opposite() : l.alg;
  FindimResult f = monomial_findim(b, {c.depth, c.dim_cap});
  json crit = json::array();
  std::ostringstream os;
  os << "Findim " << (op ? "(opposite) " : "") << f.findim << ", s = " << f.s << '\n';
  for (const auto& cp : f.critical) {
    const std::string q = b->path_name(b->basis()[cp.q].arrows, b->basis()[cp.q].src);
    json ann = json::array();
    for (const auto& p : cp.left_annihilator) ann.push_back(b->path_name(p, 0));
    json ws = json::array();
    for (int w : cp.witness_arrows) ws.push_back(b->quiver().arrows[w].name);
    crit.push_back({{"path", q}, {"condition", cp.condition}, {"left_annihilator", ann}, {"witness_arrows", ws}});
    os << "  critical " << q << " (condition " << cp.condition << ")\n";
  }
  json j = {{"findim", f.findim}, {"s", f.s}, {"opposite", op}, {"critical", crit}};
  emit(c, j, os.str());
  return kComputed;
}

int cmd_verify(const Common& c, const std::string& cert_path) {
  config().seed = c.seed;
  AlgPtr a = c.algebra.empty() ? nullptr : load_algebra(c.algebra);
  CertificateFile f = load_certificate(cert_path, a);
  set_engine_caps(f.algebra, {c.depth, c.dim_cap});
  VerifyResult r = verify_ddell(f.cert);
  const std::string who = f.target_ref.empty() ? "target" : f.target_ref;
  json j = {{"certificate", cert_path},
            {"target", who},
            {"k", f.cert.k},
            {"bound", f.cert.bound},
            {"length", f.cert.length()},
            {"status", to_string(r.status)},
            {"index", r.index},
            {"message", r.message}};
  std::ostringstream os;
  if (r.confirmed())
    os << "k-ddell(" << who << ") ≤ " << f.cert.bound << " confirmed (k = " << f.cert.k << ")\n";
  else
    os << "certificate " << to_string(r.status) << ": " << r.message << '\n';
  emit(c, j, os.str());
  if (r.confirmed()) return kComputed;
  return r.status == CertStatus::WitnessUnknown ? kInconclusive : kError;
}

int cmd_report(const Common& c, const std::vector<int>& ks, const std::string& cert_dir, std::string citations) {
  Loaded l = load(c, false);
  ReportOptions opt;
  opt.ks = ks;
  opt.dell_cap = c.cap;
  opt.caps = {c.depth, c.dim_cap};
  opt.method = method_of(c.method);
  opt.search.pool = l.pool;
  opt.cert_dir = cert_dir;
  opt.algebra_path = std::filesystem::absolute(c.algebra).string();
  if (citations.empty()) {
    auto guess = std::filesystem::path(c.algebra).parent_path() / "citations.json";
    if (std::filesystem::exists(guess)) citations = guess.string();
  }
  if (!citations.empty()) opt.citations = json::parse(read_file(citations));
  json rep = build_report(l.alg, opt);
  std::ostringstream os;
  const json& inv = rep["invariants"];
  auto show = [](const json& b) {
    std::string t = b["tag"];
    if (t == "exact") return std::to_string(b["value"].get<int>());
    if (t == "upper-bound") return "<= " + std::to_string(b["value"].get<int>());
    return t;
  };
  os << "algebra " << rep["algebra"]["name"].get<std::string>() << " (dimension " << rep["algebra"]["dimension"]
     << ")\n";
  for (const auto& s : rep["simples"]) {
    os << "  S" << s["vertex"].get<std::string>() << ": dell " << show(s["dell"]);
    for (const auto& [k, b] : s["kdell"].items()) os << ", " << k << "-dell " << show(b);
    os << ", ddell " << show(s["ddell"]) << ", sub-ddell " << show(s["subddell"]) << ", phi " << show(s["phi"])
       << '\n';
  }
  os << "dell " << show(inv["dell"]) << ", ddell " << show(inv["ddell"]) << ", sub-ddell " << show(inv["subddell"])
     << ", phi_T dim " << show(inv["phi_T_dim"]);
  if (inv.contains("findim_op")) os << ", Findim op " << show(inv["findim_op"]);
  os << '\n';
  for (const auto& e : inv["external"])
    os << "external citation: " << e["invariant"].get<std::string>() << " = " << e["value"] << " ("
       << e.value("note", "") << ")\n";
  for (const auto& u : rep["unknowns"]) os << "inconclusive: " << u.get<std::string>() << '\n';
  emit(c, rep, os.str());
  return report_inconclusive(rep) ? kInconclusive : kComputed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delooping-level invariants of bound quiver algebras"};
  app.require_subcommand(1);
  Common c;

  auto* alg = app.add_subcommand("alg", "algebra files");
  alg->require_subcommand(1);
  auto* check = alg->add_subcommand("check", "parse and summarize an algebra");
  add_common(check, c, true, false);

  int n = 1, k = 1, bound_cap = 4;
  std::string out, cert, cert_dir, citations;
  std::vector<int> ks;
  bool op = false;

  auto* syz = app.add_subcommand("syzygy", "syzygies with projective summands removed");
  add_common(syz, c);
  syz->add_option("-n", n, "order")->check(CLI::PositiveNumber);
  auto* dell = app.add_subcommand("dell", "delooping level");
  add_common(dell, c);
  auto* kdell = app.add_subcommand("kdell", "k-delooping level");
  add_common(kdell, c);
  kdell->add_option("-k", k, "k")->required()->check(CLI::PositiveNumber);
  auto* ddell = app.add_subcommand("ddell", "certificate search for the derived delooping level");
  add_common(ddell, c);
  ddell->add_option("-k", k, "k")->check(CLI::PositiveNumber);
  ddell->add_option("--bound-cap", bound_cap, "largest bound searched")->check(CLI::NonNegativeNumber);
  ddell->add_option("-o,--out", out, "write the certificate here");
  auto* sub = app.add_subcommand("subddell", "sub-derived delooping level");
  add_common(sub, c);
  auto* phid = app.add_subcommand("phidim", "phi dimension (of the simples' closure without modules)");
  add_common(phid, c);
  auto* tset = app.add_subcommand("tset", "syzygy closure of the simples");
  add_common(tset, c);
  auto* fin = app.add_subcommand("monomial-findim", "Findim of a monomial algebra");
  add_common(fin, c, true, false);
  fin->add_flag("--op", op, "use the opposite algebra");
  auto* ver = app.add_subcommand("verify", "verify a certificate file");
  ver->add_option("certificate", cert, "certificate file")->required();
  ver->add_option("--alg", c.algebra, "algebra file overriding the certificate's");
  add_common(ver, c, false, false);
  auto* rep = app.add_subcommand("report", "all invariants of an algebra");
  add_common(rep, c, true, false);
  rep->add_option("-k", ks, "extra k-dell columns");
  rep->add_option("--cert-dir", cert_dir, "write ddell certificates here");
  rep->add_option("--citations", citations, "externally established values (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_alg_check(c);
    if (syz->parsed()) return cmd_syzygy(c, n);
    if (dell->parsed()) return cmd_kdell(c, 1);
    if (kdell->parsed()) return cmd_kdell(c, k);
    if (ddell->parsed()) return cmd_ddell(c, k, bound_cap, out);
    if (sub->parsed()) return cmd_subddell(c);
    if (phid->parsed()) return cmd_phidim(c);
    if (tset->parsed()) return cmd_tset(c);
    if (fin->parsed()) return cmd_findim(c, op);
    if (ver->parsed()) return cmd_verify(c, cert);
    if (rep->parsed()) return cmd_report(c, ks, cert_dir, citations);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage) {
      std::cerr << e.what() << '\n';
      return kUsage;
    }
    std::cerr << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}
