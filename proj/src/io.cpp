#include "delooping/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "delooping/error.hpp"

namespace dl {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::string strip_comment(const std::string& s) {
  auto pos = s.find('#');
  std::string t = pos == std::string::npos ? s : s.substr(0, pos);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  return t;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  std::string x;
  while (is >> x) w.push_back(x);
  return w;
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool parse_rational(const std::string& s, mpq_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false, digit = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || !digit || j + 1 == s.size()) return false;
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      digit = true;
    } else {
      return false;
    }
  }
  if (!digit) return false;
  std::string body = s[0] == '+' ? s.substr(1) : s;
  out.set_str(body, 10);
  if (out.get_den() == 0) return false;
  out.canonicalize();
  return true;
}

// Relation text: signed terms "[coef] path" with paths as name*name*...
Relation parse_relation(const std::string& text, const Quiver& q, Field f, int line, int col0) {
  Relation r;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= n) break;
    Scalar sign = f.one();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip();
    } else if (!first) {
      parse_fail(line, col0 + static_cast<int>(i), "expected + or - between relation terms");
    }
    first = false;
    Scalar coef = f.one();
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      mpq_class v;
      if (!parse_rational(text.substr(i, j - i), v)) parse_fail(line, col0 + static_cast<int>(i), "bad coefficient");
      coef = f(v);
      i = j;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      }
    }
    Path p;
    while (true) {
      std::size_t j = i;
      while (j < n && is_ident_char(text[j])) ++j;
      if (j == i) parse_fail(line, col0 + static_cast<int>(i), "expected an arrow name");
      std::string name = text.substr(i, j - i);
      int a = q.arrow_index(name);
      if (a < 0) parse_fail(line, col0 + static_cast<int>(i), "unknown arrow " + name);
      p.push_back(a);
      i = j;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
        continue;
      }
      break;
    }
    r.terms.push_back({sign * coef, p});
  }
  if (r.terms.empty()) parse_fail(line, col0, "empty relation");
  return r;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scalar parse_scalar(const std::string& text, Field f) {
  mpq_class v;
  if (!parse_rational(text, v)) throw Error(ErrorKind::ParseError, "bad number '" + text + "'");
  return f(v);
}

AlgPtr parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::string name;
  Field field;
  Quiver q;
  int cap = 32;
  std::vector<std::pair<int, std::string>> rel_lines;
  bool have_vertices = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    auto w = words(s);
    if (w.empty()) continue;
    const std::string& kw = w[0];
    if (kw == "name") {
      if (w.size() != 2) parse_fail(line, 1, "expected: name <identifier>");
      name = w[1];
    } else if (kw == "field") {
      if (w.size() == 2 && w[1] == "Q") {
        field = Field();
      } else if ((w.size() == 3 && w[1] == "GF") || (w.size() == 2 && w[1].rfind("GF(", 0) == 0)) {
        std::string num = w.size() == 3 ? w[2] : w[1].substr(3, w[1].size() - 4);
        try {
          long p = std::stol(num);
          if (p < 2 || p > 4294967295L) throw std::out_of_range("p");
          field = Field(static_cast<std::uint32_t>(p));
        } catch (const Error&) {
          throw;
        } catch (...) {
          parse_fail(line, 1, "bad characteristic '" + num + "'");
        }
      } else {
        parse_fail(line, 1, "expected: field Q | field GF <p>");
      }
    } else if (kw == "vertices") {
      if (have_vertices) parse_fail(line, 1, "vertices declared twice");
      have_vertices = true;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (q.vertex_index(w[i]) >= 0) parse_fail(line, 1, "duplicate vertex " + w[i]);
        q.vertices.push_back(w[i]);
      }
    } else if (kw == "arrow") {
      // arrow name: src -> tgt
      std::string rest = s.substr(s.find("arrow") + 5);
      auto colon = rest.find(':');
      auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        parse_fail(line, 1, "expected: arrow <name>: <src> -> <tgt>");
      auto nm = words(rest.substr(0, colon));
      auto src = words(rest.substr(colon + 1, arrow - colon - 1));
      auto tgt = words(rest.substr(arrow + 2));
      if (nm.size() != 1 || src.size() != 1 || tgt.size() != 1)
        parse_fail(line, 1, "expected: arrow <name>: <src> -> <tgt>");
      for (char c : nm[0])
        if (!is_ident_char(c)) parse_fail(line, 7, "bad arrow name " + nm[0]);
      if (q.arrow_index(nm[0]) >= 0) parse_fail(line, 7, "duplicate arrow " + nm[0]);
      int si = q.vertex_index(src[0]);
      int ti = q.vertex_index(tgt[0]);
      const int col_src = static_cast<int>(raw.find(src[0], raw.find(':'))) + 1;
      const int col_tgt = static_cast<int>(raw.find(tgt[0], raw.find("->"))) + 1;
      if (si < 0) parse_fail(line, col_src, "unknown source vertex " + src[0]);
      if (ti < 0) parse_fail(line, col_tgt, "unknown target vertex " + tgt[0]);
      q.arrows.push_back({nm[0], si, ti});
    } else if (kw == "relation") {
      rel_lines.emplace_back(line, s);
    } else if (kw == "degree_cap") {
      if (w.size() != 2) parse_fail(line, 1, "expected: degree_cap <n>");
      try {
        cap = std::stoi(w[1]);
      } catch (...) {
        parse_fail(line, 12, "bad degree cap");
      }
      if (cap < 1) parse_fail(line, 12, "degree cap must be positive");
    } else {
      parse_fail(line, 1, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_vertices) throw Error(ErrorKind::ParseError, "missing vertices line");
  std::vector<Relation> rels;
  for (const auto& [ln, s] : rel_lines) {
    auto pos = s.find("relation") + 8;
    rels.push_back(parse_relation(s.substr(pos), q, field, ln, static_cast<int>(pos) + 1));
  }
  return PathAlgebra::build(q, rels, field, cap, name);
}

AlgPtr load_algebra(const std::string& path) {
  AlgPtr a = parse_algebra(read_file(path));
  return a;
}

std::string print_algebra(const PathAlgebra& a) {
  std::ostringstream os;
  if (!a.name().empty()) os << "name " << a.name() << '\n';
  os << "field " << a.field().name() << '\n';
  os << "vertices";
  for (const auto& v : a.quiver().vertices) os << ' ' << v;
  os << '\n';
  for (const auto& ar : a.quiver().arrows)
    os << "arrow " << ar.name << ": " << a.quiver().vertices[ar.src] << " -> " << a.quiver().vertices[ar.tgt] << '\n';
  for (const auto& r : a.relations()) {
    os << "relation";
    bool first = true;
    for (const auto& t : r.terms) {
      Scalar c = t.coef;
      std::string sign = "+";
      if (a.field().is_rational() && sgn(c.value()) < 0) {
        sign = "-";
        c = -c;
      }
      if (first) {
        os << (sign == "-" ? " -" : " ");
      } else {
        os << ' ' << sign << ' ';
      }
      first = false;
      if (!c.is_one()) os << c.str() << ' ';
      for (std::size_t i = 0; i < t.path.size(); ++i) os << (i ? "*" : "") << a.quiver().arrows[t.path[i]].name;
    }
    os << '\n';
  }
  if (a.degree_cap() != 32) os << "degree_cap " << a.degree_cap() << '\n';
  return os.str();
}

Mat parse_matrix(const std::string& text, std::size_t rows, std::size_t cols, Field f) {
  std::vector<std::vector<Scalar>> data;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= n || text[i] != c)
      throw Error(ErrorKind::ParseError, std::string("expected '") + c + "' at offset " + std::to_string(i) +
                                             " in matrix " + text);
    ++i;
  };
  expect('[');
  skip();
  if (i < n && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      std::vector<Scalar> row;
      skip();
      if (i < n && text[i] == ']') {
        ++i;
      } else {
        while (true) {
          skip();
          std::size_t j = i;
          while (j < n && text[j] != ',' && text[j] != ']' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
          row.push_back(parse_scalar(text.substr(i, j - i), f));
          i = j;
          skip();
          if (i < n && text[i] == ',') {
            ++i;
            continue;
          }
          expect(']');
          break;
        }
      }
      data.push_back(std::move(row));
      skip();
      if (i < n && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (i != n) throw Error(ErrorKind::ParseError, "trailing characters after matrix " + text);
  if (rows == 0 || cols == 0) {
    Mat m(rows, cols, f);
    bool ok = data.empty() || (data.size() == rows && std::all_of(data.begin(), data.end(), [](auto& r) { return r.empty(); }));
    if (!ok) throw Error(ErrorKind::ValidationError, "matrix shape does not match the dimensions");
    return m;
  }
  if (data.size() != rows)
    throw Error(ErrorKind::ValidationError,
                "matrix has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
  for (const auto& r : data)
    if (r.size() != cols)
      throw Error(ErrorKind::ValidationError,
                  "matrix row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
  return Mat::from_rows(data, cols, f);
}

Module parse_module(const std::string& text, const AlgPtr& a) {
  const Quiver& q = a->quiver();
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<int> dims(a->num_vertices(), 0);
  bool have_dims = false;
  std::vector<std::pair<int, std::string>> maps;
  std::vector<int> map_lines;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    auto w = words(s);
    if (w.empty()) continue;
    if (w[0] == "name" || w[0] == "algebra") continue;
    if (w[0] == "dims") {
      have_dims = true;
      for (std::size_t i = 1; i < w.size(); ++i) {
        auto c = w[i].find(':');
        if (c == std::string::npos) parse_fail(line, 1, "expected vertex:dimension, got " + w[i]);
        int v = q.vertex_index(w[i].substr(0, c));
        if (v < 0) parse_fail(line, 1, "unknown vertex " + w[i].substr(0, c));
        try {
          dims[v] = std::stoi(w[i].substr(c + 1));
        } catch (...) {
          parse_fail(line, 1, "bad dimension in " + w[i]);
        }
        if (dims[v] < 0) parse_fail(line, 1, "negative dimension");
      }
    } else if (w[0] == "map") {
      if (w.size() < 3) parse_fail(line, 1, "expected: map <arrow> <matrix>");
      int ai = q.arrow_index(w[1]);
      if (ai < 0) parse_fail(line, 5, "unknown arrow " + w[1]);
      auto pos = s.find(w[1], 3) + w[1].size();
      maps.emplace_back(ai, s.substr(pos));
      map_lines.push_back(line);
    } else {
      parse_fail(line, 1, "unknown keyword '" + w[0] + "'");
    }
  }
  if (!have_dims) throw Error(ErrorKind::ParseError, "missing dims line");
  std::vector<Mat> mats;
  for (const auto& ar : q.arrows) mats.emplace_back(dims[ar.src], dims[ar.tgt], a->field());
  std::vector<bool> seen(q.arrows.size(), false);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& [ai, txt] = maps[k];
    if (seen[ai]) parse_fail(map_lines[k], 1, "arrow " + q.arrows[ai].name + " mapped twice");
    seen[ai] = true;
    try {
      mats[ai] = parse_matrix(txt, dims[q.arrows[ai].src], dims[q.arrows[ai].tgt], a->field());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) parse_fail(map_lines[k], 1, e.what());
      throw Error(e.kind(), "line " + std::to_string(map_lines[k]) + ": arrow " + q.arrows[ai].name + ": " + e.what());
    }
  }
  return Module(a, dims, mats);
}

Module resolve_module(const std::string& ref, const AlgPtr& a) {
  if (ref.size() >= 2 && (ref[0] == 'S' || ref[0] == 'P' || ref[0] == 'I')) {
    int v = a->quiver().vertex_index(ref.substr(1));
    if (v >= 0) {
      if (ref[0] == 'S') return simple(a, v);
      if (ref[0] == 'P') return projective(a, v);
      return injective(a, v);
    }
  }
  return parse_module(read_file(ref), a);
}

std::string print_module(const Module& m, const std::string& name) {
  const AlgPtr& a = m.algebra();
  std::ostringstream os;
  if (!name.empty()) os << "name " << name << '\n';
  os << "dims";
  for (int v = 0; v < m.num_vertices(); ++v) os << ' ' << a->quiver().vertices[v] << ':' << m.dim(v);
  os << '\n';
  for (int i = 0; i < a->num_arrows(); ++i)
    if (!m.map(i).is_zero()) os << "map " << a->quiver().arrows[i].name << ' ' << m.map(i).str() << '\n';
  return os.str();
}

namespace {

Method parse_method(const std::string& s, int line) {
  if (s == "auto") return Method::Auto;
  if (s == "adjoint") return Method::Adjoint;
  if (s == "pool") return Method::Pool;
  parse_fail(line, 1, "unknown witness method '" + s + "'");
}

std::string vertex_name(const AlgPtr& a, int v) { return a->quiver().vertices[v]; }

}  // namespace

CertificateFile parse_certificate(const std::string& text, AlgPtr a, const std::string& base_dir) {
  CertificateFile out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::map<std::string, std::string> inline_text;
  struct TermLine {
    std::string ref, over;
    Method method = Method::Auto;
    int line = 0;
  };
  std::vector<TermLine> terms;
  struct BlockLine {
    int line;
    std::string vertex, matrix;
  };
  std::map<int, std::vector<BlockLine>> blocks;
  std::map<int, int> block_lines;
  int k = 1, bound = -1;
  std::string note;
  auto path_of = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() || base_dir.empty() ? fp.string() : (std::filesystem::path(base_dir) / fp).string();
  };
  auto to_int = [&](const std::string& w, const char* what) {
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (...) {
      parse_fail(line, 1, std::string("bad ") + what + " '" + w + "'");
    }
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    auto w = words(s);
    if (w.empty()) continue;
    const std::string& kw = w[0];
    if (kw == "algebra") {
      if (w.size() != 2) parse_fail(line, 1, "expected: algebra <path>");
      out.algebra_path = w[1];
    } else if (kw == "k") {
      if (w.size() != 2) parse_fail(line, 1, "expected: k <n>");
      k = to_int(w[1], "k");
    } else if (kw == "bound") {
      if (w.size() != 2) parse_fail(line, 1, "expected: bound <n>");
      bound = to_int(w[1], "bound");
    } else if (kw == "note") {
      note = s.size() > 5 ? s.substr(5) : "";
    } else if (kw == "module") {
      if (w.size() != 2) parse_fail(line, 1, "expected: module <name>");
      const std::string name = w[1];
      if (inline_text.count(name)) parse_fail(line, 8, "module " + name + " declared twice");
      std::string body;
      bool closed = false;
      while (std::getline(in, raw)) {
        ++line;
        auto ww = words(strip_comment(raw));
        if (!ww.empty() && ww[0] == "end") {
          closed = true;
          break;
        }
        body += raw + '\n';
      }
      if (!closed) parse_fail(line, 1, "module " + name + " is missing 'end'");
      inline_text[name] = body;
    } else if (kw == "target") {
      if (w.size() != 2) parse_fail(line, 1, "expected: target <module>");
      out.target_ref = w[1];
    } else if (kw == "term") {
      TermLine t;
      t.line = line;
      if (w.size() == 2) {
      } else if (w.size() == 4 && w[2] == "witness") {
        t.method = parse_method(w[3], line);
      } else if (w.size() == 5 && w[2] == "witness" && w[3] == "over") {
        t.over = w[4];
      } else {
        parse_fail(line, 1, "expected: term <module> [witness auto|adjoint|pool|over <module>]");
      }
      t.ref = w[1];
      terms.push_back(t);
    } else if (kw == "map") {
      if (w.size() != 2) parse_fail(line, 1, "expected: map <index>");
      const int idx = to_int(w[1], "map index");
      if (blocks.count(idx)) parse_fail(line, 1, "map " + w[1] + " given twice");
      block_lines[idx] = line;
      auto& bl = blocks[idx];
      bool closed = false;
      while (std::getline(in, raw)) {
        ++line;
        std::string t = strip_comment(raw);
        auto ww = words(t);
        if (ww.empty()) continue;
        if (ww[0] == "end") {
          closed = true;
          break;
        }
        if (ww[0] != "block" || ww.size() < 3) parse_fail(line, 1, "expected: block <vertex> <matrix>");
        auto pos = t.find(ww[1], t.find("block") + 5) + ww[1].size();
        bl.push_back({line, ww[1], t.substr(pos)});
      }
      if (!closed) parse_fail(line, 1, "map " + w[1] + " is missing 'end'");
    } else {
      parse_fail(line, 1, "unknown keyword '" + kw + "'");
    }
  }
  if (!a) {
    if (out.algebra_path.empty()) throw Error(ErrorKind::ParseError, "certificate names no algebra");
    a = load_algebra(path_of(out.algebra_path));
  }
  out.algebra = a;
  if (out.target_ref.empty()) throw Error(ErrorKind::ParseError, "missing target line");
  if (bound < 0) throw Error(ErrorKind::ParseError, "missing bound line");
  std::map<std::string, Module> cache;
  auto module_of = [&](const std::string& ref) {
    auto it = cache.find(ref);
    if (it != cache.end()) return it->second;
    auto t = inline_text.find(ref);
    const bool standard = ref.size() >= 2 && (ref[0] == 'S' || ref[0] == 'P' || ref[0] == 'I') &&
                          a->quiver().vertex_index(ref.substr(1)) >= 0;
    Module m = t != inline_text.end() ? parse_module(t->second, a) : resolve_module(standard ? ref : path_of(ref), a);
    cache[ref] = m;
    return m;
  };
  DdellCertificate& c = out.cert;
  c.k = k;
  c.bound = bound;
  c.note = note;
  c.target = module_of(out.target_ref);
  for (const auto& t : terms) {
    c.terms.push_back(module_of(t.ref));
    Witness wit;
    wit.method = t.method;
    if (!t.over.empty()) wit.over = module_of(t.over);
    c.witnesses.push_back(wit);
  }
  for (const auto& [idx, bl] : blocks)
    if (idx < 0 || idx >= static_cast<int>(terms.size()))
      parse_fail(block_lines[idx], 1, "map index " + std::to_string(idx) + " has no term");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Module& src = c.terms[i];
    const Module& tgt = i == 0 ? c.target : c.terms[i - 1];
    std::vector<Mat> mats;
    for (int v = 0; v < a->num_vertices(); ++v) mats.emplace_back(src.dim(v), tgt.dim(v), a->field());
    auto it = blocks.find(static_cast<int>(i));
    if (it != blocks.end()) {
      for (const auto& [ln, vname, mtxt] : it->second) {
        int v = a->quiver().vertex_index(vname);
        if (v < 0) parse_fail(ln, 1, "unknown vertex " + vname);
        try {
          mats[v] = parse_matrix(mtxt, src.dim(v), tgt.dim(v), a->field());
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ParseError) parse_fail(ln, 1, e.what());
          throw Error(e.kind(), "line " + std::to_string(ln) + ": " + e.what());
        }
      }
    }
    c.maps.emplace_back(src, tgt, mats);
  }
  return out;
}

CertificateFile load_certificate(const std::string& path, AlgPtr a) {
  return parse_certificate(read_file(path), std::move(a), std::filesystem::path(path).parent_path().string());
}

std::string print_certificate(const DdellCertificate& c, const std::string& algebra_path) {
  const AlgPtr& a = c.target.algebra();
  std::ostringstream os;
  if (!algebra_path.empty()) os << "algebra " << algebra_path << '\n';
  if (!c.note.empty()) os << "note " << c.note << '\n';
  os << "k " << c.k << '\n' << "bound " << c.bound << '\n';
  auto emit = [&](const Module& m, const std::string& name) {
    os << "module " << name << '\n' << print_module(m) << "end\n";
  };
  emit(c.target, "T");
  for (std::size_t i = 0; i < c.terms.size(); ++i) emit(c.terms[i], "C" + std::to_string(i));
  for (std::size_t i = 0; i < c.witnesses.size(); ++i)
    if (c.witnesses[i].over) emit(*c.witnesses[i].over, "W" + std::to_string(i));
  os << "target T\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    os << "term C" << i;
    const Witness& w = i < c.witnesses.size() ? c.witnesses[i] : Witness{};
    if (w.over)
      os << " witness over W" << i;
    else if (w.method != Method::Auto)
      os << " witness " << to_string(w.method);
    os << '\n';
  }
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    os << "map " << i << '\n';
    for (int v = 0; v < a->num_vertices(); ++v) {
      const Mat& b = c.maps[i].block(v);
      if (b.rows() == 0 || b.cols() == 0 || b.is_zero()) continue;
      os << "block " << vertex_name(a, v) << ' ' << b.str() << '\n';
    }
    os << "end\n";
  }
  return os.str();
}

bool same_certificate(const DdellCertificate& x, const DdellCertificate& y) {
  if (x.k != y.k || x.bound != y.bound || !x.target.same_data(y.target)) return false;
  if (x.terms.size() != y.terms.size() || x.maps.size() != y.maps.size() || x.witnesses.size() != y.witnesses.size())
    return false;
  for (std::size_t i = 0; i < x.terms.size(); ++i)
    if (!x.terms[i].same_data(y.terms[i])) return false;
  for (std::size_t i = 0; i < x.maps.size(); ++i)
    for (int v = 0; v < x.target.num_vertices(); ++v)
      if (x.maps[i].block(v) != y.maps[i].block(v)) return false;
  for (std::size_t i = 0; i < x.witnesses.size(); ++i) {
    const Witness& a = x.witnesses[i];
    const Witness& b = y.witnesses[i];
    if (a.method != b.method || a.over.has_value() != b.over.has_value()) return false;
    if (a.over && !a.over->same_data(*b.over)) return false;
  }
  return true;
}

}  // namespace dl
