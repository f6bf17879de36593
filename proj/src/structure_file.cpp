#include "gengroup/structure_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace gengroup {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "magma", "groupoid", "ring", "generalized-ring", "module", "gg-groupoid", "gm-groupoid"};

constexpr std::array<std::string_view, 10> kKeywords = {
    "kind", "elements", "objects", "morphism", "table", "ref", "zero", "one", "identity", "inverse"};

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) {
    if (tok.front() == '#') break;
    out.push_back(tok);
  }
  return out;
}

std::vector<std::string> label_list(const StructureFile& f, std::string_view keyword) {
  const auto all = f.directives_named(keyword);
  if (all.empty()) throw ParseError(0, "missing '" + std::string(keyword) + "' line");
  if (all.size() > 1) throw ParseError(all[1]->line, "duplicate '" + std::string(keyword) + "' line");
  const auto& d = *all.front();
  if (d.args.empty()) throw ParseError(d.line, "'" + std::string(keyword) + "' needs at least one label");
  std::set<std::string> seen;
  for (const auto& l : d.args) {
    if (l == "-" || is_keyword(l)) throw ParseError(d.line, "reserved word '" + l + "' used as a label");
    if (!seen.insert(l).second) throw ParseError(d.line, "duplicate label '" + l + "'");
  }
  return d.args;
}

Index lookup(const std::vector<std::string>& labels, const std::string& label, int line) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw ParseError(line, "unknown label '" + label + "'");
  return static_cast<Index>(it - labels.begin());
}

const TableBlock& require_table(const StructureFile& f, std::string_view name, std::size_t rows,
                                std::size_t cols) {
  const TableBlock* t = f.table(name);
  if (!t) throw ParseError(0, "missing 'table " + std::string(name) + "'");
  for (std::size_t i = 0; i < t->rows.size(); ++i) {
    if (t->rows[i].size() != cols) {
      throw ParseError(t->row_lines[i], "table " + std::string(name) + " row has " +
                                            std::to_string(t->rows[i].size()) + " cells, expected " +
                                            std::to_string(cols));
    }
  }
  if (t->rows.size() != rows) {
    const int line = t->row_lines.empty() ? t->line : t->row_lines.back();
    throw ParseError(line, "table " + std::string(name) + " has " + std::to_string(t->rows.size()) +
                               " rows, expected " + std::to_string(rows));
  }
  return *t;
}

Table read_table(const StructureFile& f, std::string_view name, std::size_t rows,
                 const std::vector<std::string>& col_labels) {
  const auto& t = require_table(f, name, rows, col_labels.size());
  Table out(rows, col_labels.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < col_labels.size(); ++c) out(r, c) = lookup(col_labels, t.rows[r][c], t.row_lines[r]);
  return out;
}

std::optional<std::vector<Index>> read_unary(const StructureFile& f, std::string_view name,
                                             const std::vector<std::string>& labels) {
  if (!f.table(name)) return std::nullopt;
  const Table t = read_table(f, name, 1, labels);
  return std::vector<Index>(t.row(0).begin(), t.row(0).end());
}

TableBlock write_table(std::string name, const Table& t, const std::vector<std::string>& labels) {
  TableBlock b;
  b.name = std::move(name);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(labels[t(r, c)]);
    b.rows.push_back(std::move(row));
  }
  return b;
}

TableBlock write_unary(std::string name, const std::vector<Index>& map, const std::vector<std::string>& labels) {
  TableBlock b;
  b.name = std::move(name);
  std::vector<std::string> row;
  for (Index x : map) row.push_back(labels[x]);
  b.rows.push_back(std::move(row));
  return b;
}

Directive make_directive(std::string kw, std::vector<std::string> args) {
  return Directive{std::move(kw), std::move(args), 0};
}

void require_kind(const StructureFile& f, StructureKind k) {
  if (f.kind != k) {
    throw ParseError(0, "expected kind " + std::string(to_string(k)) + ", got " + std::string(to_string(f.kind)));
  }
}

std::string single_arg(const StructureFile& f, std::string_view keyword) {
  const auto* d = f.directive(keyword);
  if (!d) throw ParseError(0, "missing '" + std::string(keyword) + "' line");
  if (d->args.size() != 1) throw ParseError(d->line, "'" + std::string(keyword) + "' takes one label");
  return d->args.front();
}

std::pair<Table, std::vector<Index>> read_add_certificate(const StructureFile& f, const FiniteGroupoid& g,
                                                          std::vector<Index>* eid_out) {
  const auto labels = g.morphism_labels();
  Table add = read_table(f, "add", labels.size(), labels);
  auto neg = read_unary(f, "neg", labels);
  auto eid = read_unary(f, "eid", labels);
  if (!neg || !eid) {
    const auto rep = classify(FiniteMagma{labels, add});
    if (!rep.certificate) throw StructureError(*rep.witness);
    if (!neg) neg = rep.certificate->inverse;
    if (!eid) eid = rep.certificate->identity;
  }
  *eid_out = std::move(*eid);
  return {std::move(add), std::move(*neg)};
}

}  // namespace

std::string_view to_string(StructureKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<StructureKind> parse_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s) return static_cast<StructureKind>(i);
  return std::nullopt;
}

const Directive* StructureFile::directive(std::string_view keyword) const {
  for (const auto& d : directives)
    if (d.keyword == keyword) return &d;
  return nullptr;
}

std::vector<const Directive*> StructureFile::directives_named(std::string_view keyword) const {
  std::vector<const Directive*> out;
  for (const auto& d : directives)
    if (d.keyword == keyword) out.push_back(&d);
  return out;
}

const TableBlock* StructureFile::table(std::string_view name) const {
  for (const auto& t : tables)
    if (t.name == name) return &t;
  return nullptr;
}

std::optional<std::string> StructureFile::ref(std::string_view role) const {
  for (const auto& d : directives)
    if (d.keyword == "ref" && d.args.size() == 2 && d.args[0] == role) return d.args[1];
  return std::nullopt;
}

StructureFile parse_structure(std::string_view text) {
  StructureFile f;
  bool have_kind = false;
  TableBlock* open = nullptr;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      // Comment-only lines do not close a table; blank lines do.
      if (line.find_first_not_of(" \t") == std::string_view::npos) open = nullptr;
      continue;
    }
    const std::string& kw = tokens.front();
    if (!is_keyword(kw)) {
      if (!open) throw ParseError(lineno, "unexpected '" + kw + "' outside a table");
      open->rows.push_back(tokens);
      open->row_lines.push_back(lineno);
      continue;
    }
    open = nullptr;
    if (kw == "kind") {
      if (have_kind) throw ParseError(lineno, "duplicate kind line");
      if (tokens.size() != 2) throw ParseError(lineno, "kind takes exactly one argument");
      const auto k = parse_kind(tokens[1]);
      if (!k) throw ParseError(lineno, "unknown kind '" + tokens[1] + "'");
      f.kind = *k;
      have_kind = true;
    } else if (kw == "table") {
      if (tokens.size() != 2) throw ParseError(lineno, "table takes exactly one name");
      if (f.table(tokens[1])) throw ParseError(lineno, "duplicate table '" + tokens[1] + "'");
      f.tables.push_back(TableBlock{tokens[1], {}, {}, lineno});
      open = &f.tables.back();
    } else {
      if (kw == "ref" && tokens.size() != 3) throw ParseError(lineno, "ref takes a role and a path");
      f.directives.push_back(Directive{kw, {tokens.begin() + 1, tokens.end()}, lineno});
    }
  }
  if (!have_kind) throw ParseError(1, "missing kind line");
  return f;
}

std::string serialize(const StructureFile& f) {
  std::ostringstream os;
  os << "kind " << to_string(f.kind) << "\n";
  for (const auto& d : f.directives) {
    os << d.keyword;
    for (const auto& a : d.args) os << ' ' << a;
    os << "\n";
  }
  for (const auto& t : f.tables) {
    os << "\ntable " << t.name << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << "\n";
    }
  }
  return os.str();
}

StructureFile read_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

FiniteMagma to_magma(const StructureFile& f) {
  require_kind(f, StructureKind::Magma);
  auto labels = label_list(f, "elements");
  Table t = read_table(f, "mul", labels.size(), labels);
  return FiniteMagma{std::move(labels), std::move(t)};
}

StructureFile from_magma(const FiniteMagma& m) {
  StructureFile f;
  f.kind = StructureKind::Magma;
  f.directives.push_back(make_directive("elements", m.labels));
  f.tables.push_back(write_table("mul", m.table, m.labels));
  return f;
}

FiniteGroupoid to_groupoid(const StructureFile& f) {
  require_kind(f, StructureKind::Groupoid);
  FiniteGroupoid g;
  g.objects = label_list(f, "objects");
  std::set<std::string> seen;
  for (const auto* d : f.directives_named("morphism")) {
    if (d->args.size() != 3) throw ParseError(d->line, "morphism takes <label> <dom> <cod>");
    const auto& label = d->args[0];
    if (label == "-" || is_keyword(label)) throw ParseError(d->line, "reserved word used as a morphism label");
    if (!seen.insert(label).second) throw ParseError(d->line, "duplicate morphism '" + label + "'");
    g.morphisms.push_back({label, lookup(g.objects, d->args[1], d->line), lookup(g.objects, d->args[2], d->line)});
  }
  if (g.morphisms.empty()) throw ParseError(0, "groupoid declares no morphisms");
  const auto labels = g.morphism_labels();
  const auto& t = require_table(f, "comp", labels.size(), labels.size());
  g.comp = PartialTable(labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c)
      if (t.rows[r][c] != "-") g.comp(r, c) = lookup(labels, t.rows[r][c], t.row_lines[r]);

  const auto ids = f.directives_named("identity");
  const auto invs = f.directives_named("inverse");
  if (ids.empty()) {
    const auto inferred = infer_units(g.objects, g.morphisms, g.comp);
    if (inferred.failure) throw StructureError(*inferred.failure);
    g.identity = *inferred.identity;
  } else {
    g.identity.assign(g.objects.size(), static_cast<Index>(-1));
    for (const auto* d : ids) {
      if (d->args.size() != 2) throw ParseError(d->line, "identity takes <object> <morphism>");
      g.identity[lookup(g.objects, d->args[0], d->line)] = lookup(labels, d->args[1], d->line);
    }
    if (std::count(g.identity.begin(), g.identity.end(), static_cast<Index>(-1)) != 0) {
      throw ParseError(ids.back()->line, "identity lines must cover every object");
    }
  }
  if (invs.empty()) {
    const auto inferred = infer_units(g.objects, g.morphisms, g.comp);
    if (inferred.failure) throw StructureError(*inferred.failure);
    g.inverse = *inferred.inverse;
  } else {
    g.inverse.assign(labels.size(), static_cast<Index>(-1));
    for (const auto* d : invs) {
      if (d->args.size() != 2) throw ParseError(d->line, "inverse takes <morphism> <morphism>");
      g.inverse[lookup(labels, d->args[0], d->line)] = lookup(labels, d->args[1], d->line);
    }
    if (std::count(g.inverse.begin(), g.inverse.end(), static_cast<Index>(-1)) != 0) {
      throw ParseError(invs.back()->line, "inverse lines must cover every morphism");
    }
  }
  return g;
}

StructureFile from_groupoid(const FiniteGroupoid& g) {
  StructureFile f;
  f.kind = StructureKind::Groupoid;
  f.directives.push_back(make_directive("objects", g.objects));
  for (const auto& m : g.morphisms) {
    f.directives.push_back(make_directive("morphism", {m.label, g.objects[m.dom], g.objects[m.cod]}));
  }
  for (Index a = 0; a < g.object_count(); ++a) {
    f.directives.push_back(make_directive("identity", {g.objects[a], g.morphisms[g.identity[a]].label}));
  }
  for (Index m = 0; m < g.morphism_count(); ++m) {
    f.directives.push_back(make_directive("inverse", {g.morphisms[m].label, g.morphisms[g.inverse[m]].label}));
  }
  TableBlock comp;
  comp.name = "comp";
  for (Index a = 0; a < g.morphism_count(); ++a) {
    std::vector<std::string> row;
    for (Index b = 0; b < g.morphism_count(); ++b) {
      row.push_back(g.comp(a, b) ? g.morphisms[*g.comp(a, b)].label : "-");
    }
    comp.rows.push_back(std::move(row));
  }
  f.tables.push_back(std::move(comp));
  return f;
}

FiniteRing to_ring(const StructureFile& f) {
  require_kind(f, StructureKind::Ring);
  FiniteRing r;
  r.labels = label_list(f, "elements");
  r.zero = lookup(r.labels, single_arg(f, "zero"), f.directive("zero")->line);
  r.one = lookup(r.labels, single_arg(f, "one"), f.directive("one")->line);
  r.add = read_table(f, "add", r.size(), r.labels);
  r.mul = read_table(f, "mul", r.size(), r.labels);
  return r;
}

StructureFile from_ring(const FiniteRing& r) {
  StructureFile f;
  f.kind = StructureKind::Ring;
  f.directives.push_back(make_directive("elements", r.labels));
  f.directives.push_back(make_directive("zero", {r.labels[r.zero]}));
  f.directives.push_back(make_directive("one", {r.labels[r.one]}));
  f.tables.push_back(write_table("add", r.add, r.labels));
  f.tables.push_back(write_table("mul", r.mul, r.labels));
  return f;
}

GeneralizedRing to_generalized_ring(const StructureFile& f) {
  require_kind(f, StructureKind::GeneralizedRing);
  GeneralizedRing r;
  r.labels = label_list(f, "elements");
  r.add = read_table(f, "add", r.size(), r.labels);
  r.mul = read_table(f, "mul", r.size(), r.labels);
  return r;
}

StructureFile from_generalized_ring(const GeneralizedRing& r) {
  StructureFile f;
  f.kind = StructureKind::GeneralizedRing;
  f.directives.push_back(make_directive("elements", r.labels));
  f.tables.push_back(write_table("add", r.add, r.labels));
  f.tables.push_back(write_table("mul", r.mul, r.labels));
  return f;
}

GeneralizedModule to_module(const StructureFile& f, const FiniteRing& ring) {
  require_kind(f, StructureKind::Module);
  auto labels = label_list(f, "elements");
  Table add = read_table(f, "add", labels.size(), labels);
  Table action = read_table(f, "action", ring.size(), labels);
  FiniteMagma carrier{std::move(labels), std::move(add)};
  const auto rep = classify(carrier);
  if (!rep.certificate) throw StructureError(*rep.witness);
  return make_module(ring, std::move(carrier), std::move(action));
}

StructureFile from_module(const GeneralizedModule& m, const std::string& ring_ref) {
  StructureFile f;
  f.kind = StructureKind::Module;
  f.directives.push_back(make_directive("ref", {"ring", ring_ref}));
  f.directives.push_back(make_directive("elements", m.carrier.labels));
  f.tables.push_back(write_table("add", m.carrier.table, m.carrier.labels));
  f.tables.push_back(write_table("action", m.action, m.carrier.labels));
  return f;
}

GGGroupoid to_gg_groupoid(const StructureFile& f, const FiniteGroupoid& g) {
  require_kind(f, StructureKind::GGGroupoid);
  std::vector<Index> eid;
  auto [add, neg] = read_add_certificate(f, g, &eid);
  return GGGroupoid{g, std::move(add), std::move(neg), std::move(eid)};
}

StructureFile from_gg_groupoid(const GGGroupoid& x, const std::string& groupoid_ref) {
  const auto labels = x.groupoid.morphism_labels();
  StructureFile f;
  f.kind = StructureKind::GGGroupoid;
  f.directives.push_back(make_directive("ref", {"groupoid", groupoid_ref}));
  f.tables.push_back(write_table("add", x.add, labels));
  f.tables.push_back(write_unary("neg", x.neg, labels));
  f.tables.push_back(write_unary("eid", x.eid, labels));
  return f;
}

GMGroupoid to_gm_groupoid(const StructureFile& f, const FiniteGroupoid& g, const FiniteRing& ring) {
  require_kind(f, StructureKind::GMGroupoid);
  std::vector<Index> eid;
  auto [add, neg] = read_add_certificate(f, g, &eid);
  Table action = read_table(f, "action", ring.size(), g.morphism_labels());
  return GMGroupoid{GGGroupoid{g, std::move(add), std::move(neg), std::move(eid)}, ring, std::move(action)};
}

StructureFile from_gm_groupoid(const GMGroupoid& x, const std::string& groupoid_ref,
                               const std::string& ring_ref) {
  StructureFile f = from_gg_groupoid(x.gg, groupoid_ref);
  f.kind = StructureKind::GMGroupoid;
  f.directives.push_back(make_directive("ref", {"ring", ring_ref}));
  f.tables.push_back(write_table("action", x.action, x.gg.groupoid.morphism_labels()));
  return f;
}

namespace {

std::filesystem::path resolve_ref(const StructureFile& f, std::string_view role,
                                  const std::filesystem::path& from) {
  const auto ref = f.ref(role);
  if (!ref) throw ParseError(0, "missing 'ref " + std::string(role) + " <path>'");
  return from.parent_path() / *ref;
}

FiniteRing load_ring(const std::filesystem::path& p) {
  const auto f = read_structure_file(p);
  if (f.kind != StructureKind::Ring) throw ParseError(0, p.string() + " is not a ring file");
  return to_ring(f);
}

FiniteGroupoid load_groupoid(const std::filesystem::path& p) {
  const auto f = read_structure_file(p);
  if (f.kind != StructureKind::Groupoid) throw ParseError(0, p.string() + " is not a groupoid file");
  return to_groupoid(f);
}

}  // namespace

AnyStructure load_structure(const std::filesystem::path& path) {
  const auto f = read_structure_file(path);
  switch (f.kind) {
    case StructureKind::Magma: return to_magma(f);
    case StructureKind::Groupoid: return to_groupoid(f);
    case StructureKind::Ring: return to_ring(f);
    case StructureKind::GeneralizedRing: return to_generalized_ring(f);
    case StructureKind::Module: return to_module(f, load_ring(resolve_ref(f, "ring", path)));
    case StructureKind::GGGroupoid: return to_gg_groupoid(f, load_groupoid(resolve_ref(f, "groupoid", path)));
    case StructureKind::GMGroupoid:
      return to_gm_groupoid(f, load_groupoid(resolve_ref(f, "groupoid", path)),
                            load_ring(resolve_ref(f, "ring", path)));
  }
  throw ParseError(0, "unsupported kind");
}

std::vector<std::filesystem::path> save_structure(const std::filesystem::path& path, const AnyStructure& s) {
  namespace fs = std::filesystem;
  auto sibling = [&](std::string_view ext) {
    return path.parent_path() / (path.stem().string() + std::string(ext));
  };
  std::vector<fs::path> written{path};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteMagma>) {
          write_text_file(path, serialize(from_magma(x)));
        } else if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          write_text_file(path, serialize(from_groupoid(x)));
        } else if constexpr (std::is_same_v<T, FiniteRing>) {
          write_text_file(path, serialize(from_ring(x)));
        } else if constexpr (std::is_same_v<T, GeneralizedRing>) {
          write_text_file(path, serialize(from_generalized_ring(x)));
        } else if constexpr (std::is_same_v<T, GeneralizedModule>) {
          const auto ring_path = sibling(".ring");
          write_text_file(ring_path, serialize(from_ring(x.ring)));
          write_text_file(path, serialize(from_module(x, ring_path.filename().string())));
          written.push_back(ring_path);
        } else if constexpr (std::is_same_v<T, GGGroupoid>) {
          const auto gpd_path = sibling(".groupoid");
          write_text_file(gpd_path, serialize(from_groupoid(x.groupoid)));
          write_text_file(path, serialize(from_gg_groupoid(x, gpd_path.filename().string())));
          written.push_back(gpd_path);
        } else if constexpr (std::is_same_v<T, GMGroupoid>) {
          const auto gpd_path = sibling(".groupoid");
          const auto ring_path = sibling(".ring");
          write_text_file(gpd_path, serialize(from_groupoid(x.gg.groupoid)));
          write_text_file(ring_path, serialize(from_ring(x.ring)));
          write_text_file(path, serialize(from_gm_groupoid(x, gpd_path.filename().string(),
                                                           ring_path.filename().string())));
          written.push_back(gpd_path);
          written.push_back(ring_path);
        }
      },
      s);
  return written;
}

}  // namespace gengroup
