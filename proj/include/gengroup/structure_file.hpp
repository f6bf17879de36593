#pragma once

// Line-oriented structure files.
//
//   # comment
//   kind magma
//   elements a b c
//   table mul
//   a b c
//   b c a
//   c a b
//
// A `table <name>` block takes every following line as a row until a blank
// line, a directive keyword or end of file. Cells are element labels; the
// token "-" marks an undefined cell of a partial table. `ref <role> <path>`
// names a dependency file, resolved relative to the referencing file.
//
// Schemas per kind:
//   magma             elements, table mul
//   groupoid          objects, morphism <label> <dom> <cod> (one per line),
//                     table comp (partial), optional identity <obj> <mor>
//                     and inverse <mor> <mor> lines (inferred when absent)
//   ring              elements, zero <x>, one <x>, table add, table mul
//   generalized-ring  elements, table add, table mul
//   module            ref ring, elements, table add, table action (|R| rows)
//   gg-groupoid       ref groupoid, table add, optional table neg / table eid
//                     (single rows; inferred when absent)
//   gm-groupoid       as gg-groupoid plus ref ring and table action

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gengroup/enriched.hpp"
#include "gengroup/groupoid.hpp"
#include "gengroup/magma.hpp"
#include "gengroup/module.hpp"
#include "gengroup/ring.hpp"

namespace gengroup {

enum class StructureKind { Magma, Groupoid, Ring, GeneralizedRing, Module, GGGroupoid, GMGroupoid };

std::string_view to_string(StructureKind k);
std::optional<StructureKind> parse_kind(std::string_view s);

/// Malformed input: syntax, unknown kind, dimension or label errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed input that cannot be completed into the declared structure,
/// e.g. a groupoid whose identities cannot be inferred.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(Witness w) : std::runtime_error(w.detail), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

struct Directive {
  std::string keyword;
  std::vector<std::string> args;
  int line = 0;

  bool operator==(const Directive& o) const { return keyword == o.keyword && args == o.args; }
};

struct TableBlock {
  std::string name;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> row_lines;
  int line = 0;

  bool operator==(const TableBlock& o) const { return name == o.name && rows == o.rows; }
};

/// Untyped parse result. Equality ignores line numbers.
struct StructureFile {
  StructureKind kind = StructureKind::Magma;
  std::vector<Directive> directives;
  std::vector<TableBlock> tables;

  const Directive* directive(std::string_view keyword) const;
  std::vector<const Directive*> directives_named(std::string_view keyword) const;
  const TableBlock* table(std::string_view name) const;
  /// Path of `ref <role> <path>`, if present.
  std::optional<std::string> ref(std::string_view role) const;

  bool operator==(const StructureFile&) const = default;
};

StructureFile parse_structure(std::string_view text);
std::string serialize(const StructureFile& f);

/// Reads and parses; an unreadable file is a ParseError at line 0.
StructureFile read_structure_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Typed conversions. to_* throw ParseError on schema violations.
FiniteMagma to_magma(const StructureFile& f);
StructureFile from_magma(const FiniteMagma& m);

FiniteGroupoid to_groupoid(const StructureFile& f);
StructureFile from_groupoid(const FiniteGroupoid& g);

FiniteRing to_ring(const StructureFile& f);
StructureFile from_ring(const FiniteRing& r);

GeneralizedRing to_generalized_ring(const StructureFile& f);
StructureFile from_generalized_ring(const GeneralizedRing& r);

GeneralizedModule to_module(const StructureFile& f, const FiniteRing& ring);
StructureFile from_module(const GeneralizedModule& m, const std::string& ring_ref);

GGGroupoid to_gg_groupoid(const StructureFile& f, const FiniteGroupoid& g);
StructureFile from_gg_groupoid(const GGGroupoid& x, const std::string& groupoid_ref);

GMGroupoid to_gm_groupoid(const StructureFile& f, const FiniteGroupoid& g, const FiniteRing& ring);
StructureFile from_gm_groupoid(const GMGroupoid& x, const std::string& groupoid_ref,
                               const std::string& ring_ref);

using AnyStructure = std::variant<FiniteMagma, FiniteGroupoid, FiniteRing, GeneralizedRing,
                                  GeneralizedModule, GGGroupoid, GMGroupoid>;

/// Loads a file of any kind, following refs relative to its directory.
AnyStructure load_structure(const std::filesystem::path& path);

/// Writes a structure; dependencies go to siblings named after the output
/// stem (`m.module` -> `m.ring`, `x.gmg` -> `x.groupoid` + `x.ring`).
/// Returns every path written, main file first.
std::vector<std::filesystem::path> save_structure(const std::filesystem::path& path, const AnyStructure& s);

}  // namespace gengroup
