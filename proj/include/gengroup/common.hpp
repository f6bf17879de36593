#pragma once

// Shared vocabulary for every checker in the library: dense operation
// tables, counterexample witnesses and per-law verdict lines.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gengroup {

/// Elements of every finite carrier are dense indices 0..n-1.
using Index = std::size_t;

/// Row-major table of element indices. Square for binary operations,
/// |R| x |M| for scalar actions.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Index fill = 0)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  static Table square(std::size_t n, Index fill = 0) { return Table(n, n, fill); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Index operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  Index& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  std::span<const Index> row(std::size_t r) const {
    return std::span<const Index>(cells_).subspan(r * cols_, cols_);
  }
  std::span<const Index> cells() const { return cells_; }

  /// True iff every cell is < bound.
  bool closed_under(std::size_t bound) const;

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Index> cells_;
};

/// A concrete counterexample to one law.
struct Witness {
  std::string check;            // stable check id, e.g. "ASSOC"
  std::vector<Index> elements;  // the offending tuple, in quantifier order
  std::string detail;           // rendered with labels

  bool operator==(const Witness&) const = default;
};

/// Axioms decide pass/fail of a structure; properties are reported data
/// (normality, abelian-ness, connectivity) that never fail a check.
enum class CheckKind { Axiom, Property };

struct CheckLine {
  std::string id;
  std::string law;
  CheckKind kind = CheckKind::Axiom;
  bool passed = true;
  std::optional<Witness> witness;
};

/// Ordered list of check lines produced by one checker run.
class Verdict {
 public:
  void add(CheckLine line) { lines_.push_back(std::move(line)); }
  void pass(std::string id, std::string law, CheckKind kind = CheckKind::Axiom);
  void fail(std::string id, std::string law, Witness w, CheckKind kind = CheckKind::Axiom);
  /// Adds a line that passes iff `w` is empty.
  void record(std::string id, std::string law, std::optional<Witness> w,
              CheckKind kind = CheckKind::Axiom);

  /// Appends another verdict's lines, optionally prefixing their ids.
  void append(const Verdict& other, std::string_view prefix = {});

  /// True iff every axiom line passed.
  bool passed() const;
  const std::vector<CheckLine>& lines() const { return lines_; }
  const CheckLine* find(std::string_view id) const;
  /// Witness of the first failing axiom line, if any.
  std::optional<Witness> first_witness() const;

 private:
  std::vector<CheckLine> lines_;
};

/// A constructor or operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Renders an index tuple as "(l0, l1, ...)" using the given labels.
std::string render_tuple(std::span<const std::string> labels, std::span<const Index> elems);

/// Decimal labels "0".."n-1".
std::vector<std::string> numeric_labels(std::size_t n);

/// Label "(a,b)" for a pair.
std::string pair_label(std::string_view a, std::string_view b);

}  // namespace gengroup
