#include "gengroup/common.hpp"

#include <algorithm>

namespace gengroup {

bool Table::closed_under(std::size_t bound) const {
  return std::all_of(cells_.begin(), cells_.end(), [bound](Index v) { return v < bound; });
}

void Verdict::pass(std::string id, std::string law, CheckKind kind) {
  lines_.push_back(CheckLine{std::move(id), std::move(law), kind, true, std::nullopt});
}

void Verdict::fail(std::string id, std::string law, Witness w, CheckKind kind) {
  lines_.push_back(CheckLine{std::move(id), std::move(law), kind, false, std::move(w)});
}

void Verdict::record(std::string id, std::string law, std::optional<Witness> w, CheckKind kind) {
  const bool ok = !w.has_value();
  lines_.push_back(CheckLine{std::move(id), std::move(law), kind, ok, std::move(w)});
}

void Verdict::append(const Verdict& other, std::string_view prefix) {
  for (CheckLine line : other.lines_) {
    if (!prefix.empty()) {
      line.id = std::string(prefix) + line.id;
      if (line.witness) line.witness->check = line.id;
    }
    lines_.push_back(std::move(line));
  }
}

bool Verdict::passed() const {
  return std::all_of(lines_.begin(), lines_.end(), [](const CheckLine& l) {
    return l.kind == CheckKind::Property || l.passed;
  });
}

const CheckLine* Verdict::find(std::string_view id) const {
  auto it = std::find_if(lines_.begin(), lines_.end(),
                         [id](const CheckLine& l) { return l.id == id; });
  return it == lines_.end() ? nullptr : &*it;
}

std::optional<Witness> Verdict::first_witness() const {
  for (const auto& l : lines_) {
    if (l.kind == CheckKind::Axiom && !l.passed) return l.witness;
  }
  return std::nullopt;
}

std::string render_tuple(std::span<const std::string> labels, std::span<const Index> elems) {
  std::string out = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += elems[i] < labels.size() ? labels[elems[i]] : "#" + std::to_string(elems[i]);
  }
  out += ")";
  return out;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string pair_label(std::string_view a, std::string_view b) {
  std::string out = "(";
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

}  // namespace gengroup
