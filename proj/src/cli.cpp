#include "gengroup/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>

#include "gengroup/enriched.hpp"
#include "gengroup/groupoid.hpp"
#include "gengroup/magma.hpp"
#include "gengroup/module.hpp"
#include "gengroup/ring.hpp"
#include "gengroup/structure_file.hpp"

namespace gengroup {

namespace {

// Bad arguments that CLI11 cannot see (numbers, specs, wrong file kinds).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& s, std::string_view what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

// "z<N>" shorthand, e.g. z3.
std::optional<std::size_t> zn_order(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'z' && s[0] != 'Z')) return std::nullopt;
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) return std::nullopt;
  return v;
}

TransversalPolicy parse_transversal(const std::string& s) {
  if (s == "lex") return TransversalPolicy::lexicographic();
  if (s.rfind("seed:", 0) == 0) {
    return TransversalPolicy::seeded(parse_count(s.substr(5), "transversal seed"));
  }
  throw UsageError("--transversal expects lex or seed:N, got '" + s + "'");
}

template <class T>
T load_as(const std::string& path, std::string_view what) {
  auto any = load_structure(path);
  if (auto* x = std::get_if<T>(&any)) return std::move(*x);
  throw UsageError(path + " is not a " + std::string(what) + " file");
}

FiniteMagma magma_arg(const std::string& s) {
  if (auto n = zn_order(s)) return cyclic_group(*n);
  return load_as<FiniteMagma>(s, "magma");
}

FiniteRing ring_arg(const std::string& s) {
  if (auto n = zn_order(s)) return ring_zn(*n);
  return load_as<FiniteRing>(s, "ring");
}

GeneralizedModule module_arg(const std::string& s) {
  if (auto n = zn_order(s)) return regular_module(ring_zn(*n));
  return load_as<GeneralizedModule>(s, "module");
}

GMGroupoid gm_arg(const std::string& s) {
  if (auto n = zn_order(s)) return pair_gm_groupoid(regular_module(ring_zn(*n)));
  return load_as<GMGroupoid>(s, "gm-groupoid");
}

void print_verdict(const Verdict& v, std::ostream& out) {
  for (const auto& l : v.lines()) {
    const char* tag = l.kind == CheckKind::Axiom ? (l.passed ? "PASS" : "FAIL") : (l.passed ? "YES" : "NO");
    out << tag << ' ' << l.id << "  " << l.law;
    if (l.witness) out << "  witness: " << l.witness->detail;
    out << '\n';
  }
}

void print_certificate(const FiniteMagma& m, const GGCertificate& c, std::ostream& out) {
  for (Index a = 0; a < m.size(); ++a) out << "identity " << m.label(a) << ' ' << m.label(c.identity[a]) << '\n';
  for (Index a = 0; a < m.size(); ++a) out << "inverse " << m.label(a) << ' ' << m.label(c.inverse[a]) << '\n';
}

// Classification report for a magma. Returns whether the GG axioms pass.
bool report_magma(const FiniteMagma& m, std::ostream& out) {
  const auto rep = classify(m);
  print_verdict(rep.checks, out);
  out << "classification " << to_string(rep.classification) << '\n';
  out << "abelian " << (rep.abelian ? "yes" : "no") << '\n';
  if (rep.certificate) print_certificate(m, *rep.certificate, out);
  return rep.checks.passed();
}

int finish(bool ok, std::ostream& out) {
  out << "status " << (ok ? "pass" : "fail") << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_check(const std::string& path, const std::optional<std::string>& expect, std::ostream& out) {
  std::optional<Classification> floor;
  if (expect) {
    floor = parse_classification(*expect);
    if (!floor) throw UsageError("unknown classification '" + *expect + "'");
  }
  const auto any = load_structure(path);
  if (floor && !std::holds_alternative<FiniteMagma>(any)) {
    throw UsageError("--expect applies to magma files only");
  }
  return std::visit(
      [&](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteMagma>) {
          out << "kind magma\n";
          const bool ok = report_magma(x, out);
          if (floor) {
            const auto got = classify(x).classification;
            const bool met = at_least(got, *floor);
            out << "expect " << to_string(*floor) << ' ' << (met ? "met" : "not met") << '\n';
            return finish(met, out);
          }
          return finish(ok, out);
        } else if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          out << "kind groupoid\n";
          Verdict v = check_groupoid(x);
          v.record("CONNECTED", "hom(a,b) non-empty for all a, b",
                   is_connected(x) ? std::nullopt : std::optional<Witness>(Witness{"CONNECTED", {}, "some hom-set is empty"}),
                   CheckKind::Property);
          v.record("THIN", "|hom(a,b)| <= 1",
                   x.thin() ? std::nullopt : std::optional<Witness>(Witness{"THIN", {}, "some hom-set has two morphisms"}),
                   CheckKind::Property);
          print_verdict(v, out);
          return finish(v.passed(), out);
        } else if constexpr (std::is_same_v<T, FiniteRing>) {
          out << "kind ring\n";
          const Verdict v = check_ring(x);
          print_verdict(v, out);
          return finish(v.passed(), out);
        } else if constexpr (std::is_same_v<T, GeneralizedRing>) {
          out << "kind generalized-ring\n";
          const Verdict v = check_generalized_ring(x);
          print_verdict(v, out);
          return finish(v.passed(), out);
        } else if constexpr (std::is_same_v<T, GeneralizedModule>) {
          out << "kind module\n";
          const Verdict v = check_generalized_module(x);
          print_verdict(v, out);
          out << "ordinary " << (is_ordinary(x) ? "yes" : "no") << '\n';
          return finish(v.passed(), out);
        } else if constexpr (std::is_same_v<T, GGGroupoid>) {
          out << "kind gg-groupoid\n";
          const Verdict v = check_gg_groupoid(x);
          print_verdict(v, out);
          return finish(v.passed(), out);
        } else {
          out << "kind gm-groupoid\n";
          const Verdict v = check_gm_groupoid(x);
          print_verdict(v, out);
          return finish(v.passed(), out);
        }
      },
      any);
}

void require_params(const std::string& kind, const std::vector<std::string>& params, std::size_t n) {
  if (params.size() != n) {
    throw UsageError("construct " + kind + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& params,
                  const std::optional<std::string>& ring, const std::string& transversal,
                  const std::string& output, std::ostream& out) {
  auto need_ring = [&]() {
    if (!ring) throw UsageError("construct " + kind + " needs --ring");
    return ring_arg(*ring);
  };
  AnyStructure s;
  if (kind == "zn") {
    require_params(kind, params, 1);
    s = cyclic_group(parse_count(params[0], "n"));
  } else if (kind == "rect-band") {
    require_params(kind, params, 2);
    s = rect_band(parse_count(params[0], "p"), parse_count(params[1], "q"));
  } else if (kind == "complete-digraph") {
    require_params(kind, params, 1);
    s = complete_digraph_gg(parse_count(params[0], "n"));
  } else if (kind == "pair-groupoid") {
    require_params(kind, params, 1);
    s = pair_groupoid(parse_count(params[0], "n"));
  } else if (kind == "group-groupoid") {
    require_params(kind, params, 2);
    s = pair_groupoid_with_group(parse_count(params[0], "n"), magma_arg(params[1]));
  } else if (kind == "gstar") {
    require_params(kind, params, 1);
    const auto g = load_as<FiniteGroupoid>(params[0], "groupoid");
    const auto policy = parse_transversal(transversal);
    out << "transversal " << policy.describe() << '\n';
    s = gstar(g, choose_transversal(g, policy)).magma;
  } else if (kind == "ring") {
    require_params(kind, params, 0);
    s = need_ring();
  } else if (kind == "skew-ring") {
    require_params(kind, params, 0);
    s = skew_ring(need_ring());
  } else if (kind == "module") {
    require_params(kind, params, 0);
    s = regular_module(need_ring());
  } else if (kind == "cyclic-module") {
    require_params(kind, params, 2);
    s = cyclic_module(parse_count(params[0], "ring order"), parse_count(params[1], "n"));
  } else if (kind == "skew-pair-module") {
    if (params.size() == 1) {
      s = skew_pair_module(module_arg(params[0])).module;
    } else {
      require_params(kind, params, 0);
      s = skew_pair_module(regular_module(need_ring())).module;
    }
  } else if (kind == "pair-gg-groupoid") {
    require_params(kind, params, 1);
    s = pair_gg_groupoid(magma_arg(params[0]));
  } else if (kind == "pair-gm-groupoid") {
    if (params.size() == 1) {
      s = pair_gm_groupoid(module_arg(params[0]));
    } else {
      require_params(kind, params, 0);
      s = pair_gm_groupoid(regular_module(need_ring()));
    }
  } else if (kind == "product-module") {
    require_params(kind, params, 2);
    s = product_module(module_arg(params[0]), module_arg(params[1]));
  } else if (kind == "product-gm-groupoid") {
    if (params.empty()) throw UsageError("construct product-gm-groupoid needs at least one factor");
    std::vector<GMGroupoid> family;
    for (const auto& p : params) family.push_back(gm_arg(p));
    s = product_gm_groupoid(family);
  } else {
    throw UsageError("unknown construct kind '" + kind + "'");
  }
  for (const auto& p : save_structure(output, s)) out << "wrote " << p.string() << '\n';
  return kExitPass;
}

std::string render_map(const FiniteMagma& src, const FiniteMagma& dst, std::span<const Index> map) {
  std::string s;
  for (Index a = 0; a < map.size(); ++a) {
    if (a) s += ' ';
    s += src.label(a) + "->" + dst.label(map[a]);
  }
  return s;
}

int cmd_homs(const std::string& src_path, const std::string& dst_path, std::ostream& out) {
  const auto src = magma_arg(src_path);
  const auto dst = magma_arg(dst_path);
  const auto homs = enumerate_homs(src, dst);
  for (const auto& h : homs) out << "hom " << render_map(src, dst, h.map) << '\n';
  const bool gg = classify(src).certificate && classify(dst).certificate;
  if (gg) out << "PASS HOM-THM  f(e(a)) = e(f(a)), f(a^-1) = f(a)^-1 for every hom\n";
  out << "count " << homs.size() << '\n';
  return kExitPass;
}

int cmd_census(const std::string& n_arg, bool list, std::ostream& out) {
  const std::size_t n = parse_count(n_arg, "n");
  if (n < 1 || n > kMaxCensusOrder) throw UsageError("census order must be between 1 and 4");
  const Census c = enumerate_generalized_groups(n);
  out << "order " << c.order << '\n';
  out << "semigroups " << c.semigroups << '\n';
  for (auto k : {Classification::GeneralizedGroup, Classification::NormalGeneralizedGroup, Classification::Group}) {
    const auto it = c.counts.find(k);
    out << to_string(k) << ' ' << (it == c.counts.end() ? 0 : it->second) << '\n';
  }
  out << "abelian " << c.abelian << '\n';
  out << "total " << c.structures.size() << '\n';
  if (list) {
    for (std::size_t i = 0; i < c.structures.size(); ++i) {
      const auto& m = c.structures[i];
      const auto rep = classify(m);
      out << "\nstructure " << i << ' ' << to_string(rep.classification) << (rep.abelian ? " abelian" : "") << '\n';
      for (Index a = 0; a < m.size(); ++a) {
        for (Index b = 0; b < m.size(); ++b) out << (b ? " " : "") << m.label(m.op(a, b));
        out << '\n';
      }
    }
  }
  return kExitPass;
}

int cmd_gstar(const std::string& path, const std::string& transversal, const std::optional<std::string>& output,
              std::ostream& out) {
  const auto g = load_as<FiniteGroupoid>(path, "groupoid");
  const auto policy = parse_transversal(transversal);
  out << "transversal " << policy.describe() << '\n';
  const auto t = choose_transversal(g, policy);
  for (Index a = 0; a < g.object_count(); ++a)
    for (Index b = 0; b < g.object_count(); ++b)
      out << "h " << g.objects[a] << ' ' << g.objects[b] << ' ' << g.morphism(t(a, b)).label << '\n';
  const auto star = gstar(g, t);
  out << "thin " << (g.thin() ? "yes" : "no") << '\n';
  bool ok = report_magma(star.magma, out);
  const auto rep = classify(star.magma);
  const bool formula = rep.certificate && *rep.certificate == star.formula;
  out << (formula ? "PASS" : "FAIL") << " GSTAR-FORMULA  e(f) = h[dom f][cod f], -f = h[dom f][cod f] o f^-1 o h[dom f][cod f]\n";
  ok = ok && formula;
  if (output) {
    for (const auto& p : save_structure(*output, star.magma)) out << "wrote " << p.string() << '\n';
  }
  return finish(ok, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite generalized groups, modules and groupoids", "gengroup"};
  app.require_subcommand(1);

  std::string check_path;
  std::optional<std::string> expect;
  auto* check = app.add_subcommand("check", "verify a structure file");
  check->add_option("file", check_path)->required();
  check->add_option("--expect", expect, "classification floor for magma files");

  std::string kind;
  std::vector<std::string> params;
  std::optional<std::string> ring;
  std::string transversal = "lex";
  std::string output;
  auto* construct = app.add_subcommand("construct", "build a structure and write it to a file");
  construct->add_option("kind", kind)->required();
  construct->add_option("params", params);
  construct->add_option("--ring", ring, "zN or a ring file");
  construct->add_option("--transversal", transversal, "lex or seed:N");
  construct->add_option("-o,--output", output)->required();

  std::string hom_src, hom_dst;
  auto* homs = app.add_subcommand("homs", "list every magma homomorphism");
  homs->add_option("source", hom_src)->required();
  homs->add_option("target", hom_dst)->required();

  std::string census_n;
  bool list = false;
  auto* census = app.add_subcommand("census", "count generalized groups of order n");
  census->add_option("n", census_n)->required();
  census->add_flag("--list", list, "print every table");

  std::string gstar_path;
  std::string gstar_transversal = "lex";
  std::optional<std::string> gstar_output;
  auto* gs = app.add_subcommand("gstar", "totalize a connected groupoid");
  gs->add_option("groupoid", gstar_path)->required();
  gs->add_option("--transversal", gstar_transversal, "lex or seed:N");
  gs->add_option("-o,--output", gstar_output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  out << "$ gengroup";
  for (const auto& a : args) out << ' ' << a;
  out << '\n';
  try {
    if (*check) return cmd_check(check_path, expect, out);
    if (*construct) return cmd_construct(kind, params, ring, transversal, output, out);
    if (*homs) return cmd_homs(hom_src, hom_dst, out);
    if (*census) return cmd_census(census_n, list, out);
    if (*gs) return cmd_gstar(gstar_path, gstar_transversal, gstar_output, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructureError& e) {
    out << "FAIL " << e.witness().check << "  witness: " << e.witness().detail << '\n';
    return finish(false, out);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace gengroup
