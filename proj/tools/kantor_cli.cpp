// kantor: command-line front end. Exit codes: 0 all checks pass, 1 a check
// failed or a precondition was violated, 2 usage or parse error.

#include "kantor/replay/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace kantor;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

template <class A>
struct scalar_of;
template <class T>
struct scalar_of<AlgebraDef<T>> {
  using type = T;
};
template <class A>
using scalar_t = typename scalar_of<std::decay_t<A>>::type;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Output& out, const Json& doc, const std::string& text) {
  if (out.json()) std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

int emit_report(const Output& out, const ReplayReport& rep, bool allow_discrepancies) {
  if (out.json()) std::cout << rep.to_json().dump(2) << "\n";
  else std::cout << rep.to_text();
  return rep.exit_code(allow_discrepancies);
}

template <class T>
Json vec_json(const Vec<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <class T>
std::string matrix_text(const Matrix<T>& m, const std::string& indent) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += indent + "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + to_string(m(r, c));
    s += "]\n";
  }
  return s;
}

template <class T>
std::string vec_text(const Vec<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

FieldSpec parse_field(const std::string& s) {
  try {
    return FieldSpec::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

AlgebraTag parse_tag(const std::string& s) {
  try {
    return parse_algebra_tag(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::uint32_t require_prime(const FieldSpec& f, const std::string& what) {
  if (f.is_rational()) throw UsageError(what + " needs a finite field (--field gf<p>)");
  return f.p;
}

/// "1,0" as field elements, or a basis label such as "v2".
template <class Field>
Vec<typename Field::value_type> parse_vector(const Field& fld, const AlgebraDef<typename Field::value_type>& alg,
                                             const std::string& text) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (alg.labels()[i] == text) return unit_vector(alg.dim(), i, fld.one());
  Vec<typename Field::value_type> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      v.push_back(fld.parse(piece));
    } catch (const std::exception&) {
      throw UsageError("--quasi-unit: cannot read '" + piece + "' as a field element or basis label");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != alg.dim()) {
    throw UsageError("--quasi-unit: expected " + std::to_string(alg.dim()) + " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

// ---- table ---------------------------------------------------------------

int run_table(const Output& out, const std::string& corrupt) {
  auto table = w2_published_table();
  if (!corrupt.empty()) {
    // Test mode: perturb one expected cell, e.g. "e2e3".
    unsigned i = 0, j = 0;
    if (std::sscanf(corrupt.c_str(), "e%ue%u", &i, &j) != 2 || i < 1 || i > 8 || j < 1 || j > 8) {
      throw UsageError("--corrupt expects a cell such as e2e3");
    }
    auto& cell = table[i - 1][j - 1];
    if (cell.index) cell.coef += 1;
    else cell = {1, 1};
  }
  auto rep = cmd_table(table);
  if (!corrupt.empty()) rep.set_parameter("corrupted-cell", corrupt);
  return emit_report(out, rep, false);
}

// ---- canonicalize ----------------------------------------------------------

int run_canonicalize(const Output& out, const std::string& file, const std::string& quasi_unit) {
  const auto af = read_algebra_file(file);
  return std::visit(
      [&](const auto& alg) -> int {
        return with_field(af.field, [&](const auto& fld) -> int {
          using T = typename std::decay_t<decltype(fld)>::value_type;
          if constexpr (!std::is_same_v<T, scalar_t<decltype(alg)>>) {
            throw std::logic_error("field mismatch");
          } else {
            const auto e = parse_vector(fld, alg, quasi_unit);
            const auto form = canonical_quasiunit_form(fld, alg, e);
            Json doc;
            doc["algebra_file"] = file;
            doc["field"] = af.field.name();
            doc["quasi_unit"] = vec_json(e);
            doc["family"] = idempotent_tag_name(form.label.family.tag);
            doc["params"] = form.label.family.tag == IdempotentTag::w1
                                ? Json::array({to_string(form.label.family.c)})
                                : Json::array({to_string(form.label.family.c), to_string(form.label.family.d)});
            doc["case"] = form.label.case_id;
            doc["transform"] = {{"a", to_string(form.transform.a)}, {"b", to_string(form.transform.b)}};
            doc["l_member"] = {{"family", l_tag_name(form.member.tag)}, {"label", form.member.label()},
                               {"t", to_string(form.member.t)}};
            if (form.member.tag != LTag::W1) doc["l_member"][form.member.tag == LTag::W4 ? "u" : "s"] = to_string(form.member.s);
            doc["isomorphism"] = matrix_json(form.iso);
            std::string text = "l_member: " + form.member.label() + "\n";
            text += "family: " + l_tag_name(form.member.tag) + ", t = " + to_string(form.member.t) + "\n";
            text += "idempotent: " + form.label.family.label() + " (" + form.label.case_id + ")\n";
            text += "transform: S_b T_a with " + to_string(form.transform) + "\n";
            text += "isomorphism (columns are images of the file's basis):\n" + matrix_text(form.iso, "  ");
            emit(out, doc, text);
            return 0;
          }
        });
      },
      af.algebra);
}

// ---- conservative ----------------------------------------------------------

int run_conservative(const Output& out, const std::string& file) {
  const auto af = read_algebra_file(file);
  return std::visit(
      [&](const auto& alg) -> int {
        using T = scalar_t<decltype(alg)>;
        T one;
        if constexpr (std::is_same_v<T, Rational>) one = RationalField{}.one();
        else one = PrimeField(af.field.p).one();
        const auto w = conservativity_witness(alg, one);
        Json doc;
        doc["algebra_file"] = file;
        doc["field"] = af.field.name();
        doc["conservative"] = w.has_value();
        std::string text = std::string("conservative: ") + (w ? "yes" : "no") + "\n";
        if (w) {
          const auto residual = conservativity_residual(alg, w->f, one);
          doc["residual"] = residual;
          doc["witness"] = nlohmann::ordered_json::parse(write_algebra(w->f, af.field));
          text += "residual: " + std::to_string(residual) + " failing basis quadruples\n";
          text += "witness F:\n" + write_algebra(w->f, af.field);
          emit(out, doc, text);
          return residual == 0 ? 0 : kExitFail;
        }
        emit(out, doc, text);
        return kExitFail;
      },
      af.algebra);
}

// ---- ideals ----------------------------------------------------------------

std::optional<AlgebraTag> identify_algebra(const AlgebraFile& af) {
  return std::visit(
      [&](const auto& alg) -> std::optional<AlgebraTag> {
        for (auto tag : detail::kAllAlgebras) {
          const bool match = with_field(af.field, [&](const auto& fld) {
            using T = typename std::decay_t<decltype(fld)>::value_type;
            if constexpr (std::is_same_v<T, scalar_t<decltype(alg)>>) {
              return algebra_by_tag(fld, tag).tensor() == alg.tensor();
            } else {
              return false;
            }
          });
          if (match) return tag;
        }
        return std::nullopt;
      },
      af.algebra);
}

struct IdealArgs {
  std::string file, algebra, side = "left", mode = "full", field = "gf5";
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  bool allow_artifacts = false;
};

int run_ideal_census(const Output& out, const IdealArgs& args) {
  AlgebraTag tag;
  if (!args.file.empty()) {
    const auto found = identify_algebra(read_algebra_file(args.file));
    if (!found) throw UsageError(args.file + ": not one of the bundled algebras W(2), W_2, S_2; no classification applies");
    tag = *found;
  } else if (!args.algebra.empty()) {
    tag = parse_tag(args.algebra);
  } else {
    throw UsageError("give an algebra file or --algebra");
  }
  const auto p = require_prime(parse_field(args.field), "an ideal census");
  IdealSide side;
  if (args.side == "left") side = IdealSide::left;
  else if (args.side == "right") side = IdealSide::right;
  else throw UsageError("--side must be left or right");
  CensusMode mode;
  if (args.sample) mode = {CensusModeKind::sample, *args.sample, args.seed};
  else if (args.mode == "full") mode = {CensusModeKind::full, 0, 0};
  else if (args.mode == "principal") mode = {CensusModeKind::principal, 0, 0};
  else if (args.mode == "sample") throw UsageError("--mode sample needs --sample N");
  else throw UsageError("--mode must be full, principal or sample");

  const auto r = ideal_census_gfp(tag, p, side, mode);
  Json doc;
  doc["algebra"] = r.algebra;
  doc["field"] = r.field;
  doc["side"] = r.side;
  doc["mode"] = r.mode;
  doc["sampled"] = r.sampled;
  doc["examined"] = r.examined;
  doc["ideals"] = Json::array();
  std::string text = r.algebra + " " + r.side + " ideals over " + r.field + " (" + r.mode + (r.sampled ? ", sampled" : "") +
                     "): examined " + std::to_string(r.examined) + "\n";
  std::vector<std::string> nontrivial;
  for (const auto& i : r.ideals) {
    doc["ideals"].push_back({{"label", i.label}, {"dim", i.dim}, {"basis", i.basis}, {"generators", i.generators}});
    if (i.label != "Trivial_Zero" && i.label != "Trivial_Full") nontrivial.push_back(i.label + " (dim " + std::to_string(i.dim) + ")");
  }
  doc["nontrivial_count"] = r.nontrivial_count();
  doc["discrepancies"] = r.discrepancies;
  doc["notes"] = r.notes;
  if (nontrivial.empty()) {
    text += "nontrivial: none\n";
  } else {
    text += "nontrivial: " + std::to_string(nontrivial.size()) + "\n";
    std::map<std::string, std::size_t> grouped;
    for (const auto& n : nontrivial) ++grouped[n];
    for (const auto& [n, c] : grouped) text += "  " + n + (c > 1 ? " x" + std::to_string(c) : "") + "\n";
  }
  for (const auto& d : r.discrepancies) text += "discrepancy: " + d + "\n";
  emit(out, doc, text);
  return r.discrepancies.empty() || args.allow_artifacts ? 0 : kExitFail;
}

// ---- automorphisms / derivations --------------------------------------------

int run_automorphisms(const Output& out, const std::string& algebra, const std::string& field) {
  const auto tag = parse_tag(algebra);
  const auto p = require_prime(parse_field(field), "the automorphism search");
  const PrimeField fld(p);
  const auto group = automorphism_group_gfp(tag, p);
  Json doc;
  doc["algebra"] = tag_name(tag);
  doc["field"] = fld.name();
  doc["order"] = group.size();
  doc["is_group"] = is_matrix_group(group, fld.one());
  doc["elements"] = Json::array();
  std::string text = "Aut(" + tag_name(tag) + ") over " + fld.name() + ": order " + std::to_string(group.size()) + "\n";
  std::size_t unmatched = 0;
  for (const auto& g : group) {
    std::optional<AffineParam<ModInt>> ab;
    for (std::uint32_t a = 0; a < p && !ab; ++a)
      for (std::uint32_t b = 1; b < p && !ab; ++b)
        if (affine_map(fld, {fld.element(a), fld.element(b)}, tag) == g) ab = AffineParam<ModInt>{fld.element(a), fld.element(b)};
    Json el{{"matrix", matrix_json(g)}};
    if (ab) {
      el["a"] = to_string(ab->a);
      el["b"] = to_string(ab->b);
      text += "  S_b T_a with " + to_string(*ab) + "\n";
    } else {
      ++unmatched;
      text += "  not of the form S_b T_a:\n" + matrix_text(g, "    ");
    }
    doc["elements"].push_back(el);
  }
  doc["all_of_form_SbTa"] = unmatched == 0;
  text += unmatched == 0 ? "every element is S_b T_a\n" : std::to_string(unmatched) + " elements are not S_b T_a\n";
  emit(out, doc, text);
  return unmatched == 0 ? 0 : kExitFail;
}

int run_derivations(const Output& out, const std::string& algebra, bool ternary) {
  const auto tag = parse_tag(algebra);
  const RationalField q;
  const auto alg = algebra_by_tag(q, tag);
  const std::size_t n = alg.dim();
  Json doc;
  doc["algebra"] = tag_name(tag);
  doc["field"] = "Q";
  std::string text;
  if (ternary) {
    const auto space = ternary_derivation_space(alg, q.one());
    doc["kind"] = "ternary";
    doc["dim"] = space.dim();
    doc["basis"] = Json::array();
    for (const auto& v : space.basis_vectors()) {
      const auto t = TernaryTriple<Rational>::unstack(v, n);
      doc["basis"].push_back({{"D", matrix_json(t.d)}, {"F", matrix_json(t.f)}, {"G", matrix_json(t.g)}});
    }
    text = "ternary derivations of " + tag_name(tag) + " over Q: dim " + std::to_string(space.dim()) + "\n";
  } else {
    const auto space = derivation_space(alg, q.one());
    doc["kind"] = "derivation";
    doc["dim"] = space.dim();
    doc["basis"] = Json::array();
    text = "derivations of " + tag_name(tag) + " over Q: dim " + std::to_string(space.dim()) + "\n";
    std::size_t k = 0;
    for (const auto& v : space.basis_vectors()) {
      const auto d = unflatten(v, n);
      doc["basis"].push_back(matrix_json(d));
      text += "D" + std::to_string(++k) + ":\n" + matrix_text(d, "  ");
    }
  }
  emit(out, doc, text);
  return 0;
}

// ---- census ----------------------------------------------------------------

int run_idempotent_census(const Output& out, const std::string& field) {
  const auto p = require_prime(parse_field(field), "the idempotent census");
  const auto r = idempotent_census_gfp(p);
  Json doc;
  doc["field"] = r.field;
  doc["elements_scanned"] = r.elements_scanned;
  doc["total_idempotents"] = r.total_idempotents;
  doc["per_family_counts"] = r.per_family_counts;
  doc["orbit_counts"] = r.orbit_counts;
  doc["automorphisms"] = r.automorphisms;
  doc["disjointness"] = r.disjointness_violations == 0 ? "ok" : "violations";
  doc["disjointness_violations"] = r.disjointness_violations;
  doc["invariance_failures"] = r.invariance_failures;
  doc["orbit_crosscheck"] = r.orbit_crosscheck_ok() ? "ok" : "mismatch";
  doc["falsifications"] = r.falsifications;
  std::string text = "idempotent census over " + r.field + ": " + std::to_string(r.elements_scanned) + " elements, " +
                     std::to_string(r.total_idempotents) + " nonzero idempotents\n";
  for (const auto& [k, v] : r.per_family_counts) text += "  " + k + ": " + std::to_string(v) + "\n";
  text += "disjointness: " + std::string(r.disjointness_violations == 0 ? "ok" : "violations") + "\n";
  text += "orbit_crosscheck: " + std::string(r.orbit_crosscheck_ok() ? "ok" : "mismatch") + "\n";
  text += "label invariance failures: " + std::to_string(r.invariance_failures) + "\n";
  for (const auto& f : r.falsifications) text += "falsification: " + f + "\n";
  emit(out, doc, text);
  return r.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Kantor algebra W(2) and its subalgebras W_2, S_2"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--output", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string corrupt;
  auto* table = app.add_subcommand("table", "Recompute the e-basis multiplication table of W(2)");
  table->add_option("--corrupt", corrupt, "test mode: perturb one expected cell, e.g. e2e3");

  ReplayOptions replay;
  std::string field = "gf5", scope = "all";
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  bool allow_artifacts = false;
  auto* verify = app.add_subcommand("verify-lemmas", "Replay every lemma, theorem and corollary as checks");
  verify->add_option("--field", field, "Q or gf<p> for the finite-field oracles")->capture_default_str();
  verify->add_option("--scope", scope, "table, ideals, automorphisms, idempotents or all")->capture_default_str();
  verify->add_option("--sample", sample, "sample the large censuses with N seeded draws");
  verify->add_option("--seed", seed, "seed for random parameters and sampling")->capture_default_str();
  verify->add_flag("--allow-char-artifacts", allow_artifacts, "do not fail on characteristic discrepancies");

  std::string file, quasi_unit;
  auto* canon = app.add_subcommand("canonicalize", "Canonical L-form of a 2-dimensional algebra with left quasi-unit");
  canon->add_option("file", file, "algebra file")->required();
  canon->add_option("--quasi-unit", quasi_unit, "the quasi-unit: comma-separated coordinates or a basis label")->required();

  auto* conservative = app.add_subcommand("conservative", "Search for an associated multiplication");
  conservative->add_option("file", file, "algebra file")->required();

  IdealArgs ideal_args;
  auto* ideals = app.add_subcommand("ideals", "Left or right ideal census over GF(p)");
  auto add_ideal_options = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", ideal_args.algebra, "w2, w2c or s2");
    cmd->add_option("--side", ideal_args.side, "left or right")->capture_default_str();
    cmd->add_option("--mode", ideal_args.mode, "full, principal or sample")->capture_default_str();
    cmd->add_option("--field", ideal_args.field, "gf<p>")->capture_default_str();
    cmd->add_option("--sample", ideal_args.sample, "sample N random generators");
    cmd->add_option("--seed", ideal_args.seed, "sampling seed")->capture_default_str();
    cmd->add_flag("--allow-char-artifacts", ideal_args.allow_artifacts, "do not fail on characteristic discrepancies");
  };
  ideals->add_option("file", ideal_args.file, "algebra file (one of the bundled algebras)");
  add_ideal_options(ideals);

  std::string algebra = "w2", aut_field = "gf5";
  auto* automorphisms = app.add_subcommand("automorphisms", "Automorphism group over GF(p)");
  automorphisms->add_option("--algebra", algebra, "w2, w2c or s2")->capture_default_str();
  automorphisms->add_option("--field", aut_field, "gf<p>")->capture_default_str();

  bool ternary = false;
  auto* derivations = app.add_subcommand("derivations", "Basis of the derivation space over Q");
  derivations->add_option("--algebra", algebra, "w2, w2c or s2")->capture_default_str();
  derivations->add_flag("--ternary", ternary, "ternary derivations (D, F, G) instead");

  std::string what = "idempotents";
  auto* census = app.add_subcommand("census", "GF(p) census of idempotents or ideals");
  census->add_option("--what", what, "idempotents or ideals")->check(CLI::IsMember({"idempotents", "ideals"}))->capture_default_str();
  add_ideal_options(census);

  std::string dir = "fixtures";
  auto* exportf = app.add_subcommand("export-fixtures", "Write the bundled algebra files");
  exportf->add_option("dir", dir, "target directory")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->add_option("--output", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return run_table(out, corrupt);
    if (*verify) {
      replay.field = parse_field(field);
      try {
        replay.scope = parse_scope(scope);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      replay.sample = sample;
      replay.seed = seed;
      return emit_report(out, cmd_verify_lemmas(replay), allow_artifacts);
    }
    if (*canon) return run_canonicalize(out, file, quasi_unit);
    if (*conservative) return run_conservative(out, file);
    if (*ideals) return run_ideal_census(out, ideal_args);
    if (*automorphisms) return run_automorphisms(out, algebra, aut_field);
    if (*derivations) return run_derivations(out, algebra, ternary);
    if (*census) {
      if (what == "ideals") return run_ideal_census(out, ideal_args);
      return run_idempotent_census(out, ideal_args.field);
    }
    if (*exportf) {
      export_fixtures(dir);
      std::cout << "wrote " << bundled_fixtures().size() << " fixtures to " << dir << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FalsificationError& e) {
    std::cerr << "FALSIFICATION: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
