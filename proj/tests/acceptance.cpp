// Acceptance suite: one line per criterion, nonzero exit if any fails.
// KANTOR_CLI and KANTOR_FIXTURES are set by the build.

#include "kantor/replay/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

using namespace kantor;

namespace {

const RationalField QQ;

struct Outcome {
  bool ok = true;
  std::string details;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details += (details.empty() ? "" : "; ") + what;
    }
  }
};

struct Timed {
  double seconds;
  explicit Timed(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

Rational rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  return Rational(num(rng), den(rng));
}

Rational rnd_nonzero(std::mt19937_64& rng) {
  for (;;) {
    auto r = rnd_rational(rng);
    if (!is_zero(r)) return r;
  }
}

Vec<Rational> e(int k) { return unit_vector(8, static_cast<std::size_t>(k - 1), QQ.one()); }

// 1. Every cell of the e-basis table.
Outcome table_reproduction() {
  Outcome o;
  const auto w2 = kantor_algebra(QQ, 2, Vec<Rational>{QQ.one(), QQ.zero()});
  const auto change = e_change_of_basis(QQ);
  const auto back = *inverse(change, QQ.one());
  const auto& table = w2_published_table();
  int matched = 0;
  const Timed t([&] {
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j) {
        const auto prod = mat_vec(back, eval_mul(w2, change.column(static_cast<std::size_t>(i - 1)),
                                                 change.column(static_cast<std::size_t>(j - 1))));
        Vec<Rational> want(8);
        const auto cell = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (cell.index) want[static_cast<std::size_t>(cell.index - 1)] = Rational(cell.coef);
        if (prod == want) ++matched;
        else o.require(false, "cell e" + std::to_string(i) + "e" + std::to_string(j));
      }
  });
  o.require(t.seconds < 1.0, "runtime " + std::to_string(t.seconds) + " s");
  o.details = std::to_string(matched) + "/64 cells exact" + (o.details.empty() ? "" : "; " + o.details);
  return o;
}

// 2. Associated multiplication with zero residual for the three algebras.
Outcome conservativity() {
  Outcome o;
  for (auto tag : detail::kAllAlgebras) {
    const auto alg = algebra_by_tag(QQ, tag);
    std::optional<ConservativityWitness<Rational>> w;
    const Timed t([&] { w = conservativity_witness(alg, QQ.one()); });
    o.require(w.has_value(), tag_name(tag) + " has no witness");
    if (w) o.require(conservativity_residual(alg, w->f, QQ.one()) == 0, tag_name(tag) + " residual nonzero");
    if (tag == AlgebraTag::w2) {
      o.require(t.seconds < 60.0, "W(2) runtime " + std::to_string(t.seconds) + " s");
      if (o.ok) o.details = "W(2), W_2, S_2 witnesses with residual 0; W(2) solved in " + std::to_string(t.seconds) + " s";
    }
  }
  return o;
}

// 3. Ann_l dimensions and spans.
Outcome annihilators() {
  Outcome o;
  const Timed t([&] {
    const std::pair<AlgebraTag, std::size_t> dims[] = {{AlgebraTag::w2, 4}, {AlgebraTag::w2_comm, 2}, {AlgebraTag::s2, 1}};
    for (auto [tag, dim] : dims) {
      const auto alg = algebra_by_tag(QQ, tag);
      const auto annl = left_annihilator(alg, QQ.one());
      o.require(annl.dim() == dim, tag_name(tag) + " dim " + std::to_string(annl.dim()));
      o.require(annl == Subspace<Rational>::span(alg.dim(), annihilator_generators(QQ, tag)), tag_name(tag) + " span differs");
    }
  });
  o.require(t.seconds < 1.0, "runtime");
  if (o.ok) o.details = "dims (4, 2, 1), spans equal the stated generating sets";
  return o;
}

// 4. Left-ideal property of every classified family, right-ideal property of Ann_l.
Outcome ideal_lemmas_exact() {
  Outcome o;
  std::mt19937_64 rng(404);
  int checked = 0;
  const Timed t([&] {
    std::vector<IdealFamily<Rational>> fams{make_family<Rational>(IdealTag::I1), make_family<Rational>(IdealTag::I2),
                                            make_family<Rational>(IdealTag::W2_4dim), make_family<Rational>(IdealTag::W2_2dim)};
    for (int i = 0; i < 20; ++i) {
      fams.push_back(make_family(IdealTag::W_ab, rnd_rational(rng), rnd_nonzero(rng)));
      fams.push_back(make_family(IdealTag::w_ab, rnd_nonzero(rng), rnd_rational(rng)));
    }
    for (const auto& f : fams) {
      ++checked;
      o.require(is_left_ideal(algebra_by_tag(QQ, f.algebra), family_subspace(QQ, f), QQ.one()), f.label() + " not a left ideal");
    }
    for (auto tag : detail::kAllAlgebras) {
      const auto alg = algebra_by_tag(QQ, tag);
      ++checked;
      o.require(is_right_ideal(alg, left_annihilator(alg, QQ.one()), QQ.one()), "Ann_l(" + tag_name(tag) + ") not a right ideal");
    }
  });
  o.require(t.seconds < 5.0, "runtime");
  if (o.ok) o.details = std::to_string(checked) + " subspaces verified";
  return o;
}

// 5. GF(5) censuses.
Outcome ideal_lemmas_oracle() {
  Outcome o;
  auto labels = [](const IdealCensusReport& r) {
    std::set<std::string> s;
    for (const auto& i : r.ideals)
      if (i.label != "Trivial_Zero" && i.label != "Trivial_Full") s.insert(i.label);
    return s;
  };
  auto clean = [&](const IdealCensusReport& r, const std::string& name) {
    for (const auto& i : r.ideals) o.require(i.label != "UNCLASSIFIED", name + ": unclassified ideal");
    for (const auto& d : r.discrepancies) o.require(false, name + ": " + d);
  };
  const CensusMode full{CensusModeKind::full, 0, 0}, principal{CensusModeKind::principal, 0, 0};
  std::string times;

  IdealCensusReport s2l, s2r;
  const Timed ts([&] {
    s2l = ideal_census_gfp(AlgebraTag::s2, 5, IdealSide::left, full);
    s2r = ideal_census_gfp(AlgebraTag::s2, 5, IdealSide::right, full);
  });
  clean(s2l, "S_2 left");
  clean(s2r, "S_2 right");
  o.require(labels(s2l).empty(), "S_2 has a nontrivial left ideal");
  o.require(ts.seconds < 10.0, "S_2 census runtime");

  IdealCensusReport w2cl, w2cr;
  const Timed tw([&] {
    w2cl = ideal_census_gfp(AlgebraTag::w2_comm, 5, IdealSide::left, full);
    w2cr = ideal_census_gfp(AlgebraTag::w2_comm, 5, IdealSide::right, full);
  });
  clean(w2cl, "W_2 left");
  clean(w2cr, "W_2 right");
  o.require(labels(w2cl) == std::set<std::string>{"W2_4dim", "W2_2dim"}, "W_2 left ideals differ from <e1..e4>, <e5,e6>");
  o.require(tw.seconds < 600.0, "W_2 census runtime");

  IdealCensusReport w2l, w2r;
  const Timed tp([&] {
    w2l = ideal_census_gfp(AlgebraTag::w2, 5, IdealSide::left, principal);
    w2r = ideal_census_gfp(AlgebraTag::w2, 5, IdealSide::right, principal);
  });
  clean(w2l, "W(2) principal left");
  clean(w2r, "W(2) principal right");
  o.require(w2l.elements_covered == 390625 && w2r.elements_covered == 390625, "W(2) census does not cover 5^8 elements");
  o.require(tp.seconds < 600.0, "W(2) census runtime");

  if (o.ok) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "S_2 none (%.1f s); W_2 {<e1..e4>, <e5,e6>} over %llu subspaces (%.1f s); W(2) principal %zu/%zu ideals, 0 unclassified (%.1f s)",
                  ts.seconds, static_cast<unsigned long long>(w2cl.examined), tw.seconds, w2l.ideals.size(),
                  w2r.ideals.size(), tp.seconds);
    o.details = buf;
  }
  return o;
}

// 6. Complements of 30 classified left ideals.
Outcome complement_corollary() {
  Outcome o;
  std::mt19937_64 rng(606);
  std::vector<IdealFamily<Rational>> fams{make_family<Rational>(IdealTag::I1), make_family<Rational>(IdealTag::I2),
                                          make_family<Rational>(IdealTag::W2_4dim), make_family<Rational>(IdealTag::W2_2dim)};
  for (int i = 0; i < 13; ++i) {
    fams.push_back(make_family(IdealTag::W_ab, rnd_nonzero(rng), rnd_rational(rng)));
    fams.push_back(make_family(IdealTag::w_ab, rnd_rational(rng), rnd_nonzero(rng)));
  }
  const Timed t([&] {
    for (const auto& f : fams) {
      const auto alg = algebra_by_tag(QQ, f.algebra);
      const auto y1 = family_subspace(QQ, f);
      const auto y2 = complement_left_ideal(QQ, f.algebra, y1);
      o.require(is_left_ideal(alg, y2, QQ.one()), f.label() + ": complement not a left ideal");
      o.require(y1.dim() + y2.dim() == alg.dim(), f.label() + ": dimensions do not add up");
      o.require(subspace_intersect(y1, y2, QQ.one()).is_zero(), f.label() + ": intersection nonzero");
    }
  });
  o.require(fams.size() == 30, "expected 30 ideals");
  o.require(t.seconds < 5.0, "runtime");
  if (o.ok) o.details = "30 direct-sum complements verified";
  return o;
}

// 7. Phi-image, composition laws, exponential, automorphism groups over GF(5).
Outcome automorphisms() {
  Outcome o;
  std::mt19937_64 rng(707);
  const Timed t([&] {
    const auto w2 = w2_algebra(QQ);
    const Vec<Rational> v1{QQ.one(), QQ.zero()};
    for (int i = 0; i < 50; ++i) {
      const AffineParam<Rational> g{rnd_rational(rng), rnd_nonzero(rng)};
      o.require(is_algebra_automorphism(w2, affine_map(QQ, g)), "Phi(" + to_string(g) + ") is not an automorphism");
      const auto a = rnd_rational(rng), b = rnd_nonzero(rng);
      o.require(s_map(QQ, b) * t_map(QQ, a) == t_map(QQ, a * b) * s_map(QQ, b), "S_b T_a != T_ab S_b");
      const auto f = v2_matrix(g), h = v2_matrix(AffineParam<Rational>{a, b});
      o.require(induced_automorphism(QQ, f * h, v1) == induced_automorphism(QQ, f, v1) * induced_automorphism(QQ, h, v1),
                "Phi is not multiplicative");
    }
    const auto l7 = left_operator(w2, e(7));
    for (int i = 0; i < 10; ++i) {
      const auto a = rnd_rational(rng);
      o.require(exp_nilpotent(scaled(l7, a), QQ.one()) == t_map(QQ, a), "exp(a L_e7) != T_a");
    }
    const PrimeField f5(5);
    for (auto tag : {AlgebraTag::s2, AlgebraTag::w2_comm}) {
      const auto group = automorphism_group_gfp(tag, 5);
      o.require(group.size() == 20, tag_name(tag) + ": order " + std::to_string(group.size()));
      for (const auto& g : group) {
        bool found = false;
        for (std::uint32_t a = 0; a < 5 && !found; ++a)
          for (std::uint32_t b = 1; b < 5 && !found; ++b) found = affine_map(f5, {f5.element(a), f5.element(b)}, tag) == g;
        o.require(found, tag_name(tag) + ": element not of the form S_b T_a");
      }
    }
  });
  o.require(t.seconds < 120.0, "runtime");
  if (o.ok) o.details = "50 Phi-images, laws and exp exact; |Aut(S_2)| = |Aut(W_2)| = 20 over GF(5), all S_b T_a";
  return o;
}

// 8. Derivations and the ternary corollary.
Outcome derivations() {
  Outcome o;
  std::mt19937_64 rng(808);
  const Timed t([&] {
    const auto w2 = w2_algebra(QQ);
    const auto der = derivation_space(w2, QQ.one());
    o.require(der.contains(flatten(left_operator(w2, e(7)))), "L_e7 not a derivation");
    o.require(der.contains(flatten(left_operator(w2, e(8)))), "L_e8 not a derivation");
    for (auto tag : detail::kAllAlgebras) {
      const auto alg = algebra_by_tag(QQ, tag);
      const std::size_t n = alg.dim();
      const auto tern = ternary_derivation_space(alg, QQ.one());
      const auto ann = left_annihilator(alg, QQ.one()).basis_vectors();
      for (int i = 0; i < 10; ++i) {
        Matrix<Rational> phi(n, n);
        for (std::size_t c = 0; c < n; ++c)
          for (const auto& a : ann) {
            const auto k = rnd_rational(rng);
            for (std::size_t r = 0; r < n; ++r) phi(r, c) += k * a[r];
          }
        const TernaryTriple<Rational> tr(Matrix<Rational>(n, n), phi, Matrix<Rational>(n, n));
        o.require(tern.contains(tr.stacked()), tag_name(tag) + ": (0, phi, 0) outside the ternary derivations");
      }
    }
  });
  o.require(t.seconds < 30.0, "runtime");
  if (o.ok) o.details = "L_e7, L_e8 in Der(W(2)); 30 maps (0, phi, 0) are ternary derivations";
  return o;
}

IdempotentFamily<Rational> random_family(std::mt19937_64& rng) {
  static const Rational reps[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-6), Rational(15)};
  const auto tag = kIdempotentTags[rng() % 4];
  if (tag == IdempotentTag::w4) return {tag, rnd_rational(rng), reps[rng() % 7]};
  return {tag, rnd_rational(rng), tag == IdempotentTag::w1 ? Rational(0) : rnd_rational(rng)};
}

// 9. Idempotent theorem.
Outcome idempotent_theorem() {
  Outcome o;
  std::mt19937_64 rng(909);
  const Timed t([&] {
    for (auto tag : kIdempotentTags) o.require(parametric_idempotent_check(tag), idempotent_tag_name(tag) + " not idempotent");
    const auto w2 = w2_algebra(QQ);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_family(rng);
      o.require(canonicalize_idempotent(QQ, family_element(QQ, f), &w2).family == f, f.label() + " does not round-trip");
    }
    for (int i = 0; i < 50; ++i) {
      const auto f = random_family(rng);
      const auto x = mat_vec(affine_map(QQ, {rnd_rational(rng), rnd_nonzero(rng)}), family_element(QQ, f));
      const auto base = canonicalize_idempotent(QQ, x, &w2);
      const auto moved = canonicalize_idempotent(QQ, mat_vec(affine_map(QQ, {rnd_rational(rng), rnd_nonzero(rng)}), x), &w2);
      o.require(base.family == f && moved.family == f, f.label() + ": label changes along the orbit");
    }
  });
  o.require(t.seconds < 30.0, "runtime");
  if (o.ok) o.details = "4 polynomial identities, 50 round-trips, 50 orbit-invariance triples";
  return o;
}

// 10. Idempotent census over GF(5).
Outcome idempotent_census() {
  Outcome o;
  IdempotentCensusReport r;
  const Timed t([&] { r = idempotent_census_gfp(5); });
  o.require(r.falsifications.empty(), "falsification events");
  o.require(r.disjointness_violations == 0, "disjointness violations");
  o.require(r.invariance_failures == 0, "label invariance failures");
  o.require(r.orbit_crosscheck_ok(), "per-family counts differ from orbit enumeration");
  std::uint64_t sum = 0;
  for (const auto& [k, v] : r.per_family_counts) sum += v;
  o.require(sum == r.total_idempotents, "not every idempotent classified");
  o.require(t.seconds < 120.0, "runtime");
  if (o.ok) {
    o.details = std::to_string(r.total_idempotents) + " nonzero idempotents in " + std::to_string(r.elements_scanned) +
                " elements, each in exactly one family; orbit counts agree";
  }
  return o;
}

// 11. L correspondences and fixed points on the bundled fixture files.
Outcome l_correspondences() {
  Outcome o;
  std::mt19937_64 rng(1111);
  std::size_t fixtures = 0;
  const Timed t([&] {
    for (auto tag : {LTag::W1, LTag::W2, LTag::W3})
      o.require(l_correspondence_check_symbolic(tag), l_tag_name(tag) + " correspondence fails");
    const Rational reps[] = {Rational(1), Rational(-1), Rational(2), Rational(-3), Rational(5)};
    for (int i = 0; i < 10; ++i) {
      const LAlgebra<Rational> l{LTag::W4, rnd_rational(rng), reps[rng() % 5]};
      o.require(l_correspondence_check(QQ, l), l.label() + " correspondence fails");
    }
    for (const auto& entry : std::filesystem::directory_iterator(KANTOR_FIXTURES)) {
      const auto name = entry.path().filename().string();
      if (name.rfind("L_", 0) != 0) continue;
      ++fixtures;
      const auto af = read_algebra_file(entry.path().string());
      const auto& alg = std::get<AlgebraDef<Rational>>(af.algebra);
      const auto form = canonical_quasiunit_form(QQ, alg, Vec<Rational>{QQ.one(), QQ.zero()});
      const auto member = l_algebra(QQ, form.member);
      o.require(member.tensor() == alg.tensor() && form.iso == Matrix<Rational>::identity(2, QQ.one()),
                name + " is not a fixed point");
    }
  });
  o.require(fixtures >= 4, "found only " + std::to_string(fixtures) + " L fixtures");
  o.require(t.seconds < 10.0, "runtime");
  if (o.ok) o.details = "W1-W3 symbolic, W4 at 10 samples, " + std::to_string(fixtures) + " fixtures are fixed points";
  return o;
}

// 12. The CLI end to end, twice, byte-identical.
Outcome end_to_end() {
  Outcome o;
  auto run = [&](std::string& output) {
    const std::string cmd = std::string("\"") + KANTOR_CLI + "\" verify-lemmas --field gf5 --output json";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string first, second;
  int c1 = -1, c2 = -1;
  const Timed t([&] {
    c1 = run(first);
    c2 = run(second);
  });
  o.require(c1 == 0 && c2 == 0, "exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
  o.require(first == second, "reports differ between runs");
  o.require(!first.empty(), "empty report");
  o.require(t.seconds / 2 < 900.0, "runtime");
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "exit 0 twice, identical %zu-byte reports, %.1f s per run", first.size(), t.seconds / 2);
    o.details = buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"Table reproduction", table_reproduction},
      {"Conservativity", conservativity},
      {"Annihilators", annihilators},
      {"Ideal lemmas, exact side", ideal_lemmas_exact},
      {"Ideal lemmas, oracle side", ideal_lemmas_oracle},
      {"Complement corollary", complement_corollary},
      {"Automorphisms", automorphisms},
      {"Derivations", derivations},
      {"Idempotent theorem", idempotent_theorem},
      {"Idempotent census", idempotent_census},
      {"L correspondences", l_correspondences},
      {"End-to-end", end_to_end},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.details = std::string("exception: ") + ex.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << index << ". " << name << ": " << o.details << std::endl;
  }
  std::cout << (12 - failed) << "/12 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
