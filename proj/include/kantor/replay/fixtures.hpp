#pragma once

// The bundled algebra files: W(2), W_2, S_2 in the e-basis over Q and the
// L-family members at a few fixed parameters.

#include "kantor/algebra/algebra_io.hpp"
#include "kantor/idempotents/l_family.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace kantor {

struct Fixture {
  std::string file_name;
  std::string text;
};

inline std::vector<LAlgebra<Rational>> l_fixture_members() {
  return {{LTag::W1, Rational(7), Rational(0)},
          {LTag::W2, Rational(3), Rational(-1)},
          {LTag::W3, Rational(2), Rational(1, 2)},
          {LTag::W4, Rational(1), Rational(2)},
          {LTag::W4, Rational(-5, 3), Rational(-1)}};
}

/// "W3(2,1/2)" -> "W3_2_1-2", safe as a file name.
inline std::string fixture_stem(const LAlgebra<Rational>& l) {
  std::string out = l_tag_name(l.tag) + "_" + to_string(l.t);
  if (l.tag != LTag::W1) out += "_" + to_string(l.s);
  for (auto& ch : out)
    if (ch == '/') ch = '-';
  return out;
}

inline std::vector<Fixture> bundled_fixtures() {
  const RationalField q;
  std::vector<Fixture> out;
  out.push_back({"W2.json", write_algebra(w2_algebra(q), FieldSpec::rationals())});
  out.push_back({"W2_comm.json", write_algebra(algebra_by_tag(q, AlgebraTag::w2_comm), FieldSpec::rationals())});
  out.push_back({"S2.json", write_algebra(algebra_by_tag(q, AlgebraTag::s2), FieldSpec::rationals())});
  for (const auto& l : l_fixture_members())
    out.push_back({"L_" + fixture_stem(l) + ".json", write_algebra(l_algebra(q, l), FieldSpec::rationals())});
  return out;
}

inline void export_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& f : bundled_fixtures()) {
    std::ofstream out(dir / f.file_name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / f.file_name).string());
    out << f.text;
  }
}

}  // namespace kantor
