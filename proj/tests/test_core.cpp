#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "biomeval/error.hpp"
#include "biomeval/rng.hpp"
#include "biomeval/types.hpp"

using namespace biomeval;

TEST_CASE("error codes render as their names") {
  CHECK(to_string(ErrorCode::kMixedDimensions) ==
        std::string("MixedDimensions"));
  CHECK(to_string(ErrorCode::kZeroNorm) == std::string("ZeroNorm"));
  EvalError e(ErrorCode::kBadMagic, "not an FTPL file");
  CHECK(e.code() == ErrorCode::kBadMagic);
  CHECK(std::string(e.what()) == "BadMagic: not an FTPL file");
  CHECK(e.message() == "not an FTPL file");
}

TEST_CASE("template validation reports every problem") {
  Template t;
  t.id = "t1";
  t.subject = "s1";
  t.features = {1.0f, 2.0f};
  CHECK(validate_template(t).empty());

  t.id = " t1";
  t.subject = "";
  t.features = {1.0f, std::numeric_limits<float>::quiet_NaN()};
  t.media_ids = {"m", "m"};
  auto problems = validate_template(t);
  REQUIRE(problems.size() == 4);
  CHECK(problems[0] == "template id has leading or trailing whitespace");
  CHECK(problems[1] == "subject id must be non-empty");
  CHECK(problems[2] == "non-finite component at index 1");
  CHECK(problems[3] == "duplicate media id: m");

  t = Template{};
  t.subject = "s";
  auto p2 = validate_template(t);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == "template id must be non-empty");
  CHECK(p2[1] == "dim must be >= 1");
}

TEST_CASE("orient_scores flips distance-like scores") {
  ScoreSet s;
  s.genuine = {0.1, 0.2};
  s.impostor = {0.9};
  s.higher_is_better = false;
  ScoreSet o = orient_scores(s);
  CHECK(o.higher_is_better);
  CHECK(o.genuine[0] == -0.1);
  CHECK(o.genuine[1] == -0.2);
  CHECK(o.impostor[0] == -0.9);

  ScoreSet already = orient_scores(o);
  CHECK(already.genuine == o.genuine);
}

TEST_CASE("similarity matrix validates its inputs") {
  std::vector<std::string> pids = {"p1", "p2"};
  std::vector<std::string> psubs = {"a", "b"};
  std::vector<std::string> gids = {"g1"};
  std::vector<std::string> gsubs = {"a"};
  std::vector<double> scores = {0.5, 0.25};
  SimilarityMatrix m(pids, psubs, gids, gsubs, scores);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 1);
  CHECK(m.at(1, 0) == 0.25);

  CHECK_THROWS_AS(SimilarityMatrix(pids, psubs, gids, gsubs, {0.5}),
                  EvalError);
  CHECK_THROWS_WITH_AS(
      SimilarityMatrix(pids, psubs, {"g1", "g2"}, {"a", "a"},
                       {0.0, 0.0, 0.0, 0.0}),
      "DuplicateSubject: gallery enrolls subject 'a' more than once",
      EvalError);
  CHECK_THROWS_AS(
      SimilarityMatrix(pids, psubs, gids, gsubs,
                       {0.5, std::numeric_limits<double>::quiet_NaN()}),
      EvalError);
}

TEST_CASE("curve validation enforces per-kind shape") {
  Curve roc;
  roc.kind = CurveKind::kRoc;
  roc.x_axis = "FAR";
  roc.y_axis = "TAR";
  roc.points = {{0.0, 0.0}, {0.5, 1.0}, {1.0, 1.0}};
  CHECK(validate_curve(roc).empty());

  roc.points = {{0.5, 1.0}, {0.0, 0.0}};
  CHECK_FALSE(validate_curve(roc).empty());

  Curve cmc;
  cmc.kind = CurveKind::kCmc;
  cmc.x_axis = "rank";
  cmc.y_axis = "identification_rate";
  cmc.points = {{1.0, 0.5}, {2.0, 1.0}};
  CHECK(validate_curve(cmc).empty());
  cmc.points = {{1.5, 0.5}};
  CHECK_FALSE(validate_curve(cmc).empty());

  Curve iet;
  iet.kind = CurveKind::kIet;
  iet.x_axis = "FPIR";
  iet.y_axis = "FNIR";
  iet.points = {{0.0, 0.9}, {0.5, 0.4}, {1.0, 0.1}};
  CHECK(validate_curve(iet).empty());
  iet.points = {{0.0, 0.1}, {1.0, 0.9}};
  CHECK_FALSE(validate_curve(iet).empty());
}

TEST_CASE("curve kind names round trip") {
  for (CurveKind k : {CurveKind::kRoc, CurveKind::kPr, CurveKind::kCmc,
                      CurveKind::kIet}) {
    CHECK(curve_kind_from_string(to_string(k)) == k);
  }
  CHECK(to_string(CurveKind::kRoc) == std::string("ROC"));
  CHECK_THROWS_AS(curve_kind_from_string("DET"), EvalError);
}

// Known-answer vectors for Philox4x32-10 from the reference implementation
// (Random123): counter/key of all zeros, all ones bits, and the pi digits
// vector.
TEST_CASE("philox4x32 known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  using A2 = std::array<std::uint32_t, 2>;

  A4 z = Philox4x32::block(A4{0, 0, 0, 0}, A2{0, 0});
  CHECK(z[0] == 0x6627e8d5u);
  CHECK(z[1] == 0xe169c58du);
  CHECK(z[2] == 0xbc57ac4cu);
  CHECK(z[3] == 0x9b00dbd8u);

  const std::uint32_t ff = 0xffffffffu;
  A4 ones = Philox4x32::block(A4{ff, ff, ff, ff}, A2{ff, ff});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);

  A4 pi = Philox4x32::block(
      A4{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
      A2{0xa4093822u, 0x299f31d0u});
  CHECK(pi[0] == 0xd16cfe09u);
  CHECK(pi[1] == 0x94fdccebu);
  CHECK(pi[2] == 0x5001e420u);
  CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("rng streams are deterministic and disjoint") {
  Philox4x32 a(42, 0);
  Philox4x32 b(42, 0);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u32() == b.next_u32());

  Philox4x32 c(42, 1);
  Philox4x32 d(43, 0);
  std::set<std::uint32_t> seen;
  Philox4x32 base(42, 0);
  for (int i = 0; i < 64; ++i) seen.insert(base.next_u32());
  int collisions_c = 0, collisions_d = 0;
  for (int i = 0; i < 64; ++i) {
    collisions_c += seen.count(c.next_u32());
    collisions_d += seen.count(d.next_u32());
  }
  CHECK(collisions_c <= 1);
  CHECK(collisions_d <= 1);
}

TEST_CASE("uniform doubles live in the unit interval") {
  Philox4x32 rng(7, 0);
  double mn = 1.0, mx = 0.0, sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    mn = std::min(mn, u);
    mx = std::max(mx, u);
    sum += u;
  }
  CHECK(mn >= 0.0);
  CHECK(mx < 1.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("gaussian draws match the normal distribution") {
  Philox4x32 rng(11, 0);
  const int n = 50000;
  double sum = 0.0, sumsq = 0.0;
  int within_1sd = 0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    sum += g;
    sumsq += g * g;
    within_1sd += (std::abs(g) <= 1.0) ? 1 : 0;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean == doctest::Approx(0.0).epsilon(1.0).scale(0.02));
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
  CHECK(within_1sd / static_cast<double>(n) ==
        doctest::Approx(0.6827).epsilon(0.02));
}
