// Acceptance harness: one self-contained check per release criterion, each
// reporting a single [PASS]/[FAIL] line. Tolerances are pinned as constants
// next to the checks that use them.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "biomeval/io.hpp"
#include "biomeval/metrics.hpp"
#include "biomeval/protocols.hpp"
#include "biomeval/similarity.hpp"
#include "biomeval/synth.hpp"
#include "biomeval/types.hpp"
#include "oracles.hpp"

using namespace biomeval;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kAucOracleTol = 1e-12;     // criterion 1
constexpr double kGaussianTol = 0.01;       // criterion 2
constexpr double kInvarianceTol = 1e-12;    // criterion 5
constexpr double kKfoldAccTol = 0.02;       // criterion 6
constexpr double kSpeedupFactor = 0.6;      // criterion 7
constexpr double kCurveCsvTol = 1e-9;       // criterion 8
constexpr double kBudget1 = 5.0, kBudget2 = 10.0, kBudget7 = 60.0;  // seconds

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& extra) {
    if (!detail.empty()) detail += "; ";
    detail += extra;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Random scores on a coarse grid so exact ties within and across classes
// are the norm rather than the exception.
ScoreSet random_tied_scores(std::mt19937& gen) {
  std::uniform_int_distribution<int> size_dist(1, 50);
  std::uniform_int_distribution<int> level_dist(0, 16);
  ScoreSet s;
  s.genuine.resize(size_dist(gen));
  s.impostor.resize(size_dist(gen));
  for (double& v : s.genuine) v = level_dist(gen) / 16.0;
  for (double& v : s.impostor) v = level_dist(gen) / 16.0;
  return s;
}

// --------------------------------------------------------------------------
// 1. Trapezoidal AUC equals the pairwise Mann-Whitney oracle.

Outcome criterion1() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937 gen(101);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const ScoreSet s = random_tied_scores(gen);
    const double got = auc(roc(s).curve);
    const double want = oracle::pairwise_auc(s.genuine, s.impostor);
    worst = std::max(worst, std::abs(got - want));
    if (std::abs(got - want) > kAucOracleTol) {
      out.fail("trial " + std::to_string(trial) + ": |" + fmt(got) + " - " +
               fmt(want) + "| > 1e-12");
      return out;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kBudget1) {
    out.fail("took " + fmt(elapsed) + " s, budget " + fmt(kBudget1));
  }
  out.note("200 score sets, worst gap " + fmt(worst) + ", " + fmt(elapsed) +
           " s");
  return out;
}

// --------------------------------------------------------------------------
// 2. Equal-variance Gaussian model against its closed forms.

Outcome criterion2() {
  Outcome out;
  const auto start = Clock::now();

  GaussianScoreModel m;
  m.n_genuine = 100000;
  m.n_impostor = 100000;
  m.seed = 20260821;
  const ScoreSet s = sample_scores(m);

  // Separation (0.6 - 0.4) / (0.1 * sqrt(2)) puts AUC at Phi(sqrt(2)) and
  // the equal-error rate at Phi(-1).
  const double want_auc = oracle::normal_cdf(std::sqrt(2.0));
  const double want_eer = oracle::normal_cdf(-1.0);
  const double got_auc = auc(roc(s).curve);
  const double got_eer = eer(s).eer;

  if (std::abs(got_auc - want_auc) > kGaussianTol) {
    out.fail("AUC " + fmt(got_auc) + " vs " + fmt(want_auc));
  }
  if (std::abs(got_eer - want_eer) > kGaussianTol) {
    out.fail("EER " + fmt(got_eer) + " vs " + fmt(want_eer));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kBudget2) {
    out.fail("took " + fmt(elapsed) + " s, budget " + fmt(kBudget2));
  }
  out.note("AUC " + fmt(got_auc) + " (target " + fmt(want_auc) + "), EER " +
           fmt(got_eer) + " (target " + fmt(want_eer) + "), " + fmt(elapsed) +
           " s");
  return out;
}

// --------------------------------------------------------------------------
// 3. rank_probes against the exhaustive sorting oracle; CMC tops out at 1.

SimilarityMatrix random_matrix(std::mt19937& gen, std::size_t rows,
                               std::size_t cols, bool fully_mated) {
  std::uniform_int_distribution<int> level_dist(0, 31);
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::vector<TemplateId> pids, gids;
  std::vector<SubjectId> psubs, gsubs;
  for (std::size_t j = 0; j < cols; ++j) {
    gids.push_back("g" + std::to_string(j));
    gsubs.push_back("s" + std::to_string(j));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    pids.push_back("p" + std::to_string(i));
    const bool mated = fully_mated || kind_dist(gen) != 0;
    psubs.push_back(mated ? "s" + std::to_string(i % cols)
                          : "u" + std::to_string(i));
  }
  std::vector<double> scores(rows * cols);
  for (double& v : scores) v = level_dist(gen) / 31.0;
  return SimilarityMatrix(pids, psubs, gids, gsubs, scores);
}

Outcome criterion3() {
  Outcome out;
  std::mt19937 gen(303);
  std::size_t tie_rows = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool fully_mated = trial % 2 == 0;
    const SimilarityMatrix m = random_matrix(gen, 20, 10, fully_mated);
    const auto got = rank_probes(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<double> row(m.cols());
      std::optional<std::size_t> mate_col;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row[j] = m.at(i, j);
        if (m.gallery_subjects()[j] == m.probe_subjects()[i]) mate_col = j;
      }
      const auto want = oracle::rank_by_sorting(row, mate_col);
      if (mate_col &&
          std::count(row.begin(), row.end(), row[*mate_col]) > 1) {
        ++tie_rows;
      }
      if (got[i].mated != want.mated || got[i].top_score != want.top_score ||
          got[i].mate_rank != want.rank ||
          got[i].mate_score != want.mate_score) {
        out.fail("trial " + std::to_string(trial) + " probe " +
                 std::to_string(i) + " disagrees with the sorting oracle");
        return out;
      }
    }
    if (fully_mated) {
      const Curve c = cmc(got, static_cast<std::uint32_t>(m.cols()));
      if (c.points.back().y != 1.0) {
        out.fail("trial " + std::to_string(trial) + ": CMC(" +
                 std::to_string(m.cols()) + ") = " +
                 fmt(c.points.back().y) + ", want exactly 1");
        return out;
      }
    }
  }
  if (tie_rows == 0) {
    out.fail("tie coverage never materialized; the check proves too little");
  }
  out.note("100 matrices, " + std::to_string(tie_rows) +
           " probes ranked through mate-involved ties");
  return out;
}

// --------------------------------------------------------------------------
// 4. IET boundary identities at the most permissive threshold.

Outcome criterion4() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SyntheticPopulation p;
    p.n_subjects = 12 + seed % 5;
    p.n_probe_mated = 25 + seed % 7;
    p.n_probe_nonmated = 6 + seed % 4;
    p.dim = 8;
    p.within_class_sd = 0.6;  // messy on purpose: ranks must not be trivial
    p.seed = seed;
    const SyntheticData d = sample_population(p);

    TemplateStore store;
    SearchProtocol protocol;
    protocol.mode = SearchMode::kOpen;
    GallerySet set{"g", {}};
    for (const Template& t : d.gallery) {
      set.templates.push_back(t.id);
      store.add(t);
    }
    protocol.gallery_sets.push_back(set);
    for (const Template& t : d.probes) {
      protocol.probes.push_back(t.id);
      store.add(t);
    }

    const auto results = run_search(protocol, store,
                                    SimilarityMeasure::kCosine);
    const auto& ranks = results[0].ranks;

    std::size_t n_mated = 0, rank1_hits = 0;
    for (const RankResult& r : ranks) {
      if (!r.mated) continue;
      ++n_mated;
      rank1_hits += (*r.mate_rank == 1) ? 1 : 0;
    }

    const IetResult r = iet(ranks);
    const IetPoint& last = r.points.back();
    const Curve c1 = cmc(ranks, 1);

    // Both sides resolve to integer-count divisions, so the comparison can
    // demand bit equality rather than a tolerance.
    const double want_fnir =
        static_cast<double>(n_mated - rank1_hits) /
        static_cast<double>(n_mated);
    const double want_cmc1 =
        static_cast<double>(rank1_hits) / static_cast<double>(n_mated);
    if (last.fpir != 1.0) {
      out.fail("seed " + std::to_string(seed) + ": FPIR(t_min) = " +
               fmt(last.fpir));
      return out;
    }
    if (last.fnir != want_fnir || c1.points[0].y != want_cmc1) {
      out.fail("seed " + std::to_string(seed) +
               ": FNIR(t_min) != 1 - CMC(1) (" + fmt(last.fnir) + " vs 1 - " +
               fmt(c1.points[0].y) + ")");
      return out;
    }
  }
  out.note("50 open-set populations, FPIR/FNIR boundary exact");
  return out;
}

// --------------------------------------------------------------------------
// 5. Monotone transforms leave every rate unchanged.

Outcome criterion5() {
  Outcome out;
  std::mt19937 gen(505);
  const auto affine = [](double v) { return 2.0 * v + 1.0; };
  const auto cube = [](double v) { return v * v * v; };

  for (int trial = 0; trial < 20; ++trial) {
    ScoreSet s = random_tied_scores(gen);
    for (double& v : s.genuine) v += 0.125;  // keep scores positive
    for (double& v : s.impostor) v += 0.125;

    for (int which = 0; which < 2; ++which) {
      ScoreSet w = s;
      for (double& v : w.genuine) v = which ? cube(v) : affine(v);
      for (double& v : w.impostor) v = which ? cube(v) : affine(v);

      if (std::abs(auc(roc(s).curve) - auc(roc(w).curve)) > kInvarianceTol ||
          std::abs(eer(s).eer - eer(w).eer) > kInvarianceTol ||
          std::abs(accuracy_best(s).accuracy - accuracy_best(w).accuracy) >
              kInvarianceTol) {
        out.fail("trial " + std::to_string(trial) +
                 (which ? " cube" : " affine") + ": verification rate moved");
        return out;
      }
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    const SimilarityMatrix m = random_matrix(gen, 15, 8, false);
    std::vector<double> warped_scores = m.scores();
    for (int which = 0; which < 2; ++which) {
      for (double& v : warped_scores) {
        v = which ? cube(v + 0.125) : affine(v + 0.125);
      }
      const SimilarityMatrix w(m.probe_ids(), m.probe_subjects(),
                               m.gallery_ids(), m.gallery_subjects(),
                               warped_scores);
      const auto base_ranks = rank_probes(m);
      const auto warp_ranks = rank_probes(w);
      for (std::size_t i = 0; i < base_ranks.size(); ++i) {
        if (base_ranks[i].mate_rank != warp_ranks[i].mate_rank) {
          out.fail("trial " + std::to_string(trial) + ": rank moved");
          return out;
        }
      }
      const Curve cb = cmc(base_ranks, 8);
      const Curve cw = cmc(warp_ranks, 8);
      for (std::size_t k = 0; k < cb.points.size(); ++k) {
        if (cb.points[k].y != cw.points[k].y) {
          out.fail("trial " + std::to_string(trial) + ": CMC moved");
          return out;
        }
      }
      const IetResult ib = iet(base_ranks);
      const IetResult iw = iet(warp_ranks);
      if (ib.points.size() != iw.points.size()) {
        out.fail("trial " + std::to_string(trial) + ": IET sweep changed");
        return out;
      }
      for (std::size_t k = 0; k < ib.points.size(); ++k) {
        if (ib.points[k].fpir != iw.points[k].fpir ||
            ib.points[k].fnir != iw.points[k].fnir) {
          out.fail("trial " + std::to_string(trial) +
                   ": IET rates moved at a corresponding threshold");
          return out;
        }
      }
      warped_scores = m.scores();
    }
  }
  out.note("2s+1 and s^3 over 40 trials, rates and ranks pinned");
  return out;
}

// --------------------------------------------------------------------------
// 6. K-fold honesty plus the Bayes-accuracy target on Gaussian folds.

Outcome criterion6() {
  Outcome out;
  GaussianScoreModel m;  // defaults: 0.6/0.1 vs 0.4/0.1, 1000 + 1000
  m.seed = 6;
  const SyntheticPairData data = realize_score_pairs(m, 10);

  TemplateStore store;
  for (const Template& t : data.templates) store.add(t);
  ComparisonProtocol protocol{data.pairs};
  const auto folds =
      run_comparison(protocol, store, SimilarityMeasure::kCosine);
  if (folds.size() != 10) {
    out.fail("expected 10 folds, got " + std::to_string(folds.size()));
    return out;
  }

  const KfoldResult r = kfold_accuracy(folds);
  for (std::size_t k = 0; k < folds.size(); ++k) {
    for (std::size_t src : r.calibration_sources[k]) {
      if (src == k) {
        out.fail("fold " + std::to_string(k) +
                 " lists itself as a calibration source");
        return out;
      }
    }
    ScoreSet pooled;
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g == k) continue;
      pooled.genuine.insert(pooled.genuine.end(), folds[g].genuine.begin(),
                            folds[g].genuine.end());
      pooled.impostor.insert(pooled.impostor.end(),
                             folds[g].impostor.begin(),
                             folds[g].impostor.end());
    }
    const double want =
        oracle::best_accuracy_threshold(pooled.genuine, pooled.impostor);
    if (r.thresholds[k] != want) {
      out.fail("fold " + std::to_string(k) +
               ": threshold not fitted on the complement (got " +
               fmt(r.thresholds[k]) + ", complement optimum " + fmt(want) +
               ")");
      return out;
    }
  }

  const double bayes = oracle::normal_cdf(1.0);
  if (std::abs(r.mean_accuracy - bayes) > kKfoldAccTol) {
    out.fail("mean accuracy " + fmt(r.mean_accuracy) + " vs Bayes " +
             fmt(bayes) + " +- " + fmt(kKfoldAccTol));
  }
  out.note("mean ACC " + fmt(r.mean_accuracy) + " (target " + fmt(bayes) +
           "), thresholds all complement-fitted");
  return out;
}

// --------------------------------------------------------------------------
// 7. Bitwise-deterministic parallel scoring at search scale.

Outcome criterion7() {
  Outcome out;
  const auto start = Clock::now();

  SyntheticPopulation p;
  p.n_subjects = 1000;
  p.n_probe_mated = 2000;
  p.n_probe_nonmated = 0;
  p.dim = 256;
  p.seed = 7;
  const SyntheticData d = sample_population(p);

  const auto run_with = [&](std::size_t workers) {
    const auto t0 = Clock::now();
    SimilarityMatrix m = score_matrix(d.probes, d.gallery,
                                      SimilarityMeasure::kCosine, 64,
                                      workers);
    return std::pair<SimilarityMatrix, double>(std::move(m),
                                               seconds_since(t0));
  };

  auto [m1, t1] = run_with(1);
  auto [m2, t2] = run_with(2);
  auto [m8, t8] = run_with(8);

  if (m1.scores() != m2.scores() || m1.scores() != m8.scores()) {
    out.fail("worker counts disagree bitwise");
    return out;
  }

  const unsigned cores = std::thread::hardware_concurrency();
  if (cores >= 8) {
    if (t8 > kSpeedupFactor * t1) {
      out.fail("8-worker run took " + fmt(t8) + " s vs " + fmt(t1) +
               " s single-worker; wanted <= " + fmt(kSpeedupFactor) + "x");
    } else {
      out.note("speedup clause met on " + std::to_string(cores) + " cores (" +
               fmt(t1) + " s -> " + fmt(t8) + " s)");
    }
  } else {
    out.note("speedup clause needs >= 8 cores, machine has " +
             std::to_string(cores) + "; bitwise clause checked (" + fmt(t1) +
             " / " + fmt(t2) + " / " + fmt(t8) + " s)");
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= kBudget7) {
    out.fail("took " + fmt(elapsed) + " s, budget " + fmt(kBudget7));
  }
  out.note("2000x1000 dim-256 identical for workers {1,2,8}, " +
           fmt(elapsed) + " s");
  return out;
}

// --------------------------------------------------------------------------
// 8. On-disk formats: bit-exact templates, 1e-9 curves, located errors.

Outcome criterion8() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "biomeval_acceptance";
  fs::create_directories(dir);
  std::mt19937 gen(808);
  std::uniform_real_distribution<float> dist(-8.0f, 8.0f);

  for (std::size_t dim = 1; dim <= 512; ++dim) {
    std::vector<Template> templates;
    for (int i = 0; i < 2; ++i) {
      Template t;
      t.id = "d" + std::to_string(dim) + "_" + std::to_string(i);
      t.subject = "s" + std::to_string(i);
      t.features.resize(dim);
      for (float& f : t.features) f = dist(gen);
      t.features[0] = (dim % 3 == 0) ? -0.0f : 1e-40f;  // edge encodings
      templates.push_back(std::move(t));
    }
    const std::string path = (dir / "round.ftpl").string();
    write_templates(templates, path);
    const auto back = read_templates(path);
    for (std::size_t i = 0; i < templates.size(); ++i) {
      if (back[i].id != templates[i].id ||
          back[i].subject != templates[i].subject) {
        out.fail("dim " + std::to_string(dim) + ": identity fields changed");
        return out;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        if (std::bit_cast<std::uint32_t>(back[i].features[k]) !=
            std::bit_cast<std::uint32_t>(templates[i].features[k])) {
          out.fail("dim " + std::to_string(dim) + ": feature bits changed");
          return out;
        }
      }
    }
  }

  Curve c;
  c.kind = CurveKind::kRoc;
  c.x_axis = "FAR";
  c.y_axis = "TAR";
  c.n_folds_aggregated = 4;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs(40), ys(40);
  for (double& v : xs) v = unit(gen);
  for (double& v : ys) v = unit(gen);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (std::size_t i = 0; i < xs.size(); ++i) c.points.push_back({xs[i], ys[i]});
  const std::string curve_path = (dir / "round.csv").string();
  write_curve_csv(c, curve_path);
  const Curve back = read_curve_csv(curve_path);
  if (back.kind != c.kind || back.n_folds_aggregated != 4 ||
      back.points.size() != c.points.size()) {
    out.fail("curve metadata changed in flight");
    return out;
  }
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (std::abs(back.points[i].x - c.points[i].x) > kCurveCsvTol ||
        std::abs(back.points[i].y - c.points[i].y) > kCurveCsvTol) {
      out.fail("curve point " + std::to_string(i) + " off by more than 1e-9");
      return out;
    }
  }

  const auto expect_throw = [&](auto&& fn, const std::string& must_contain,
                                const std::string& label) {
    try {
      fn();
      out.fail(label + ": no error raised");
    } catch (const EvalError& e) {
      if (std::string(e.what()).find(must_contain) == std::string::npos) {
        out.fail(label + ": error lacks location context: " +
                 std::string(e.what()));
      }
    }
  };

  const std::string trunc = (dir / "trunc.ftpl").string();
  std::ofstream(trunc, std::ios::binary) << "FTP";
  expect_throw([&] { read_templates(trunc); }, "byte offset",
               "truncated template file");

  const std::string bad_pairs = (dir / "bad_pairs.csv").string();
  std::ofstream(bad_pairs) << "fold,template_a,template_b,same\n0,a,b,x\n";
  expect_throw([&] { read_pairs_manifest(bad_pairs); }, "line 2, column 4",
               "bad pair label");

  const std::string bad_header = (dir / "bad_header.csv").string();
  std::ofstream(bad_header) << "a,b\n1,2\n";
  expect_throw([&] { read_probe_manifest(bad_header); }, "expected header",
               "wrong manifest header");

  if (out.ok) {
    out.note("dims 1..512 bit-exact, curves within 1e-9, errors carry "
             "location");
  }
  return out;
}

// --------------------------------------------------------------------------
// 9. The CLI pipeline is byte-reproducible end to end.

Outcome criterion9() {
  Outcome out;
  const fs::path base = fs::temp_directory_path() / "biomeval_acceptance_e2e";
  fs::remove_all(base);
  fs::create_directories(base);

  const auto shell = [&](const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  for (const char* run : {"r1", "r2"}) {
    const fs::path dir = base / run;
    fs::create_directories(dir);
    const std::string bin = std::string("'") + BIOMEVAL_BIN_PATH + "'";
    std::ostringstream cmd;
    cmd << "cd '" << dir.string() << "'"
        << " && " << bin
        << " synth population --seed 99 --subjects 40 --probes-mated 80"
           " --probes-nonmated 16 --dim 16 --media-per-subject 3 --folds 5"
           " --out-dir data"
        << " && " << bin
        << " fuse --features data/media.ftpl --map data/media_map.csv"
           " --out data/gallery.ftpl"
        << " && " << bin
        << " verify --templates data/gallery.ftpl --templates"
           " data/probes.ftpl --pairs data/pairs.csv --out-dir verify"
           " --workers 2"
        << " && " << bin
        << " search --templates data/gallery.ftpl --templates"
           " data/probes.ftpl --gallery data/gallery.csv --probes"
           " data/probes.csv --mode open --out-dir search --workers 2"
        << " && " << bin
        << " plot --curve verify/roc_mean.csv --out roc.svg --title ROC"
        << " && " << bin
        << " plot --curve search/cmc_mean.csv --out cmc.svg --title CMC"
        << " > /dev/null 2> stderr.txt";
    if (shell(cmd.str()) != 0) {
      out.fail(std::string(run) + ": pipeline step failed");
      return out;
    }
  }

  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(base / "r1")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), base / "r1");
    const fs::path other = base / "r2" / rel;
    std::ifstream a(entry.path(), std::ios::binary);
    std::ifstream b(other, std::ios::binary);
    const std::string ca((std::istreambuf_iterator<char>(a)), {});
    const std::string cb((std::istreambuf_iterator<char>(b)), {});
    if (ca != cb) {
      out.fail(rel.string() + " differs between runs");
      return out;
    }
    ++compared;
  }
  out.note(std::to_string(compared) +
           " files byte-identical across two full runs");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* what;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {1, "AUC matches the pairwise oracle within 1e-12", criterion1},
      {2, "Gaussian model hits its closed-form AUC and EER", criterion2},
      {3, "ranking matches the sorting oracle exactly", criterion3},
      {4, "IET boundary equals 1 - CMC(1) exactly", criterion4},
      {5, "monotone score transforms change no rates", criterion5},
      {6, "k-fold calibration is honest and hits Bayes accuracy",
       criterion6},
      {7, "parallel scoring is bitwise deterministic", criterion7},
      {8, "file formats round-trip with located errors", criterion8},
      {9, "the CLI pipeline reproduces byte for byte", criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << c.what;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria satisfied"
                              : std::to_string(failures) +
                                    " criteria failing")
            << "\n";
  return failures == 0 ? 0 : 1;
}
