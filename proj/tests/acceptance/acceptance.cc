// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds are fixed here and never tuned at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jdeblock/block_transform.h"
#include "jdeblock/cli.h"
#include "jdeblock/codec_pipeline.h"
#include "jdeblock/deblock.h"
#include "jdeblock/image_io.h"
#include "jdeblock/metrics.h"
#include "jdeblock/quantization.h"
#include "test_images.h"

namespace jdeblock {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

PixelBlock RandomBlock(std::mt19937& rng) {
  PixelBlock b;
  for (auto& s : b.samples) s = static_cast<int16_t>(testing::UniformInt(rng, -128, 127));
  return b;
}

CoeffBlock DirectSumDct(const PixelBlock& b) {
  auto alpha = [](int k) { return k == 0 ? std::sqrt(1.0 / 8) : std::sqrt(2.0 / 8); };
  CoeffBlock out;
  for (int v = 0; v < 8; ++v)
    for (int u = 0; u < 8; ++u) {
      double sum = 0.0;
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
          sum += b.at(x, y) * std::cos((2 * x + 1) * u * std::numbers::pi / 16) *
                 std::cos((2 * y + 1) * v * std::numbers::pi / 16);
      out.at(u, v) = alpha(u) * alpha(v) * sum;
    }
  return out;
}

Outcome DctCorrectness() {
  Outcome o;
  std::mt19937 rng(1001);
  const auto start = Clock::now();
  double worst = 0.0;
  int round_trip_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PixelBlock b = RandomBlock(rng);
    const CoeffBlock fast = dct2d(b);
    const CoeffBlock slow = DirectSumDct(b);
    for (int i = 0; i < kBlockArea; ++i)
      worst = std::max(worst, std::abs(fast.coeffs[i] - slow.coeffs[i]));
    if (!(idct2d(fast) == b)) ++round_trip_failures;
  }
  const double elapsed = SecondsSince(start);
  o.Check(worst <= 1e-9, Fmt("max |dct - direct| = %.3g (<= 1e-9)", worst));
  o.Check(round_trip_failures == 0,
          Fmt("round-trip mismatches = %.0f", round_trip_failures));
  o.Check(elapsed < 5.0, Fmt("runtime %.3f s (< 5 s)", elapsed));
  return o;
}

Outcome QuantizationBound() {
  Outcome o;
  std::mt19937 rng(1002);
  for (int q : {1, 50, 100}) {
    const QuantMatrix qm = build_quant_matrix(QualityFactor(q));
    long violations = 0;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const CoeffBlock c = dct2d(RandomBlock(rng));
      const CoeffBlock r = dequantize_block(quantize_block(c, qm), qm);
      for (int i = 0; i < kBlockArea; ++i) {
        const double err = std::abs(c.coeffs[i] - r.coeffs[i]);
        if (err > qm.steps[i] / 2.0) ++violations;
        worst_ratio = std::max(worst_ratio, err / qm.steps[i]);
      }
    }
    o.Check(violations == 0,
            Fmt("q=%.0f worst err/step %.4f (<= 0.5)", q, worst_ratio));
  }
  return o;
}

Outcome RatioEnvelope() {
  Outcome o;
  const GrayImage img = testing::NaturalTexture(256, 256);
  for (int q : {25, 50, 75}) {
    const double ratio = degrade(img, QualityFactor(q)).rate.compression_ratio;
    o.Check(ratio >= 5.0 && ratio <= 50.0, Fmt("q=%.0f ratio %.2f in [5,50]", q, ratio));
  }
  const double p90 = psnr(img, degrade(img, QualityFactor(90)).image);
  o.Check(p90 >= 32.0, Fmt("q=90 psnr %.2f dB (>= 32)", p90));
  return o;
}

Outcome ArtifactFormation() {
  Outcome o;
  const GrayImage img = testing::SmoothGradient();
  const double before = blockiness_score(img);
  const double after = blockiness_score(degrade(img, QualityFactor(10)).image);
  o.Check(after > 1.5 * before,
          Fmt("blockiness %.3f -> %.3f (> 1.5x)", before, after));
  return o;
}

Outcome DeblockingClaim() {
  Outcome o;
  struct Case {
    const char* name;
    GrayImage image;
  };
  const Case cases[] = {{"smooth", testing::SmoothGradient()},
                        {"natural", testing::NaturalTexture()}};
  for (const Case& c : cases) {
    for (int q : {5, 10, 25}) {
      const GrayImage coded = degrade(c.image, QualityFactor(q)).image;
      const GrayImage filtered = deblock_image(coded);
      const double p_coded = psnr(c.image, coded);
      const double p_filtered = psnr(c.image, filtered);
      o.Check(p_filtered > p_coded, std::string(c.name) +
                                        Fmt(" q=%.0f psnr %.3f -> %.3f", q, p_coded,
                                            p_filtered));
      if (std::string(c.name) == "smooth" && q == 10) {
        o.Check(p_filtered - p_coded >= 0.1,
                Fmt("smooth q=10 gain %.3f dB (>= 0.1)", p_filtered - p_coded));
        const double b_coded = blockiness_score(coded);
        const double b_filtered = blockiness_score(filtered);
        const double drop = 1.0 - b_filtered / b_coded;
        o.Check(drop >= 0.2, Fmt("smooth q=10 blockiness %.3f -> %.3f (drop %.3f >= 0.2)",
                                 b_coded, b_filtered, drop));
      }
    }
  }
  return o;
}

Outcome EdgePreservation() {
  Outcome o;
  GrayImage step(256, 256);
  for (int y = 0; y < 256; ++y)
    for (int x = 0; x < 256; ++x) step.at(x, y) = x < 128 ? 80 : 160;
  GrayImage step_h(256, 256);
  for (int y = 0; y < 256; ++y)
    for (int x = 0; x < 256; ++x) step_h.at(x, y) = y < 96 ? 200 : 120;
  o.Check(deblock_image(step) == step && deblock_image(step_h) == step_h,
          "amplitude-80 aligned steps bit-identical");

  std::mt19937 rng(1006);
  long touched = 0;
  auto far = [](int i, int extent) {
    for (int b = 8; b < extent; b += 8) {
      if (i >= b - 2 && i <= b + 1) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int w = testing::UniformInt(rng, 16, 96), h = testing::UniformInt(rng, 16, 96);
    GrayImage img = trial % 2 == 0
                        ? testing::UniformNoise(w, h, rng)
                        : testing::NaturalTexture(w, h, static_cast<uint32_t>(trial));
    img = degrade(img, QualityFactor(testing::UniformInt(rng, 1, 60))).image;
    const GrayImage out = deblock_image(img);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (far(x, w) && far(y, h) && out.at(x, y) != img.at(x, y)) ++touched;
  }
  o.Check(touched == 0, Fmt("off-boundary pixels modified: %.0f", touched));
  return o;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Outcome DeterminismAndRoundTrips() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "jdeblock_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::mt19937 rng(1007);
  int pgm_failures = 0, tile_failures = 0, cli_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int w = testing::UniformInt(rng, 16, 64), h = testing::UniformInt(rng, 16, 64);
    const GrayImage img = testing::UniformNoise(w, h, rng);
    if (!(read_pgm(write_pgm(img)) == img)) ++pgm_failures;
    if (!(assemble_blocks(tile_blocks(img)) == img)) ++tile_failures;

    const std::string in = (dir / "in.pgm").string();
    write_pgm_file(in, img);
    const std::string q = std::to_string(testing::UniformInt(rng, 1, 100));
    std::string artifacts[2];
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out, err;
      const std::string tag = std::to_string(run);
      const std::string coded = (dir / "coded.pgm").string();
      const std::string filtered = (dir / "filtered.pgm").string();
      const std::string report = (dir / "report.json").string();
      const std::string curve = (dir / "curve.csv").string();
      int rc = cli::run({"degrade", "-q", q, in, coded, "--report", report}, out, err);
      rc |= cli::run({"deblock", coded, filtered, "--ref", in}, out, err);
      rc |= cli::run({"metrics", "--ref", in, filtered}, out, err);
      rc |= cli::run({"rdcurve", "--qualities", q + ",10", in, "--out", curve}, out, err);
      if (rc != 0) ++cli_failures;
      artifacts[run] = Slurp(coded) + Slurp(filtered) + Slurp(report) + Slurp(curve) +
                       out.str();
    }
    if (artifacts[0] != artifacts[1]) ++cli_failures;
  }
  fs::remove_all(dir);
  o.Check(pgm_failures == 0, Fmt("pgm round-trip failures %.0f/100", pgm_failures));
  o.Check(tile_failures == 0, Fmt("tile round-trip failures %.0f/100", tile_failures));
  o.Check(cli_failures == 0, Fmt("cli non-identical runs %.0f/100", cli_failures));
  return o;
}

Outcome Performance() {
  Outcome o;
  const GrayImage img = testing::NaturalTexture(512, 512, 77);
  const auto start = Clock::now();
  const DegradeResult coded = degrade(img, QualityFactor(25));
  const GrayImage filtered = deblock_image(coded.image);
  const QualityReport a = measure(&img, coded.image);
  const QualityReport b = measure(&img, filtered);
  const double elapsed = SecondsSince(start);
  o.Check(elapsed < 1.0, Fmt("512x512 pipeline %.3f s (< 1 s)", elapsed));
  o.Check(std::isfinite(*a.psnr_db) && std::isfinite(*b.psnr_db), "metrics finite");
  return o;
}

}  // namespace
}  // namespace jdeblock

int main() {
  using jdeblock::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 dct correctness", jdeblock::DctCorrectness},
      {"2 quantization bound", jdeblock::QuantizationBound},
      {"3 compression-ratio envelope", jdeblock::RatioEnvelope},
      {"4 artifact formation", jdeblock::ArtifactFormation},
      {"5 deblocking claim", jdeblock::DeblockingClaim},
      {"6 edge preservation", jdeblock::EdgePreservation},
      {"7 determinism and round-trips", jdeblock::DeterminismAndRoundTrips},
      {"8 performance sanity", jdeblock::Performance},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const Outcome o = c.run();
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
