#include "jdeblock/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jdeblock/codec_pipeline.h"
#include "jdeblock/deblock.h"
#include "jdeblock/errors.h"
#include "jdeblock/image_io.h"
#include "jdeblock/metrics.h"

namespace jdeblock::cli {
namespace {

using Json = nlohmann::ordered_json;

Json Number(std::optional<double> v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return "inf";
  return *v;
}

// Flat report object. Keys are always present; fields that do not apply to a
// command are null.
struct RunReport {
  std::string command;
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> ref;
  std::optional<int> quality;
  QualityReport metrics;
  std::optional<RateReport> rate;
  std::optional<DeblockParams> params;

  Json ToJson() const {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["output"] = output ? Json(*output) : Json(nullptr);
    j["quality"] = quality ? Json(*quality) : Json(nullptr);
    j["mse"] = Number(metrics.mse);
    j["psnr_db"] = Number(metrics.psnr_db);
    j["blockiness"] = Number(metrics.blockiness);
    j["estimated_bits"] = Number(rate ? std::optional(rate->estimated_bits) : std::nullopt);
    j["compression_ratio"] =
        Number(rate ? std::optional(rate->compression_ratio) : std::nullopt);
    if (ref) j["ref"] = *ref;
    if (params) {
      j["t_edge"] = params->t_edge;
      j["t_flat"] = params->t_flat;
      j["clip"] = params->clip_c;
    }
    return j;
  }
};

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error("failed writing " + path);
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteText(path, text);
  }
}

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void AddDeblockOptions(CLI::App* cmd, DeblockParams& params) {
  cmd->add_option("--t-edge", params.t_edge, "Step treated as a real edge")
      ->capture_default_str();
  cmd->add_option("--t-flat", params.t_flat, "Activity treated as flat")
      ->capture_default_str();
  cmd->add_option("--clip", params.clip_c, "Largest Mild-mode correction")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-DCT artifact generator, meter and deblocking post-filter",
               "jdeblock"};
  app.require_subcommand(1);

  std::string input, output, ref, report_path, curve_path;
  int quality = 0;
  std::vector<int> qualities;
  DeblockParams params;

  CLI::App* degrade_cmd =
      app.add_subcommand("degrade", "Compress and reconstruct an image");
  degrade_cmd->add_option("-q,--quality", quality, "Quality factor 1..100")->required();
  degrade_cmd->add_option("input", input)->required()->check(CLI::ExistingFile);
  degrade_cmd->add_option("output", output)->required();
  degrade_cmd->add_option("--report", report_path, "Write the JSON report here");

  CLI::App* deblock_cmd =
      app.add_subcommand("deblock", "Filter block boundaries of a decoded image");
  deblock_cmd->add_option("input", input)->required()->check(CLI::ExistingFile);
  deblock_cmd->add_option("output", output)->required();
  deblock_cmd->add_option("--ref", ref, "Original image for mse/psnr")
      ->check(CLI::ExistingFile);
  deblock_cmd->add_option("--report", report_path, "Write the JSON report here");
  AddDeblockOptions(deblock_cmd, params);

  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Measure image quality");
  metrics_cmd->add_option("input", input, "Image under test")
      ->required()
      ->check(CLI::ExistingFile);
  metrics_cmd->add_option("--ref", ref, "Original image for mse/psnr")
      ->check(CLI::ExistingFile);
  metrics_cmd->add_option("--report", report_path, "Write the JSON report here");

  CLI::App* curve_cmd =
      app.add_subcommand("rdcurve", "Sweep qualities, degrade and deblock each");
  curve_cmd->add_option("--qualities", qualities, "Comma separated qualities")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  curve_cmd->add_option("input", input)->required()->check(CLI::ExistingFile);
  curve_cmd->add_option("--out", curve_path, "Write the CSV here");
  AddDeblockOptions(curve_cmd, params);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const GrayImage image = read_pgm_file(input);

    if (degrade_cmd->parsed()) {
      const DegradeResult result = degrade(image, QualityFactor(quality));
      write_pgm_file(output, result.image);
      RunReport r{"degrade", input, output, std::nullopt, quality,
                  measure(&image, result.image), result.rate, std::nullopt};
      Emit(r.ToJson().dump(2) + "\n", report_path, out);
    } else if (deblock_cmd->parsed()) {
      const GrayImage filtered = deblock_image(image, params);
      write_pgm_file(output, filtered);
      std::optional<GrayImage> original;
      if (!ref.empty()) original = read_pgm_file(ref);
      RunReport r{"deblock", input, output,
                  ref.empty() ? std::nullopt : std::optional(ref), std::nullopt,
                  measure(original ? &*original : nullptr, filtered),
                  std::nullopt, params};
      Emit(r.ToJson().dump(2) + "\n", report_path, out);
    } else if (metrics_cmd->parsed()) {
      std::optional<GrayImage> original;
      if (!ref.empty()) original = read_pgm_file(ref);
      RunReport r{"metrics", input, std::nullopt,
                  ref.empty() ? std::nullopt : std::optional(ref), std::nullopt,
                  measure(original ? &*original : nullptr, image), std::nullopt,
                  std::nullopt};
      Emit(r.ToJson().dump(2) + "\n", report_path, out);
    } else if (curve_cmd->parsed()) {
      params.Validate();
      std::sort(qualities.begin(), qualities.end());
      qualities.erase(std::unique(qualities.begin(), qualities.end()),
                      qualities.end());
      std::string csv = std::string(kCurveHeader) + "\n";
      for (int q : qualities) {
        const DegradeResult degraded = degrade(image, QualityFactor(q));
        const GrayImage filtered = deblock_image(degraded.image, params);
        csv += std::to_string(q) + "," +
               FormatNumber(degraded.rate.compression_ratio) + "," +
               FormatNumber(psnr(image, degraded.image)) + "," +
               FormatNumber(psnr(image, filtered)) + "," +
               FormatNumber(blockiness_score(degraded.image)) + "," +
               FormatNumber(blockiness_score(filtered)) + "\n";
      }
      Emit(csv, curve_path, out);
    }
  } catch (const std::exception& e) {
    err << "jdeblock: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace jdeblock::cli
