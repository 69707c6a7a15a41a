// Command line front end: loads definition files, runs the verification
// pipeline stages and emits human or machine readable reports.

#include <iostream>
#include <string>

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqg/io.hpp"
#include "aqg/pipeline.hpp"

namespace {

int run_checked(const std::function<int()>& body) {
  try {
    return body();
  } catch (const aqg::AqgError& e) {
    std::cerr << "error [" << aqg::error_code_name(e.code()) << "]: "
              << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aqg - derive and verify the structure of finite-dimensional "
      "algebraic quantum groups"};
  app.require_subcommand(1);

  double tol = aqg::kDefaultTol;
  unsigned seed = 1;
  std::vector<double> times{0.3, 1.0, -0.7};
  bool json = false;
  app.add_option("--tol", tol, "absolute residual tolerance")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random-element checks")
      ->capture_default_str();
  app.add_option("--times", times,
                 "sample times for the one-parameter groups")
      ->delimiter(',');
  app.add_flag("--json", json, "emit the machine-readable report");

  const std::vector<std::string> stages = {
      "verify", "haar",      "modular", "gns",  "fundamental",
      "dual",   "universal", "lift",    "polar", "report"};
  std::map<std::string, std::string> stage_paths;
  for (const auto& stage : stages) {
    auto* cmd = app.add_subcommand(stage, "run the '" + stage + "' stage");
    cmd->fallthrough();
    cmd->add_option("path", stage_paths[stage], "definition file")->required();
  }

  // generate <kind> [--group g | --cayley file] [--out path]
  std::string gen_kind, gen_group, gen_out, gen_cayley;
  auto* gen = app.add_subcommand("generate", "emit a bundled definition file");
  gen->fallthrough();
  gen->add_option("kind", gen_kind,
                  "group_algebra | function_algebra | kac_paljutkin | sweedler"
                  " | one of: " +
                      [] {
                        std::string s;
                        for (const auto& n : aqg::bundled_example_names())
                          s += n + " ";
                        return s;
                      }())
      ->required();
  gen->add_option("--group", gen_group, "group name (z2, z3, z4, z5, z6, s3, d4)");
  gen->add_option("--cayley", gen_cayley,
                  "JSON file with {labels, table} giving a Cayley table");
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  auto* manifest = app.add_subcommand("manifest", "print the identity catalogue");

  CLI11_PARSE(app, argc, argv);

  return run_checked([&]() -> int {
    if (gen->parsed()) {
      aqg::AlgebraWithComult ex = [&] {
        for (const auto& n : aqg::bundled_example_names())
          if (n == gen_kind) return aqg::make_bundled_example(n);
        if (!gen_cayley.empty()) {
          std::ifstream in(gen_cayley);
          if (!in)
            aqg::fail(aqg::ErrorCode::parse_error,
                      "cannot open Cayley table: " + gen_cayley);
          nlohmann::json j;
          try {
            j = nlohmann::json::parse(in);
          } catch (const nlohmann::json::parse_error& e) {
            aqg::fail(aqg::ErrorCode::parse_error, e.what());
          }
          aqg::CayleyTable table;
          for (const auto& l : j.at("labels"))
            table.labels.push_back(l.get<std::string>());
          for (const auto& row : j.at("table"))
            table.table.push_back(row.get<std::vector<int>>());
          table.validate();
          if (gen_kind == "group_algebra") return aqg::make_group_algebra(table);
          if (gen_kind == "function_algebra")
            return aqg::make_function_algebra(table);
          aqg::fail(aqg::ErrorCode::schema_error,
                    "--cayley applies to group_algebra / function_algebra");
        }
        return aqg::make_example(gen_kind, gen_group);
      }();
      std::string name = gen_kind;
      if (!gen_group.empty()) name += "_" + gen_group;
      const std::string text = aqg::serialize_definition(ex, name);
      if (gen_out.empty())
        std::cout << text;
      else
        aqg::write_definition(gen_out, ex, name);
      return 0;
    }

    if (manifest->parsed()) {
      for (const auto& row : aqg::identity_manifest())
        std::cout << row.id << "\t" << row.ref << "\n";
      return 0;
    }

    for (const auto& stage : stages) {
      auto* cmd = app.get_subcommand(stage);
      if (!cmd->parsed()) continue;
      const aqg::AlgebraWithComult input =
          aqg::load_definition(stage_paths[stage], tol);
      aqg::PipelineOptions opt;
      opt.tol = tol;
      opt.seed = seed;
      opt.times = times;
      const aqg::VerificationReport report = aqg::run_stage(stage, input, opt);
      const std::string subject =
          input.algebra.name() + " (" + stage_paths[stage] + ")";
      std::cout << (json ? report.to_json(subject) + "\n"
                         : report.to_text(subject));
      return report.all_passed()
                 ? 0
                 : static_cast<int>(aqg::ErrorCode::check_failed);
    }
    return 0;
  });
}
