#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mlq/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Many-letter quantum compression experiments", "mlq"};
  app.set_version_flag("--version", std::string(mlq::kVersion));
  app.require_subcommand(1);

  mlq::RunOptions options;
  std::string config;
  std::string out;
  std::size_t lmax = 0;
  std::string mode = "integer";

  const std::map<std::string, std::string> help{
      {"entropy", "von Neumann entropy and raw information"},
      {"huffman", "Huffman code for a classical ensemble"},
      {"kraft", "Kraft sum of a code"},
      {"typical", "classical typical sets"},
      {"block-code", "fixed-length typical block code"},
      {"translate", "lossless block translation between alphabets"},
      {"schumacher", "Schumacher compression of length-N messages"},
      {"schumacher-grand", "Schumacher compression of a grand-canonical source"},
      {"lossless-grand", "lossless symbol code on a grand-canonical source"},
      {"lossless-general", "lossless code for a general message matrix"},
      {"core-info", "core information observable"},
      {"audit-channel", "Kraus completeness and unitality of a channel"},
  };
  for (const auto& name : mlq::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory for tables and manifest");
    sub->add_option("--seed", options.seed, "random seed");
    sub->add_option("--lmax", lmax, "maximum message length")->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", mode, "codeword lengths")->check(CLI::IsMember({"integer", "ideal"}));
    sub->add_option("--tolerance", options.tolerance, "check tolerance")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[parse]: " << e.what() << '\n';
    return static_cast<int>(mlq::ExitCode::parse);
  }

  CLI::App* sub = app.get_subcommands().front();
  if (!config.empty()) options.config_path = config;
  if (!out.empty()) options.out_dir = out;
  if (sub->count("--lmax")) options.lmax = lmax;
  options.mode = mlq::parse_length_mode(mode);
  return mlq::run_cli(sub->get_name(), options, std::cout, std::cerr);
}
