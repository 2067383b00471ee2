#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "bhk/report_io.hpp"

namespace {

using bhk::io::Command;

struct Args {
  std::string target;
  std::string method = "all";
  std::int64_t primes_up_to = 0;
  std::string out;
  std::string format = "json";
  bool quiet = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BHK mirror pairs of K3 surfaces: Delsarte data, symmetry groups, Picard numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  app.add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--quiet", args.quiet, "Print nothing; report through the exit status only");

  std::map<CLI::App*, Command> commands;
  auto file_command = [&](Command c, const std::string& help) {
    CLI::App* sub = app.add_subcommand(std::string(bhk::io::command_name(c)), help);
    sub->add_option("FILE", args.target, "Input JSON document")->required();
    commands[sub] = c;
    return sub;
  };
  file_command(Command::Validate, "Adequacy verdict with diagnostics");
  file_command(Command::Analyze, "Delsarte data, atomic types and symmetry groups");
  file_command(Command::Mirror, "Transpose matrix and dual group");
  file_command(Command::Subgroups, "Every G between J and SL with its dual group");
  file_command(Command::Picard, "Picard numbers of the surface and its mirror")
      ->add_option("--method", args.method, "closed | kelly | orbit | all")
      ->check(CLI::IsMember({"closed", "kelly", "orbit", "all"}))
      ->capture_default_str();
  file_command(Command::Scan, "Picard numbers over a range of primes")
      ->add_option("--primes-up-to", args.primes_up_to, "Largest prime to scan")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* batch = app.add_subcommand("batch", "picard on every *.json in a directory");
  batch->add_option("DIR", args.target, "Input directory")->required();
  batch->add_option("--out", args.out, "Write newline-delimited JSON here instead of stdout");
  commands[batch] = Command::Batch;

  CLI11_PARSE(app, argc, argv);

  const Command command = commands.at(app.get_subcommands().front());
  bhk::io::CommandOptions options;
  options.method = *bhk::parse_method(args.method);
  options.primes_up_to = args.primes_up_to;

  const bhk::io::CommandResult result = bhk::io::run_command(command, args.target, options);

  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << args.out << '\n';
      return bhk::io::kExitInputError;
    }
    for (const auto& doc : result.documents) out << bhk::io::render(doc, bhk::io::Format::Json) << '\n';
  }
  if (!args.quiet && args.out.empty()) {
    const auto format = args.format == "text" ? bhk::io::Format::Text : bhk::io::Format::Json;
    bool first = true;
    for (const auto& doc : result.documents) {
      if (format == bhk::io::Format::Text && !first) std::cout << '\n';
      std::cout << bhk::io::render(doc, format);
      if (format == bhk::io::Format::Json) std::cout << '\n';
      first = false;
    }
  }
  return result.exit_status;
}
