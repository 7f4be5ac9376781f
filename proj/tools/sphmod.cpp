// sphmod: command-line front end. Reads one JSON problem, writes one JSON report.
//
//   sphmod <command> [--input FILE] [--output FILE|-] [--pretty]
//
// Thread count comes from SPHMOD_THREADS (default 1).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

unsigned threads_from_env() {
  const char* v = std::getenv("SPHMOD_THREADS");
  if (!v || !*v) return 1;
  try {
    const long n = std::stol(v);
    return n < 1 ? 1u : static_cast<unsigned>(n);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent-space weights and spherical-root data of weight monoids"};
  app.require_subcommand(1);
  std::string input = "-";
  std::string output = "-";
  bool pretty = false;
  for (const auto& [name, fn] : sphmod::cli::registry()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "problem file (JSON), '-' for stdin");
    sub->add_option("--output", output, "report file, '-' for stdout");
    sub->add_flag("--pretty", pretty, "indent the report");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "sphmod: cannot read " << input << "\n";
      return sphmod::cli::kMalformed;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  sphmod::cli::Outcome outcome;
  try {
    outcome = sphmod::cli::run(command, sphmod::io::json::parse(text), threads_from_env());
  } catch (const sphmod::io::json::parse_error& e) {
    std::cerr << "sphmod: malformed JSON: " << e.what() << "\n";
    return sphmod::cli::kMalformed;
  }

  const std::string rendered = sphmod::cli::render(outcome.report, pretty);
  if (output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "sphmod: cannot write " << output << "\n";
      return sphmod::cli::kMalformed;
    }
    out << rendered;
  }
  if (outcome.report.contains("error"))
    std::cerr << "sphmod: " << outcome.report["error"]["message"].get<std::string>() << "\n";
  return outcome.exit_code;
}
