#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "torfan/error.hpp"
#include "torfan/rational.hpp"
#include "torfan_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace torfan;
  CLI::App app{"Toric fans, quantum cohomology presentations and mirror superpotentials"};
  app.require_subcommand(1);

  std::string input, format = "text", k_text, epsilon_text;
  cli::CommandOptions options;
  const std::map<std::string, std::string> about{
      {"validate", "check the fan and report its combinatorics"},
      {"qh", "quantum cohomology presentation with c1 and omega spectra"},
      {"sh", "localization at omega, with eigenvalue transfer when the document has a bundle k"},
      {"mirror", "compare the Jacobian ring of W with QH or SH"},
      {"critical", "critical points and values of W"},
      {"galkin", "positive real critical point of W for a complete fan"},
      {"barycentre", "barycentre of the moment polytope and its landing check"},
      {"linebundle", "negative line bundle over the base with phi and transfer checks"},
      {"blowup", "chop a face and present the blown-up space"},
      {"separate", "perturb support numbers until critical values separate"},
      {"kato", "eigenprojections and eigenvector limits of a matrix family"},
  };
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--input", input, "document path")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", options.seed, "seed for randomized steps");
    sub->add_flag("--t-symbolic", options.t_symbolic, "keep the Novikov variable symbolic");
    sub->add_option("--k", k_text, "line bundle degree");
    sub->add_option("--epsilon", epsilon_text, "blow-up size as p/q");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::ifstream in(input);
    if (!in) fail(ErrorKind::ParseError, "cannot read " + input);
    std::stringstream text;
    text << in.rdbuf();
    if (!k_text.empty()) {
      BigInt k;
      if (k.set_str(k_text, 10) != 0) fail(ErrorKind::ParseError, "--k expects an integer");
      options.k = k;
    }
    if (!epsilon_text.empty()) options.epsilon = parse_rational(epsilon_text);
    auto report = cli::run_command(command, text.str(), options);
    std::cout << cli::render_report(report, format == "json" ? cli::Format::json : cli::Format::text);
    return 0;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return cli::exit_status(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_status(e);
  }
}
