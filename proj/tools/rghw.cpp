#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rghw/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Relative generalized Hamming weights of projective Reed-Muller-type codes"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "table";
  std::uint64_t budget = 0;
  std::string order;
  bool with_bruteforce = false;
  unsigned threads = 1;

  const std::pair<const char*, const char*> commands[] = {
      {"hilbert", "Hilbert function, degree and regularity index of S/I"},
      {"vanishing-ideal", "Reduced Groebner basis of I_X with a certificate"},
      {"code-info", "Length and dimension of C_X(d)"},
      {"weights", "One row per (d, r): fp, delta, vartheta, M_r, Singleton bound"},
      {"matrix", "d x r grid of one function"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "Problem description")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv"}));
    sub->add_option("--budget", budget, "Candidate budget per enumeration");
    sub->add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex", "grlex"}));
    sub->add_flag("--with-bruteforce", with_bruteforce, "Also compute M_r by subspace enumeration");
    sub->add_option("--threads", threads, "Worker threads per enumeration")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rghw::cli::kExitConfig;
  }

  rghw::cli::RunOptions options;
  options.format = format == "csv" ? rghw::cli::Format::csv : rghw::cli::Format::table;
  if (budget > 0) options.budget = budget;
  if (!order.empty()) options.order = order;
  options.with_bruteforce = with_bruteforce;
  options.threads = threads;

  rghw::cli::ProblemConfig config;
  try {
    config = rghw::cli::load_config(config_path);
  } catch (const rghw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rghw::cli::kExitConfig;
  }
  return rghw::cli::run(app.get_subcommands().front()->get_name(), config, options, std::cout,
                        std::cerr);
}
