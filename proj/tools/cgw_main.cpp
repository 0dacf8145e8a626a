#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cgw/cli.hpp"

int main(int argc, char** argv) {
  using cgw::cli::RunConfig;
  CLI::App app{"Word maps, character tables and generating tuples of small finite groups"};
  app.set_version_flag("--version", cgw::cli::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<double> eps;
  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"info", "order, classes, c(G), |Out(G)|, zeta(2), delta, epsilon"},
      {"fibers", "fiber table of a word map (formula, brute or both)"},
      {"prop51", "closed-form deviations for PSL2(q) against the character table"},
      {"zeta", "zeta(s), delta, epsilon; --group A or PSL2 for family trends"},
      {"tsystems", "T-systems of generating k-tuples with the component inequality chain"},
      {"components", "components of the Nielsen graph (--mode plain|extended)"},
      {"walk", "product replacement random walk"},
      {"census", "commutator-label census of generating pairs"},
      {"bound-check", "L1 bounds, pointwise deviations and the symmetric group character bound"},
  };
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--group,-g", cfg.group, "group descriptor, e.g. A5, S4, PSL2(7), C12, S3xC2");
    sub->add_option("--word,-w", cfg.word, "word, e.g. [x1,x2] or x1^2x2^2")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "fibers: formula|brute|both; components: plain|extended");
    sub->add_option("--k", cfg.k, "tuple length")->capture_default_str();
    sub->add_option("--s", cfg.s, "zeta exponent")->capture_default_str();
    sub->add_option("--epsilon", eps, "override for epsilon(G)");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--steps", cfg.steps, "walk moves between samples")->capture_default_str();
    sub->add_option("--burn-in", cfg.burn_in, "walk moves before sampling")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
    sub->add_option("--format,-f", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--cache-dir", cfg.cache_dir, "character-table cache directory")->envname("CGW_CACHE_DIR");
    sub->callback([&cfg, sub]() { cfg.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(cgw::cli::ExitCode::unsupported);
  }
  cfg.epsilon = eps;
  return cgw::cli::run(cfg, std::cout, std::cerr);
}
