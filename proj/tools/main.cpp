#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using spinc::cli::RunConfig;
  CLI::App app{"spin and spin^c structures on finite simplicial complexes", "spinc"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t seed = 0;

  auto add_complex = [&](CLI::App* sub) {
    sub->add_option("--complex", cfg.complex, "complex file (.scx)")->required()->check(CLI::ExistingFile);
  };
  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "print JSON"); };

  auto* coh = app.add_subcommand("cohomology", "cohomology groups of a complex or pair");
  add_complex(coh);
  coh->add_option("--sub", cfg.sub, "subcomplex file for relative cohomology")->check(CLI::ExistingFile);
  coh->add_option("--degree", cfg.degree, "degree k")->required();
  coh->add_option("--coeff", cfg.coeff, "Z or Z2")->check(CLI::IsMember({"Z", "Z2"}));
  coh->add_flag("--basis", cfg.basis, "include representative cocycles");
  add_common(coh);

  auto* cc = app.add_subcommand("charclasses", "w2, W3 and the cup pairing");
  add_complex(cc);
  cc->add_option("--w2", cfg.w2, "mod 2 2-cocycle file (.cyc)")->check(CLI::ExistingFile);
  add_common(cc);

  auto* st = app.add_subcommand("structures", "spin and spin^c structures");
  add_complex(st);
  st->add_option("--w2", cfg.w2, "mod 2 2-cocycle file (.cyc)")->check(CLI::ExistingFile);
  st->add_option("--twist", cfg.twist, "conjugation twist as {\"free\":[..],\"torsion\":[..]}");
  add_common(st);

  auto* tr = app.add_subcommand("transport", "transport a spin^c structure along g");
  tr->add_option("bundle", cfg.bundle, "problem bundle directory")->required()->check(CLI::ExistingDirectory);
  tr->add_flag("--strict", cfg.strict, "treat a failed collapse certificate as blocking");
  add_common(tr);

  auto* ve = app.add_subcommand("verify", "run the invariant suite over the corpus");
  ve->add_option("--corpus", cfg.corpus, "corpus directory")->default_val(std::string(SPINC_DEFAULT_CORPUS));
  auto* seed_opt = ve->add_option("--seed", seed, "also check randomized small complexes");
  add_common(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return spinc::cli::kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (*seed_opt) cfg.seed = seed;

  const auto report = spinc::cli::run(cfg);
  if (report.body.contains("error") && report.exit_code != 0)
    std::cerr << "spinc: " << report.body["error"].value("message", report.body["error"].dump()) << '\n';
  if (cfg.json) std::cout << report.body.dump() << '\n';
  else std::cout << spinc::cli::render(report.body);
  return report.exit_code;
}
