#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace toricmld::harness;

int main(int argc, char** argv) {
  CLI::App app{"toricmld: exact mld, lct and hyperplane certificates for toric germs"};
  app.require_subcommand(1);
  CommandOptions opt;
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto instance_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("instance", opt.instance, "Instance JSON file");
    sub->add_option("--seed", opt.seed, "Use the generated instance for this seed");
    sub->add_flag("--json", opt.json, "Machine-readable output");
    return sub;
  };

  CLI::App* check = instance_command("check", "Validate an instance");
  CLI::App* mld = instance_command("mld", "Minimal log discrepancy over the fibre");
  CLI::App* lc = instance_command("lc", "Generalized log canonicity");
  CLI::App* lct = instance_command("lct", "Threshold of the pullback of a base functional");
  lct->add_option("--phibar", opt.phibar, "Base functional, e.g. 1,0")->required();
  CLI::App* find = instance_command("find", "Find a hyperplane certificate");
  find->add_option("--out", opt.out, "Write the certificate here instead of stdout");
  CLI::App* verify = instance_command("verify", "Verify a certificate");
  verify->add_option("certificate", opt.certificate, "Certificate JSON file")->required();
  CLI::App* oracle = instance_command("oracle-mld", "Brute-force mld over a box");
  oracle->add_option("--box", opt.box, "Box radius R")->required()->check(CLI::PositiveNumber);
  CLI::App* gamma = app.add_subcommand("gamma", "Evaluate gamma(d, a)");
  gamma->add_option("--dim", opt.dim, "d")->required();
  gamma->add_option("--mld", opt.mld, "a, as p/q")->required();
  gamma->add_flag("--json", opt.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check) return cmd_check(opt, out, err);
  if (*mld) return cmd_mld(opt, out, err);
  if (*lc) return cmd_lc(opt, out, err);
  if (*lct) return cmd_lct(opt, out, err);
  if (*find) return cmd_find(opt, out, err);
  if (*verify) return cmd_verify(opt, out, err);
  if (*oracle) return cmd_oracle_mld(opt, out, err);
  return cmd_gamma(opt, out, err);
}
