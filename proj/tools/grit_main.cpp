// grit: check GRIT proofs, convert DRUP to GRIT, trim, and generate
// benchmark families.
//
// Exit codes: 0 success/verified, 1 proof rejected or conversion failed,
// 2 usage, I/O or parse error.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace grit::cli;

  CLI::App app{"GRIT proof toolkit: restricted-RUP checking and DRUP conversion"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Verify a GRIT proof against a DIMACS CNF");
  check_cmd->add_option("cnf", check.cnf, "DIMACS CNF file")->required();
  check_cmd->add_option("grit", check.grit, "GRIT proof file")->required();
  check_cmd->add_flag("--stats", check.stats, "Report live-clause and I/O statistics");
  check_cmd->add_flag("-q,--quiet", check.quiet, "Print only VERIFIED or REJECTED");

  ConvertCommandOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a DRUP proof into GRIT");
  convert_cmd->add_option("cnf", convert.cnf, "DIMACS CNF file")->required();
  convert_cmd->add_option("drup", convert.drup, "DRUP proof file")->required();
  convert_cmd->add_option("out", convert.out, "GRIT output file")->required();
  convert_cmd->add_flag("--trim", convert.trim, "Keep only used lemmas and delete clauses after last use");

  TrimOptions trim;
  auto* trim_cmd = app.add_subcommand("trim", "Backward-trim a GRIT proof");
  trim_cmd->add_option("cnf", trim.cnf, "DIMACS CNF file")->required();
  trim_cmd->add_option("grit", trim.grit, "GRIT proof file")->required();
  trim_cmd->add_option("out", trim.out, "GRIT output file")->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an unsatisfiable family with its GRIT proof");
  gen_cmd->add_option("family", gen.family, "Family name (complete-tree)")->required();
  gen_cmd->add_option("n", gen.n, "Size parameter (1..24)")->required();
  gen_cmd->add_option("out_cnf", gen.out_cnf, "CNF output file")->required();
  gen_cmd->add_option("out_grit", gen.out_grit, "GRIT output file")->required();

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Check many (cnf, grit) pairs listed in a file");
  batch_cmd->add_option("list", batch.list, "File with one '<cnf> <grit>' pair per line")->required();
  batch_cmd->add_option("-j,--jobs", batch.jobs, "Pairs checked concurrently")->check(CLI::PositiveNumber);
  batch_cmd->add_flag("-q,--quiet", batch.quiet, "Print only verdict tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  Console console{std::cout, std::cerr, color_from_env()};
  if (*check_cmd) return cmd_check(check, console);
  if (*convert_cmd) return cmd_convert(convert, console);
  if (*trim_cmd) return cmd_trim(trim, console);
  if (*gen_cmd) return cmd_gen(gen, console);
  return cmd_batch(batch, console);
}
