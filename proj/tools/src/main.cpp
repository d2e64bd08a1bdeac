#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fincat/error.hpp"
#include "fincat/version.hpp"
#include "fincat_cli/cli.hpp"

namespace cli = fincat::cli;

namespace {

struct Common {
  cli::Format format = cli::Format::json;
  std::optional<std::size_t> threads;
};

void add_common(CLI::App* sub, Common& c) {
  const std::map<std::string, cli::Format> formats{{"json", cli::Format::json}, {"text", cli::Format::text}};
  sub->add_option("--format", c.format, "Report format")->transform(CLI::CheckedTransformer(formats));
  sub->add_option("--threads", c.threads, "Worker threads (else FINCAT_THREADS, else hardware concurrency)");
}

fincat::Json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli::UsageError("cannot open '" + path + "'");
  try {
    return fincat::Json::parse(in);
  } catch (const fincat::Json::parse_error& e) {
    throw cli::UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded regularity audits and counterexample reproduction for finite categories"};
  app.set_version_flag("--version", std::string("fincat ") + fincat::kVersion);
  app.require_subcommand(1);

  Common common;

  cli::AuditRequest audit;
  auto* audit_cmd = app.add_subcommand("audit", "Audit regularity of an enumerated category up to a bound");
  audit_cmd->add_option("instance", audit.instance, "finset, finpos, coslice or comma")->required();
  audit_cmd->add_option("--bound", audit.bound, "Object size bound");
  audit_cmd->add_option("--base-size", audit.base_size, "Size of the base set A (coslice, comma)");
  add_common(audit_cmd, common);

  std::string target;
  std::size_t cx_base = 1;
  auto* cx_cmd = app.add_subcommand("counterexample", "Reproduce a counterexample with all claims re-verified");
  cx_cmd->add_option("target", target, "pos, comma, coeq-divergence or coproduct")->required();
  cx_cmd->add_option("--base-size", cx_base, "Size of the base set A (comma, coproduct)");
  add_common(cx_cmd, common);

  std::string query;
  std::string input_path;
  auto* check_cmd = app.add_subcommand("check", "Run a verified construction on a JSON input file");
  check_cmd->add_option("query", query, "pullback, coequalizer, classify, fibers or ran")->required();
  check_cmd->add_option("file", input_path, "Input JSON file")->required();
  add_common(check_cmd, common);

  cli::NoGoRequest nogo;
  std::optional<std::size_t> nogo_bound;
  auto* nogo_cmd = app.add_subcommand("nogo", "Compose the coslice and comma audits into a bounded certificate");
  nogo_cmd->add_option("--base-size", nogo.base_size, "Size of the base set A");
  nogo_cmd->add_option("--bound", nogo_bound, "Sets both audit bounds");
  nogo_cmd->add_option("--coslice-bound", nogo.coslice_bound, "Coslice audit bound");
  nogo_cmd->add_option("--comma-bound", nogo.comma_bound, "Comma audit bound");
  add_common(nogo_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  try {
    const std::size_t threads = cli::resolve_threads(common.threads);
    cli::Output out;
    if (*audit_cmd) {
      audit.threads = threads;
      out = cli::cmd_audit(audit);
    } else if (*cx_cmd) {
      out = cli::cmd_counterexample(target, cx_base);
    } else if (*check_cmd) {
      out = cli::cmd_check(read_input(input_path), query);
    } else {
      if (nogo_bound) nogo.coslice_bound = nogo.comma_bound = *nogo_bound;
      nogo.threads = threads;
      out = cli::cmd_nogo(nogo);
    }
    std::cout << cli::render(out.report, common.format);
    return out.exit_code;
  } catch (const cli::UsageError& e) {
    std::cerr << "fincat: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const fincat::InvariantViolation& e) {
    // Schema violations in user input.
    std::cerr << "fincat: invalid input: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const fincat::ShapeMismatch& e) {
    std::cerr << "fincat: invalid input: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const fincat::DefectError& e) {
    std::cerr << "fincat: defect: " << e.what() << "\n";
    return cli::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "fincat: internal error: " << e.what() << "\n";
    return cli::kExitError;
  }
}
