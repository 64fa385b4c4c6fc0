#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grlie/builtins.hpp"
#include "grlie/io.hpp"

namespace {

// Exit codes: 0 success, 1 usage/input errors, 2 hypotheses not met,
// 3 validation failure, 4 a theory-guaranteed invariant failed to verify.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypotheses = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  std::string command;
  std::string input_path;
  std::string builtin_name;
  std::string format = "text";
  std::size_t oracle_depth = 0;  // 0 = complete depth
};

int run(const Options& opt) {
  using namespace grlie;
  const OutputFormat format = opt.format == "structured"
                                  ? OutputFormat::structured
                                  : OutputFormat::text;

  GradedSuperalgebra alg = opt.builtin_name.empty()
                               ? parse_algebra(read_file(opt.input_path))
                               : builtin(opt.builtin_name);

  if (opt.command == "validate") {
    const ValidationReport report = alg.validate();
    std::cout << render_validation(alg, report, format);
    return report.ok() ? kExitOk : kExitInvalid;
  }

  ValidatedAlgebra validated{std::move(alg)};

  if (opt.command == "support") {
    std::cout << render_support(support(validated), format);
    return kExitOk;
  }
  if (opt.command == "connections") {
    const SupportGraph sg = SupportGraph::from_algebra(validated);
    const std::size_t depth =
        opt.oracle_depth ? opt.oracle_depth : complete_oracle_depth(sg);
    std::cout << render_connections(connection_classes(sg), sg, depth, format);
    return kExitOk;
  }
  if (opt.command == "ideals") {
    std::cout << render_support_decomposition(
        validated, support_decomposition(validated), format);
    return kExitOk;
  }
  if (opt.command == "decompose") {
    std::cout << render_structure_report(structure_decomposition(validated),
                                         format);
    return kExitOk;
  }
  if (opt.command == "report") {
    const FullReport report =
        render_full_report(validated, opt.oracle_depth, format);
    std::cout << report.rendered;
    return report.hypotheses_unmet ? kExitHypotheses : kExitOk;
  }
  throw std::runtime_error("unknown command: " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analyzer for finite-dimensional graded Lie superalgebras"};
  Options opt;
  app.add_option("--command", opt.command,
                 "one of: validate, support, connections, ideals, decompose, "
                 "report")
      ->required();
  auto* input = app.add_option("--input", opt.input_path, "algebra document");
  auto* builtin_opt =
      app.add_option("--builtin", opt.builtin_name, "builtin algebra name");
  input->excludes(builtin_opt);
  app.add_option("--format", opt.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--oracle-depth", opt.oracle_depth,
                 "chain search depth override for connection audits");
  CLI11_PARSE(app, argc, argv);

  if (opt.input_path.empty() == opt.builtin_name.empty()) {
    std::cerr << "exactly one of --input and --builtin is required\n";
    return kExitUsage;
  }
  const std::set<std::string> commands = {"validate", "support", "connections",
                                          "ideals",   "decompose", "report"};
  if (!commands.count(opt.command)) {
    std::cerr << "unknown command: " << opt.command << "\n";
    return kExitUsage;
  }

  try {
    return run(opt);
  } catch (const grlie::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const grlie::HypothesesNotMet& e) {
    std::cerr << e.what() << "\n";
    return kExitHypotheses;
  } catch (const grlie::VerificationFailure& e) {
    std::cerr << "verification failure (this is a bug): " << e.what() << "\n";
    return kExitVerification;
  } catch (const grlie::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
