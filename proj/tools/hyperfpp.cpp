// Command-line front end: hyperfpp <subcommand> [flags]. See README.md.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperfpp/cli/run.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace hyperfpp;
  cli::RunConfig cfg;
  std::optional<int> cap_flag;
  CLI::App app{"Oriented first-passage percolation on the hypercube"};
  app.set_version_flag("--version", kVersion);
  cli::configure_app(app, cfg, cap_flag);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.cap = cli::resolve_cap(cap_flag, std::getenv("HYPERFPP_CAP"));
    const cli::Table table = cli::run(cfg);
    std::ostringstream buffer;
    if (cfg.format == cli::Format::csv)
      cli::write_csv(buffer, cli::echo_config(cfg), table);
    else
      cli::write_json(buffer, cli::echo_config(cfg), table);

    if (cfg.output.empty()) {
      std::cout << buffer.str() << std::flush;
      if (!std::cout) throw std::runtime_error("failed writing to stdout");
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      out << buffer.str();
      out.close();
      if (!out) throw std::runtime_error("failed writing " + cfg.output);
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
