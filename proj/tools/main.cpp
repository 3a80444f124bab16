#include <cstdio>
#include <exception>
#include <stdexcept>

#include "common.hpp"

#include "disthyp/errors.hpp"

namespace {

// 0 success; 2 usage; 3 solver resource limit; 4 I/O.
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distributional hypergraph partitioning: generators, variational and "
      "semidefinite solvers, exact small-instance game solving."};
  app.name("disthyp");
  app.require_subcommand(1);

  disthyp::cli::register_gen(app);
  disthyp::cli::register_solve(app);
  disthyp::cli::register_pareto(app);
  disthyp::cli::register_sweep(app);
  disthyp::cli::register_compare(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : kExitUsage;
  } catch (const disthyp::ResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  } catch (const disthyp::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const disthyp::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
