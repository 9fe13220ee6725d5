#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "mckay/error.hpp"

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2 };

void print_error(std::string_view code, const std::string& message) {
  nlohmann::json j{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mckay::cli;
  CLI::App app{"Crepant resolutions and Chen-Ruan cohomology of weighted projective spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  RunConfig cfg;
  auto weights = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--weights,-w", cfg.weights, "Comma-separated weights, e.g. 1,3,4,4");
    if (required) o->required();
  };
  auto rays = [&](CLI::App* sub) { sub->add_option("--rays", cfg.rays_file, "JSON ray recipe {\"rays\": [...]}"); };

  Outcome (*handler)(const RunConfig&) = nullptr;
  auto bind = [&](CLI::App* sub, Outcome (*f)(const RunConfig&)) { sub->callback([&handler, f] { handler = f; }); };

  auto* gor = app.add_subcommand("gorenstein", "Gorenstein weights");
  gor->require_subcommand(1);
  auto* check = gor->add_subcommand("check", "Test one weight vector");
  weights(check);
  bind(check, gorenstein_check);
  auto* enumerate = gor->add_subcommand("enumerate", "List all Gorenstein weights of a dimension");
  enumerate->add_option("--dim", cfg.dim, "Dimension")->required();
  bind(enumerate, gorenstein_enumerate);

  auto* sec = app.add_subcommand("sectors", "Twisted sectors and ages");
  weights(sec);
  bind(sec, sectors);

  auto* res = app.add_subcommand("resolve", "Crepant resolution fan and validators");
  weights(res);
  rays(res);
  bind(res, resolve);

  auto* coh = app.add_subcommand("cohomology", "Cohomology ring of the resolution");
  weights(coh);
  rays(coh);
  bind(coh, cohomology);

  auto* cr = app.add_subcommand("chenruan", "Chen-Ruan cohomology");
  weights(cr);
  cr->add_option("--presentation", cfg.presentation_file, "JSON ring presentation");
  bind(cr, chenruan);

  auto* qu = app.add_subcommand("quantum", "Quantum corrected product (symbolic without --q)");
  weights(qu);
  rays(qu);
  qu->add_option("--q", cfg.q, "Quantum parameters, e.g. i,i,i,0");
  bind(qu, quantum);

  auto* mr = app.add_subcommand("mrho", "Contracted curve classes and chain structure");
  weights(mr);
  rays(mr);
  bind(mr, mrho);

  auto* vi = app.add_subcommand("verify-iso", "Check a generator map is a ring isomorphism");
  weights(vi);
  rays(vi);
  vi->add_option("--q", cfg.q, "Quantum parameters (default all zero)");
  vi->add_option("--map", cfg.map_file, "JSON generator map")->required();
  vi->add_option("--presentation", cfg.presentation_file, "JSON Chen-Ruan presentation");
  vi->add_flag("--isometry", cfg.isometry, "Also require the map to preserve the pairings");
  bind(vi, verify_iso);

  auto* sc = app.add_subcommand("scan", "Try a list of quantum parameter values");
  weights(sc);
  rays(sc);
  sc->add_option("--map", cfg.map_file, "JSON generator map")->required();
  sc->add_option("--candidates", cfg.candidates, "Semicolon-separated evaluations, e.g. \"i,i,i,0;-i,-i,-i,0\"");
  sc->add_option("--presentation", cfg.presentation_file, "JSON Chen-Ruan presentation");
  bind(sc, scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return usage;
  }

  try {
    const Outcome out = handler(cfg);
    std::cout << (format == "json" ? out.report.dump(2) + "\n" : render_text(out.report));
    return out.verified ? ok : verification_failed;
  } catch (const mckay::Error& e) {
    print_error(mckay::error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    print_error("internal", e.what());
  }
  return usage;
}
