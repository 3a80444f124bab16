#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "common.hpp"

#include "disthyp/errors.hpp"
#include "disthyp/gen.hpp"
#include "disthyp/io.hpp"
#include "disthyp/report.hpp"

namespace disthyp::cli {

namespace {

struct GenCommon {
  std::string out_dir = ".";
  std::string format = "hmetis";  // hmetis | json
  std::string config_path;
};

HypergraphFormat parse_format(const std::string& format) {
  if (format == "hmetis") return HypergraphFormat::Hmetis;
  if (format == "json") return HypergraphFormat::Json;
  throw std::invalid_argument("unknown format '" + format +
                              "' (expected hmetis or json)");
}

std::string extension_of(const std::string& format) {
  return format == "json" ? ".json" : ".hmetis";
}

// Writes <stem>.<ext> plus <stem>.provenance.json and prints the instance
// path, so generated files are scriptable and self-describing.
void emit_instance(const Hypergraph& h, const std::string& out_dir,
                   const std::string& stem, const std::string& format,
                   const nlohmann::json& provenance) {
  ensure_directory(out_dir);
  const std::string base = out_dir + "/" + stem;
  const std::string instance_path = base + extension_of(format);
  write_hypergraph(instance_path, h, parse_format(format));

  nlohmann::json doc = provenance;
  doc["digest"] = instance_digest(h);
  doc["n"] = h.n_vertices();
  doc["m"] = h.n_edges();
  std::ofstream out(base + ".provenance.json", std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + base + ".provenance.json");
  out << doc.dump(2) << "\n";

  std::printf("%s\n", instance_path.c_str());
}

void register_gen_poisson(CLI::App& gen, std::shared_ptr<GenCommon> common) {
  auto* cmd = gen.add_subcommand(
      "poisson", "Random hypergraph with Poisson-distributed edge sizes");
  auto spec = std::make_shared<PoissonSpec>();
  spec->n_vertices = 12;
  spec->n_edges = 16;
  spec->rate = 4.0;
  spec->seed = 0;
  auto* n_opt = cmd->add_option("--n", spec->n_vertices, "Vertex count");
  auto* m_opt = cmd->add_option("--m", spec->n_edges, "Edge draw count");
  auto* mu_opt =
      cmd->add_option("--mu", spec->rate, "Target mean edge size (> 2)");
  auto* seed_opt = cmd->add_option("--seed", spec->seed, "RNG seed");
  cmd->callback([&gen, cmd, spec, common, n_opt, m_opt, mu_opt, seed_opt] {
    const ConfigFile cfg = load_config(common->config_path);
    fill_from_config(cfg, n_opt, "n", spec->n_vertices);
    fill_from_config(cfg, m_opt, "m", spec->n_edges);
    fill_from_config(cfg, mu_opt, "mu", spec->rate);
    fill_from_config(cfg, seed_opt, "seed", spec->seed);
    (void)gen;
    const Hypergraph h = poisson_hypergraph(*spec);
    char stem[128];
    std::snprintf(stem, sizeof(stem), "poisson_n%d_m%d_mu%s_seed%llu",
                  spec->n_vertices, spec->n_edges,
                  format_g(spec->rate, 6).c_str(),
                  static_cast<unsigned long long>(spec->seed));
    nlohmann::json prov;
    prov["generator"] = "poisson";
    prov["params"] = {{"n", spec->n_vertices},
                      {"m", spec->n_edges},
                      {"mu", spec->rate}};
    prov["seed"] = spec->seed;
    emit_instance(h, common->out_dir, stem, common->format, prov);
  });
}

void register_gen_karloff(CLI::App& gen, std::shared_ptr<GenCommon> common) {
  auto* cmd = gen.add_subcommand(
      "karloff-cliques",
      "Maximal-clique hypergraph of the Karloff graph on t-subsets of [m]");
  auto spec = std::make_shared<KarloffSpec>();
  spec->m = 6;
  spec->t = 3;
  spec->b = 1;
  auto* m_opt = cmd->add_option("--m", spec->m, "Ground-set size");
  auto* t_opt = cmd->add_option("--t", spec->t, "Subset size");
  auto* b_opt = cmd->add_option("--b", spec->b, "Adjacency intersection size");
  cmd->callback([cmd, spec, common, m_opt, t_opt, b_opt] {
    const ConfigFile cfg = load_config(common->config_path);
    fill_from_config(cfg, m_opt, "m", spec->m);
    fill_from_config(cfg, t_opt, "t", spec->t);
    fill_from_config(cfg, b_opt, "b", spec->b);
    const Hypergraph h = karloff_clique_hypergraph(*spec);
    char stem[128];
    std::snprintf(stem, sizeof(stem), "karloff_m%d_t%d_b%d", spec->m, spec->t,
                  spec->b);
    nlohmann::json prov;
    prov["generator"] = "karloff-cliques";
    prov["params"] = {{"m", spec->m}, {"t", spec->t}, {"b", spec->b}};
    prov["seed"] = 0;
    emit_instance(h, common->out_dir, stem, common->format, prov);
  });
}

}  // namespace

void register_gen(CLI::App& app) {
  auto* gen = app.add_subcommand("gen", "Generate benchmark instances");
  gen->require_subcommand(1);
  gen->fallthrough();  // --out/--format/--config may follow the generator name
  auto common = std::make_shared<GenCommon>();
  gen->add_option("--out", common->out_dir, "Output directory")
      ->capture_default_str();
  gen->add_option("--format", common->format, "Instance format: hmetis | json")
      ->capture_default_str();
  gen->add_option("--config", common->config_path,
                  "JSON config file (flags override it)");
  register_gen_poisson(*gen, common);
  register_gen_karloff(*gen, common);
}

}  // namespace disthyp::cli
