#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "disthyp/brute.hpp"
#include "disthyp/hypergraph.hpp"
#include "disthyp/incidence.hpp"
#include "disthyp/io.hpp"
#include "disthyp/objective.hpp"
#include "disthyp/report.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace disthyp;
using nlohmann::json;

namespace {

const char* cli_path() { return DISTHYP_CLI_PATH; }

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary through the shell with stdout/stderr captured
// to files; timing is pinned off so CSV output is bit-reproducible.
RunResult run_cli(const std::string& args, const fs::path& scratch) {
  static int counter = 0;
  const fs::path out_file = scratch / ("stdout." + std::to_string(counter));
  const fs::path err_file = scratch / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = "DISTHYP_TIMING=0 '" + std::string(cli_path()) +
                          "' " + args + " > '" + out_file.string() + "' 2> '" +
                          err_file.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = status == -1 ? -1 : WEXITSTATUS(status);
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::path("cli_scratch") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(bool(out));
  out << content;
}

fs::path write_c5(const fs::path& dir) {
  const fs::path p = dir / "c5.hmetis";
  write_file(p, "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  return p;
}

fs::path write_triangle(const fs::path& dir) {
  const fs::path p = dir / "triangle.hmetis";
  write_file(p, "3 3\n1 2\n2 3\n1 3\n");
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

constexpr const char* kCsvHeader =
    "instance,n,m,problem,solver,p,alpha,objective,score_min,score_max,"
    "iters,seconds,seed";

}  // namespace

TEST_CASE("gen emits deterministic instances with provenance") {
  const fs::path dir = scratch_dir("gen");

  const RunResult first =
      run_cli("gen karloff-cliques --out '" + (dir / "a").string() + "'", dir);
  REQUIRE(first.code == 0);
  const std::string instance_path = (dir / "a" / "karloff_m6_t3_b1.hmetis").string();
  CHECK(first.out == instance_path + "\n");

  const std::string body = slurp(instance_path);
  CHECK(body.substr(0, body.find('\n')) == "30 20");

  const RunResult second =
      run_cli("gen karloff-cliques --out '" + (dir / "b").string() + "'", dir);
  REQUIRE(second.code == 0);
  CHECK(slurp(dir / "b" / "karloff_m6_t3_b1.hmetis") == body);

  const json prov = json::parse(slurp(dir / "a" / "karloff_m6_t3_b1.provenance.json"));
  CHECK(prov.at("generator") == "karloff-cliques");
  CHECK(prov.at("n") == 20);
  CHECK(prov.at("m") == 30);
  const Hypergraph h = read_hypergraph(instance_path);
  CHECK(prov.at("digest") == instance_digest(h));

  SUBCASE("poisson respects the json format flag") {
    const RunResult r = run_cli(
        "gen poisson --n 9 --m 7 --mu 3 --seed 4 --format json --out '" +
            (dir / "j").string() + "'",
        dir);
    REQUIRE(r.code == 0);
    const std::string path = (dir / "j" / "poisson_n9_m7_mu3_seed4.json").string();
    CHECK(r.out == path + "\n");
    const Hypergraph g = read_hypergraph(path);
    CHECK(g.n_vertices() == 9);
    const json p2 = json::parse(slurp(dir / "j" / "poisson_n9_m7_mu3_seed4.provenance.json"));
    CHECK(p2.at("digest") == instance_digest(g));
    CHECK(p2.at("seed") == 4);
  }
}

TEST_CASE("solve writes a self-consistent report, csv row, and stdout line") {
  const fs::path dir = scratch_dir("solve_brute");
  const fs::path c5 = write_c5(dir);

  const RunResult r = run_cli("solve --instance '" + c5.string() +
                                  "' --problem total_variance --solver brute"
                                  " --out '" +
                                  (dir / "out").string() + "'",
                              dir);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out == "c5 total_variance brute objective=4\n");

  const json rep = json::parse(slurp(dir / "out" / "c5_total_variance_brute.json"));
  CHECK(rep.at("instance") == "c5");
  CHECK(rep.at("problem") == "total_variance");
  CHECK(rep.at("solver") == "brute");
  CHECK(rep.at("n") == 5);
  CHECK(rep.at("m") == 5);
  CHECK(rep.at("p") == 0);
  CHECK(rep.at("objective").get<double>() == doctest::Approx(4.0));
  CHECK(rep.at("bound").get<double>() == doctest::Approx(4.0));
  CHECK(rep.at("gap").get<double>() == 0.0);
  CHECK_FALSE(rep.contains("alpha"));

  // The stored Q must reproduce the stored objective under the rebuilt
  // family: reports are self-validating.
  const Hypergraph h = read_hypergraph(c5.string());
  const QuadraticFamily fam =
      total_variance_family(StochasticIncidence::uniform(h));
  Eigen::MatrixXd q(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      q(i, j) = rep.at("q").at(i).at(j).get<double>();
  CHECK(evaluate(fam, q).value ==
        doctest::Approx(rep.at("objective").get<double>()).epsilon(1e-9));
  CHECK(rep.at("digest") == instance_digest(h));

  REQUIRE(rep.contains("support"));
  CHECK(rep.at("support").size() == 1);
  CHECK(rep.at("support").at(0).at("x").get<std::string>().size() == 5);
  CHECK(rep.at("support").at(0).at("p").get<double>() == 1.0);

  const std::vector<std::string> csv = lines_of(slurp(dir / "out" / "results.csv"));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == kCsvHeader);
  const std::vector<std::string> cells = split_commas(csv[1]);
  REQUIRE(cells.size() == 13);
  CHECK(cells[0] == "c5");
  CHECK(cells[1] == "5");
  CHECK(cells[2] == "5");
  CHECK(cells[3] == "total_variance");
  CHECK(cells[4] == "brute");
  CHECK(cells[5] == "0");
  CHECK(cells[6] == "");   // alpha only applies to pareto
  CHECK(cells[7] == "4");
  CHECK(cells[8] == "0");  // the uncut fifth edge
  CHECK(cells[9] == "1");
  CHECK(cells[11] == "0.000");
  CHECK(cells[12] == "0");
}

TEST_CASE("solve exact emits a certificate sidecar") {
  const fs::path dir = scratch_dir("solve_exact");
  const fs::path tri = write_triangle(dir);

  const RunResult r = run_cli("solve --instance '" + tri.string() +
                                  "' --problem lev --solver exact --eps 1e-6"
                                  " --out '" +
                                  (dir / "out").string() + "'",
                              dir);
  REQUIRE_MESSAGE(r.code == 0, r.err);

  const json rep = json::parse(slurp(dir / "out" / "triangle_lev_exact.json"));
  CHECK(rep.at("objective").get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  CHECK(rep.at("gap").get<double>() <= 1e-6);

  const json cert = json::parse(slurp(dir / "out" / "triangle_lev_exact.certificate.json"));
  CHECK(cert.at("primal_value").get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  CHECK(cert.at("gap").get<double>() <= 1e-6);
  REQUIRE(cert.at("dual").size() == 3);
  double dual_sum = 0.0;
  for (const auto& v : cert.at("dual")) dual_sum += v.get<double>();
  CHECK(dual_sum == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& entry : cert.at("support"))
    CHECK(entry.at("x").get<std::string>().size() == 3);

  SUBCASE("non-game solvers do not write certificates") {
    CHECK_FALSE(fs::exists(dir / "out" / "triangle_lev_sdp.certificate.json"));
    const RunResult s = run_cli("solve --instance '" + tri.string() +
                                    "' --problem lev --solver sdp --out '" +
                                    (dir / "out").string() + "'",
                                dir);
    REQUIRE(s.code == 0);
    CHECK(fs::exists(dir / "out" / "triangle_lev_sdp.json"));
    CHECK_FALSE(fs::exists(dir / "out" / "triangle_lev_sdp.certificate.json"));
  }
}

TEST_CASE("checkpoints round-trip through warm starts") {
  const fs::path dir = scratch_dir("warm");
  const fs::path tri = write_triangle(dir);
  const std::string ckpt = (dir / "angles.json").string();

  const RunResult first = run_cli(
      "solve --instance '" + tri.string() +
          "' --problem total_variance --solver qaoa --p 1 --iters 40"
          " --seed 7 --checkpoint-out '" +
          ckpt + "' --out '" + (dir / "a").string() + "'",
      dir);
  REQUIRE_MESSAGE(first.code == 0, first.err);
  REQUIRE(fs::exists(ckpt));

  const json saved = json::parse(slurp(ckpt));
  CHECK(saved.at("p") == 1);
  CHECK(saved.at("seed") == 7);
  CHECK(saved.at("betas").size() == 1);     // one layer
  CHECK(saved.at("betas").at(0).size() == 3);

  SUBCASE("a shallower checkpoint zero-pads into a deeper ansatz") {
    const RunResult warm = run_cli(
        "solve --instance '" + tri.string() +
            "' --problem total_variance --solver qaoa --p 2 --iters 10"
            " --warm-start '" +
            ckpt + "' --out '" + (dir / "b").string() + "'",
        dir);
    REQUIRE_MESSAGE(warm.code == 0, warm.err);

    // Warm-started training can only improve on the checkpointed value.
    const json base = json::parse(slurp(dir / "a" / "triangle_total_variance_qaoa.json"));
    const json deeper = json::parse(slurp(dir / "b" / "triangle_total_variance_qaoa.json"));
    CHECK(deeper.at("objective").get<double>() >=
          base.at("objective").get<double>() - 1e-9);
  }
  SUBCASE("a deeper checkpoint cannot seed a shallower ansatz") {
    const std::string deep_ckpt = (dir / "deep.json").string();
    const RunResult deep = run_cli(
        "solve --instance '" + tri.string() +
            "' --problem total_variance --solver qaoa --p 2 --iters 5"
            " --checkpoint-out '" +
            deep_ckpt + "' --out '" + (dir / "c").string() + "'",
        dir);
    REQUIRE(deep.code == 0);
    const RunResult bad = run_cli(
        "solve --instance '" + tri.string() +
            "' --problem total_variance --solver qaoa --p 1 --iters 5"
            " --warm-start '" +
            deep_ckpt + "' --out '" + (dir / "d").string() + "'",
        dir);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("deeper") != std::string::npos);
  }
  SUBCASE("warm starts and checkpoints are variational-only") {
    const RunResult bad = run_cli(
        "solve --instance '" + tri.string() +
            "' --problem total_variance --solver sdp --warm-start '" +
            ckpt + "' --out '" + (dir / "e").string() + "'",
        dir);
    CHECK(bad.code == 2);
  }
}

TEST_CASE("exit codes separate usage, resource, and io failures") {
  const fs::path dir = scratch_dir("exits");
  const fs::path tri = write_triangle(dir);

  SUBCASE("brute rejects game-aggregated problems") {
    const RunResult r = run_cli(
        "solve --instance '" + tri.string() + "' --problem gei --solver brute",
        dir);
    CHECK(r.code == 2);
    CHECK(r.err.find("use exact") != std::string::npos);
  }
  SUBCASE("unknown problem and solver names fail as usage errors") {
    CHECK(run_cli("solve --instance '" + tri.string() + "' --problem bogus",
                  dir)
              .code == 2);
    CHECK(run_cli("solve --instance '" + tri.string() + "' --solver bogus",
                  dir)
              .code == 2);
  }
  SUBCASE("flag constraints are enforced by the parser") {
    CHECK(run_cli("sweep-layers --instance '" + tri.string() + "' --max-p 0",
                  dir)
              .code == 2);
    CHECK(run_cli("solve", dir).code == 2);  // --instance is required
  }
  SUBCASE("a missing instance file is an io failure") {
    const RunResult r =
        run_cli("solve --instance '" + (dir / "absent.hmetis").string() + "'",
                dir);
    CHECK(r.code == 4);
  }
  SUBCASE("a malformed instance file is an io failure") {
    write_file(dir / "broken.hmetis", "2 3\n1 2\n");
    const RunResult r = run_cli(
        "solve --instance '" + (dir / "broken.hmetis").string() + "'", dir);
    CHECK(r.code == 4);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("the exact solver reports its size cap as a resource failure") {
    std::string wide = "1 21\n";
    for (int v = 1; v <= 21; ++v) wide += std::to_string(v) + (v < 21 ? " " : "\n");
    write_file(dir / "wide.hmetis", wide);
    const RunResult r = run_cli("solve --instance '" +
                                    (dir / "wide.hmetis").string() +
                                    "' --problem gei --solver exact",
                                dir);
    CHECK(r.code == 3);
    CHECK(r.err.find("exceeds") != std::string::npos);
  }
}

TEST_CASE("pareto sweeps write the front as csv plus svg") {
  const fs::path dir = scratch_dir("pareto");
  const fs::path tri = write_triangle(dir);
  const fs::path path3 = dir / "path3.hmetis";
  write_file(path3, "2 3\n1 2\n2 3\n");

  const RunResult r = run_cli(
      "pareto --instance '" + tri.string() + "' --instance2 '" +
          path3.string() +
          "' --solvers sdp,brute --alpha-count 3 --out '" +
          (dir / "out").string() + "'",
      dir);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const std::vector<std::string> out_lines = lines_of(r.out);
  REQUIRE(out_lines.size() == 2);
  CHECK(out_lines[0] == (dir / "out" / "pareto.csv").string());
  CHECK(out_lines[1] == (dir / "out" / "pareto.svg").string());

  const std::vector<std::string> csv = lines_of(slurp(dir / "out" / "pareto.csv"));
  REQUIRE(csv.size() == 7);  // header + 2 solvers x 3 alphas
  CHECK(csv[0] ==
        "instance,instance2,alpha,solver,imbalance1,variance2,objective,seed");

  // Brute rows are exact point-mass optima of the combined objective;
  // check them against an independent in-process evaluation.
  const Hypergraph h1 = read_hypergraph(tri.string());
  const Hypergraph h2 = read_hypergraph(path3.string());
  const ParetoSpec spec = make_pareto_spec(StochasticIncidence::uniform(h1),
                                           StochasticIncidence::uniform(h2));
  for (const auto& line : csv) {
    const std::vector<std::string> cells = split_commas(line);
    if (cells.size() != 8 || cells[3] != "brute") continue;
    const double alpha = std::stod(cells[2]);
    const double expect =
        brute_force_max_quadratic(pareto_objective(spec, alpha)).value;
    CHECK(std::stod(cells[6]) == doctest::Approx(expect).epsilon(1e-9));
    // The plotted coordinates decompose the objective.
    const double m1 = std::stod(cells[4]);
    const double v2 = std::stod(cells[5]);
    const double recombined = (spec.lambda1 > 0 ? alpha / spec.lambda1 : 0.0) * m1 +
                              (spec.lambda2 > 0 ? (1 - alpha) / spec.lambda2 : 0.0) * v2;
    CHECK(recombined == doctest::Approx(std::stod(cells[6])).epsilon(1e-6));
  }

  const std::string svg = slurp(dir / "out" / "pareto.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("sdp") != std::string::npos);

  SUBCASE("reruns are byte-identical") {
    const RunResult again = run_cli(
        "pareto --instance '" + tri.string() + "' --instance2 '" +
            path3.string() +
            "' --solvers sdp,brute --alpha-count 3 --out '" +
            (dir / "out2").string() + "'",
        dir);
    REQUIRE(again.code == 0);
    CHECK(slurp(dir / "out2" / "pareto.csv") == slurp(dir / "out" / "pareto.csv"));
    CHECK(slurp(dir / "out2" / "pareto.svg") == svg);
  }
}

TEST_CASE("layer sweeps improve monotonically under warm starts") {
  const fs::path dir = scratch_dir("sweep");
  const fs::path tri = write_triangle(dir);

  const RunResult r = run_cli(
      "sweep-layers --instance '" + tri.string() +
          "' --problem total_variance --max-p 3 --iters 40 --seed 2 --warm"
          " --out '" +
          (dir / "out").string() + "'",
      dir);
  REQUIRE_MESSAGE(r.code == 0, r.err);

  const std::vector<std::string> out_lines = lines_of(r.out);
  // p=1..3 lines, sdp + exact reference lines, then csv and svg paths.
  REQUIRE(out_lines.size() == 7);
  CHECK(out_lines[0].rfind("p=1 objective=", 0) == 0);
  CHECK(out_lines[1].rfind("p=2 objective=", 0) == 0);
  CHECK(out_lines[2].rfind("p=3 objective=", 0) == 0);
  CHECK(out_lines[3].rfind("sdp objective=", 0) == 0);
  CHECK(out_lines[4].rfind("exact objective=", 0) == 0);
  CHECK(out_lines[5] == (dir / "out" / "sweep.csv").string());
  CHECK(out_lines[6] == (dir / "out" / "sweep.svg").string());

  const std::vector<std::string> csv = lines_of(slurp(dir / "out" / "sweep.csv"));
  REQUIRE(csv.size() == 6);  // header + 3 qaoa + 2 refs
  CHECK(csv[0] == kCsvHeader);
  double prev = -1.0;
  for (int depth = 1; depth <= 3; ++depth) {
    const std::vector<std::string> cells = split_commas(csv[depth]);
    REQUIRE(cells.size() == 13);
    CHECK(cells[4] == "qaoa");
    CHECK(cells[5] == std::to_string(depth));
    const double objective = std::stod(cells[7]);
    CHECK(objective >= prev - 1e-9);  // zero-padded warm start never regresses
    prev = objective;
  }

  SUBCASE("references can be skipped") {
    const RunResult quick = run_cli(
        "sweep-layers --instance '" + tri.string() +
            "' --problem total_variance --max-p 1 --iters 5 --no-refs"
            " --out '" +
            (dir / "noref").string() + "'",
        dir);
    REQUIRE(quick.code == 0);
    const std::vector<std::string> ls = lines_of(quick.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].rfind("p=1 objective=", 0) == 0);
    const std::vector<std::string> csv2 =
        lines_of(slurp(dir / "noref" / "sweep.csv"));
    CHECK(csv2.size() == 2);
  }
}

TEST_CASE("compare tabulates a directory of instances") {
  const fs::path dir = scratch_dir("compare");
  const fs::path instances = dir / "instances";
  fs::create_directories(instances);
  write_file(instances / "edge.hmetis", "1 2\n1 2\n");
  write_file(instances / "path3.hmetis", "2 3\n1 2\n2 3\n");
  write_file(instances / "triangle.hmetis", "3 3\n1 2\n2 3\n1 3\n");

  const RunResult r = run_cli(
      "compare --dir '" + instances.string() +
          "' --problem lev --solvers qaoa,sdp,exact --p 1 --iters 60"
          " --seed 3 --out '" +
          (dir / "out").string() + "'",
      dir);
  REQUIRE_MESSAGE(r.code == 0, r.err);

  const std::vector<std::string> out_lines = lines_of(r.out);
  REQUIRE(out_lines.size() == 3);
  CHECK(out_lines[0].rfind("instances=3 qaoa_beats_sdp=", 0) == 0);
  CHECK(out_lines[1] == (dir / "out" / "compare.csv").string());
  CHECK(out_lines[2] == (dir / "out" / "compare.svg").string());

  const std::vector<std::string> csv = lines_of(slurp(dir / "out" / "compare.csv"));
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] ==
        "instance,n,m,problem,p,qaoa,sdp,exact,ratio_qaoa,ratio_sdp,seed");
  // Rows come out sorted by path; seeds are assigned by that order.
  const std::vector<std::string> row0 = split_commas(csv[1]);
  REQUIRE(row0.size() == 11);
  CHECK(row0[0] == "edge");
  CHECK(row0[10] == "3");
  const std::vector<std::string> row2 = split_commas(csv[3]);
  CHECK(row2[0] == "triangle");
  CHECK(row2[10] == "5");

  // Exact games on these pins: a lone edge and a 2-path both reach variance
  // 1; the triangle reaches 2/3. Ratios divide by those values.
  CHECK(std::stod(row0[7]) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(std::stod(row2[7]) == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  for (const std::string& line : {csv[1], csv[2], csv[3]}) {
    const std::vector<std::string> cells = split_commas(line);
    CHECK(!cells[8].empty());  // maximization ratios are reported
    CHECK(!cells[9].empty());
    CHECK(std::stod(cells[9]) <= 1.0 + 1e-9);  // rounding cannot beat exact
  }

  SUBCASE("empty and invalid directories fail cleanly") {
    fs::create_directories(dir / "empty");
    CHECK(run_cli("compare --dir '" + (dir / "empty").string() + "'", dir)
              .code == 2);
    CHECK(run_cli("compare --dir '" + (dir / "nothere").string() + "'", dir)
              .code == 4);
  }
}

TEST_CASE("config files fill defaults and flags override them") {
  const fs::path dir = scratch_dir("config");
  const fs::path tri = write_triangle(dir);
  write_file(dir / "cfg.json",
             "{\"seed\": 5, \"iters\": 12, \"problem\": \"total_variance\","
             " \"solver\": \"qaoa\", \"p\": 1}");

  const RunResult from_config = run_cli(
      "solve --instance '" + tri.string() + "' --config '" +
          (dir / "cfg.json").string() + "' --out '" + (dir / "a").string() +
          "'",
      dir);
  REQUIRE_MESSAGE(from_config.code == 0, from_config.err);
  const json rep = json::parse(slurp(dir / "a" / "triangle_total_variance_qaoa.json"));
  CHECK(rep.at("seed") == 5);
  CHECK(rep.at("p") == 1);
  CHECK(rep.at("iterations").get<int>() <= 12);

  const RunResult overridden = run_cli(
      "solve --instance '" + tri.string() + "' --config '" +
          (dir / "cfg.json").string() + "' --seed 9 --out '" +
          (dir / "b").string() + "'",
      dir);
  REQUIRE(overridden.code == 0);
  const json rep2 = json::parse(slurp(dir / "b" / "triangle_total_variance_qaoa.json"));
  CHECK(rep2.at("seed") == 9);
  CHECK(rep2.at("p") == 1);  // non-overridden keys still come from config

  SUBCASE("a malformed config is an io failure") {
    write_file(dir / "broken.json", "{not json");
    CHECK(run_cli("solve --instance '" + tri.string() + "' --config '" +
                      (dir / "broken.json").string() + "'",
                  dir)
              .code == 4);
  }
}

TEST_CASE("identical seeds reproduce identical csv output") {
  const fs::path dir = scratch_dir("rerun");
  const fs::path tri = write_triangle(dir);

  const std::string args = "solve --instance '" + tri.string() +
                           "' --problem lev --solver qaoa --p 2 --iters 50"
                           " --seed 11 --out '";
  const RunResult a = run_cli(args + (dir / "a").string() + "'", dir);
  const RunResult b = run_cli(args + (dir / "b").string() + "'", dir);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(dir / "a" / "results.csv") == slurp(dir / "b" / "results.csv"));

  // A different seed must be visible in the CSV (training moved).
  const RunResult c = run_cli("solve --instance '" + tri.string() +
                                  "' --problem lev --solver qaoa --p 2"
                                  " --iters 50 --seed 12 --out '" +
                                  (dir / "c").string() + "'",
                              dir);
  REQUIRE(c.code == 0);
  CHECK(slurp(dir / "c" / "results.csv") != slurp(dir / "a" / "results.csv"));
}
