#include "disthyp/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "disthyp/errors.hpp"

namespace disthyp {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Eigen::MatrixXd matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array()) throw std::runtime_error(std::string(what) + " must be an array");
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  Eigen::Index n_cols = 0;
  if (n_rows > 0) {
    if (!rows[0].is_array()) throw std::runtime_error(std::string(what) + " rows must be arrays");
    n_cols = static_cast<Eigen::Index>(rows[0].size());
  }
  Eigen::MatrixXd m(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols)
      throw std::runtime_error(std::string(what) + " rows must have equal length");
    for (Eigen::Index j = 0; j < n_cols; ++j)
      m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string instance_digest(const Hypergraph& h) {
  // Canonical serialization: n, then each edge as sorted ids plus weight.
  std::string text = "n=" + std::to_string(h.n_vertices()) + ";";
  for (int e = 0; e < h.n_edges(); ++e) {
    text += "e=";
    for (int v : h.edge(e)) {
      text += std::to_string(v);
      text += ',';
    }
    text += "w=" + format_double(h.weight(e)) + ";";
  }
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a 64-bit offset basis
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string mask_to_bitstring(SpinMask x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int v = 0; v < n; ++v)
    if ((x >> v) & 1U) s[static_cast<std::size_t>(v)] = '1';
  return s;
}

SpinMask bitstring_to_mask(const std::string& s) {
  if (s.size() > 64) throw std::invalid_argument("bitstring longer than 64");
  SpinMask x = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s[v] == '1')
      x |= SpinMask{1} << v;
    else if (s[v] != '0')
      throw std::invalid_argument("bitstring must contain only 0/1");
  }
  return x;
}

std::string report_to_json(const SolveReport& r) {
  json doc;
  doc["instance"] = r.instance;
  doc["digest"] = r.digest;
  doc["problem"] = r.problem;
  doc["solver"] = r.solver;
  doc["n"] = r.n;
  doc["m"] = r.m;
  doc["p"] = r.p;
  if (std::isfinite(r.alpha)) doc["alpha"] = r.alpha;
  doc["objective"] = r.objective;
  doc["scores"] = vector_to_json(r.scores);
  doc["q"] = matrix_to_json(r.q);
  if (!r.support.empty()) {
    json sup = json::array();
    for (const auto& [mask, prob] : r.support)
      sup.push_back({{"x", mask_to_bitstring(mask, r.n)}, {"p", prob}});
    doc["support"] = std::move(sup);
  }
  if (std::isfinite(r.bound)) doc["bound"] = r.bound;
  if (std::isfinite(r.gap)) doc["gap"] = r.gap;
  doc["iterations"] = r.iterations;
  doc["seconds"] = r.seconds;
  doc["seed"] = r.seed;
  return doc.dump(2) + "\n";
}

void write_report(const std::string& path, const SolveReport& r) {
  write_text_file(path, report_to_json(r));
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
  c.params.validate(static_cast<int>(c.params.betas.cols()),
                    static_cast<int>(c.params.gammas.cols()));
  json doc;
  doc["p"] = c.params.p;
  doc["betas"] = matrix_to_json(c.params.betas);
  doc["gammas"] = matrix_to_json(c.params.gammas);
  doc["seed"] = c.seed;
  doc["iter"] = c.iter;
  doc["objective"] = c.objective;
  write_text_file(path, doc.dump(2) + "\n");
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ParseError(path, 0, err.what());
  }
  try {
    Checkpoint c;
    c.params.p = doc.at("p").get<int>();
    c.params.betas = matrix_from_json(doc.at("betas"), "betas");
    c.params.gammas = matrix_from_json(doc.at("gammas"), "gammas");
    c.seed = doc.at("seed").get<std::uint64_t>();
    c.iter = doc.at("iter").get<int>();
    c.objective = doc.at("objective").get<double>();
    c.params.validate(static_cast<int>(c.params.betas.cols()),
                      static_cast<int>(c.params.gammas.cols()));
    return c;
  } catch (const json::exception& err) {
    throw ParseError(path, 0, err.what());
  }
}

void write_certificate(const std::string& path, const GameCertificate& cert) {
  json doc;
  json sup = json::array();
  const int n = cert.primal.n_vertices();
  for (const auto& [mask, prob] : cert.primal.support())
    sup.push_back({{"x", mask_to_bitstring(mask, n)}, {"p", prob}});
  doc["support"] = std::move(sup);
  doc["dual"] = vector_to_json(cert.dual);
  doc["primal_value"] = cert.primal_value;
  doc["dual_value"] = cert.dual_value;
  doc["gap"] = cert.gap;
  write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace disthyp
