#include "disthyp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "disthyp/errors.hpp"
#include "json.hpp"

namespace disthyp {

namespace {

using nlohmann::json;

HypergraphFormat detect_format(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json")
    return HypergraphFormat::Json;
  return HypergraphFormat::Hmetis;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Splits into lines, dropping '%' comment lines and blank lines but keeping
// the original 1-based line numbers for error messages.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '%') continue;
    out.emplace_back(number, line);
  }
  return out;
}

Hypergraph read_hmetis(const std::string& path) {
  const auto lines = content_lines(read_all(path));
  if (lines.empty()) throw ParseError(path, 1, "empty file");

  long m = 0, n = 0, fmt = 0;
  {
    std::istringstream head(lines[0].second);
    if (!(head >> m >> n))
      throw ParseError(path, lines[0].first,
                       "header must read \"<#edges> <#vertices> [fmt]\"");
    if (!(head >> fmt)) fmt = 0;
    std::string extra;
    if (head >> extra)
      throw ParseError(path, lines[0].first, "unexpected token in header");
    if (m < 0 || n <= 0)
      throw ParseError(path, lines[0].first, "invalid edge/vertex counts");
    if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11)
      throw ParseError(path, lines[0].first,
                       "unsupported fmt " + std::to_string(fmt));
  }
  const bool edge_weights = (fmt % 10) == 1;
  const bool vertex_weights = fmt >= 10;

  const long expected = m + (vertex_weights ? n : 0);
  if (static_cast<long>(lines.size()) - 1 != expected)
    throw ParseError(path, lines.back().first,
                     "expected " + std::to_string(expected) +
                         " data lines, found " +
                         std::to_string(lines.size() - 1));

  std::vector<std::vector<int>> edges;
  std::vector<double> weights;
  edges.reserve(static_cast<std::size_t>(m));
  weights.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    const auto& [lineno, text] = lines[static_cast<std::size_t>(e) + 1];
    std::istringstream in(text);
    double w = 1.0;
    if (edge_weights && !(in >> w))
      throw ParseError(path, lineno, "missing edge weight");
    std::vector<int> verts;
    long v;
    while (in >> v) {
      if (v < 1 || v > n)
        throw ParseError(path, lineno,
                         "vertex id " + std::to_string(v) +
                             " out of range [1, " + std::to_string(n) + "]");
      verts.push_back(static_cast<int>(v - 1));
    }
    if (!in.eof()) throw ParseError(path, lineno, "malformed vertex id");
    if (verts.empty()) throw ParseError(path, lineno, "empty edge");
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw ParseError(path, lineno, "duplicate vertex id within edge");
    edges.push_back(std::move(verts));
    weights.push_back(w);
  }
  // Per-vertex weight lines (fmt 10/11) are parsed for format conformance but
  // carry no meaning here: the distributional objectives weight edges only.
  try {
    return Hypergraph(static_cast<int>(n), std::move(edges),
                      std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, lines[0].first, e.what());
  }
}

Hypergraph read_json_instance(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_all(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path, 1, e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    std::vector<std::vector<int>> edges =
        doc.at("edges").get<std::vector<std::vector<int>>>();
    std::vector<double> weights;
    if (doc.contains("weights"))
      weights = doc.at("weights").get<std::vector<double>>();
    return Hypergraph(n, std::move(edges), std::move(weights));
  } catch (const json::exception& e) {
    throw ParseError(path, 1, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, 1, e.what());
  }
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

void write_hmetis(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  const bool weighted = std::any_of(h.weights().begin(), h.weights().end(),
                                    [](double w) { return w != 1.0; });
  out << h.n_edges() << ' ' << h.n_vertices();
  if (weighted) out << " 1";
  out << '\n';
  for (int e = 0; e < h.n_edges(); ++e) {
    if (weighted) out << format_weight(h.weight(e)) << ' ';
    const auto& verts = h.edge(e);
    for (std::size_t i = 0; i < verts.size(); ++i)
      out << (i ? " " : "") << (verts[i] + 1);
    out << '\n';
  }
  if (!out) throw IoError("error writing " + path);
}

void write_json_instance(const std::string& path, const Hypergraph& h) {
  json doc;
  doc["n"] = h.n_vertices();
  doc["edges"] = h.edges();
  doc["weights"] = h.weights();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("error writing " + path);
}

}  // namespace

Hypergraph read_hypergraph(const std::string& path, HypergraphFormat format) {
  if (format == HypergraphFormat::Auto) format = detect_format(path);
  return format == HypergraphFormat::Json ? read_json_instance(path)
                                          : read_hmetis(path);
}

void write_hypergraph(const std::string& path, const Hypergraph& h,
                      HypergraphFormat format) {
  if (format == HypergraphFormat::Auto) format = detect_format(path);
  if (format == HypergraphFormat::Json)
    write_json_instance(path, h);
  else
    write_hmetis(path, h);
}

Hypergraph read_benson(const std::string& nverts_path,
                       const std::string& simplices_path) {
  std::vector<long> sizes;
  {
    const auto lines = content_lines(read_all(nverts_path));
    for (const auto& [lineno, text] : lines) {
      std::istringstream in(text);
      long s;
      while (in >> s) {
        if (s <= 0)
          throw ParseError(nverts_path, lineno, "edge size must be positive");
        sizes.push_back(s);
      }
      if (!in.eof()) throw ParseError(nverts_path, lineno, "malformed size");
    }
  }
  std::vector<long> flat;
  {
    const auto lines = content_lines(read_all(simplices_path));
    for (const auto& [lineno, text] : lines) {
      std::istringstream in(text);
      long v;
      while (in >> v) {
        if (v < 1)
          throw ParseError(simplices_path, lineno,
                           "vertex ids are 1-based positive integers");
        flat.push_back(v);
      }
      if (!in.eof())
        throw ParseError(simplices_path, lineno, "malformed vertex id");
    }
  }
  long total = 0;
  for (long s : sizes) total += s;
  if (total != static_cast<long>(flat.size()))
    throw ParseError(simplices_path, 1,
                     "vertex list length " + std::to_string(flat.size()) +
                         " does not match sum of sizes " +
                         std::to_string(total));
  long n = 0;
  for (long v : flat) n = std::max(n, v);
  std::vector<std::vector<int>> edges;
  edges.reserve(sizes.size());
  std::size_t pos = 0;
  for (long s : sizes) {
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(s));
    for (long i = 0; i < s; ++i)
      verts.push_back(static_cast<int>(flat[pos++] - 1));
    edges.push_back(std::move(verts));
  }
  try {
    return Hypergraph(static_cast<int>(n), std::move(edges), {});
  } catch (const std::invalid_argument& e) {
    throw ParseError(simplices_path, 1, e.what());
  }
}

StochasticIncidence read_incidence(const std::string& path,
                                   const Hypergraph& h) {
  json doc;
  try {
    doc = json::parse(read_all(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path, 1, e.what());
  }
  std::vector<std::vector<double>> cols;
  try {
    cols = doc.at("columns").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw ParseError(path, 1, e.what());
  }
  if (static_cast<int>(cols.size()) != h.n_edges())
    throw ParseError(path, 1,
                     "expected " + std::to_string(h.n_edges()) + " columns");
  Eigen::MatrixXd m(h.n_vertices(), h.n_edges());
  for (int e = 0; e < h.n_edges(); ++e) {
    if (static_cast<int>(cols[static_cast<std::size_t>(e)].size()) !=
        h.n_vertices())
      throw ParseError(path, 1,
                       "column " + std::to_string(e) + " has wrong length");
    for (int v = 0; v < h.n_vertices(); ++v)
      m(v, e) = cols[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)];
  }
  try {
    return StochasticIncidence::from_columns(h, m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, 1, e.what());
  }
}

}  // namespace disthyp
