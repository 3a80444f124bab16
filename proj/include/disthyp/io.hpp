#pragma once

#include <string>

#include "disthyp/hypergraph.hpp"
#include "disthyp/incidence.hpp"

namespace disthyp {

enum class HypergraphFormat {
  Auto,    // pick by extension: .json -> Json, anything else -> Hmetis
  Hmetis,  // header "<#edges> <#vertices> [fmt]", 1-based ids per line
  Json,    // {"n": int, "edges": [[ids]], "weights": [..]} with 0-based ids
};

// Throws ParseError (with line number) on malformed input, IoError when the
// file cannot be opened.
Hypergraph read_hypergraph(const std::string& path,
                           HypergraphFormat format = HypergraphFormat::Auto);
void write_hypergraph(const std::string& path, const Hypergraph& h,
                      HypergraphFormat format = HypergraphFormat::Auto);

// Paired simplex files: one file of edge sizes, one flattened 1-based vertex
// list consumed in order. Vertex count = largest id seen.
Hypergraph read_benson(const std::string& nverts_path,
                       const std::string& simplices_path);

// Optional non-uniform incidence: JSON {"columns": [[p_v for v in 0..n) ] per
// edge]}, validated against h (support, simplex constraints).
StochasticIncidence read_incidence(const std::string& path,
                                   const Hypergraph& h);

}  // namespace disthyp
