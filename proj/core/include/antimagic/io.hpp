#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"

// Serialization of the core types. All vertex ids, labels and component ids
// are 1-based on the wire; in-memory everything stays 0-based. Parsers throw
// std::invalid_argument on malformed input (including structurally valid JSON
// with out-of-range or inconsistent fields).
namespace antimagic::io {

// {"n": int, "arcs": [[tail, head], ...], "components": [int, ...]}
// The component entry for each vertex must agree with the weak-component
// partition recomputed from the arcs (ids may be permuted consistently).
std::string graph_to_json_string(const OrientedGraph& g);
OrientedGraph graph_from_json_string(const std::string& text);

// {"n": int, "labels": [int, ...]}; labels[i] is the label of v_{i+1}
std::string labeling_to_json_string(const Labeling& f);
Labeling labeling_from_json_string(const std::string& text);

// {"components": [{"n": int, "m": int, "kind": "unidirectional" | "theta" |
//  "custom", "bits": "1101..."}]}; bits only for kind "custom"
std::string spec_to_json_string(const TwoRegularSpec& spec);
TwoRegularSpec spec_from_json_string(const std::string& text);

// {"name": str, "n": int, "orientation_bits": str, "d": [int...],
//  "labels": [int...]}
std::string fixture_to_json_string(const FixtureWitness& fw);
FixtureWitness fixture_from_json_string(const std::string& text);

// CSV with header vertex,label,weight; one row per vertex, 1-based
std::string weights_csv(const Labeling& f, const WeightReport& rep);

// {"antimagic": bool, "d": [int...], "witness": [u, v] | null}
std::string verdict_json_string(const WeightReport& rep, const DistanceSet& d);

// CSV with header n,orientation_bits,D,outcome,witness_labels; the D cell
// uses ';' between values and witness labels are ';'-joined so no cell ever
// needs quoting
std::string sweep_csv(const SweepResult& res);

// Graphviz digraph; node text is "v_i", or "v_i [label]" when a labeling is
// supplied
std::string to_dot(const OrientedGraph& g, const Labeling* f = nullptr);

// "0,3" -> {0, 3}; values must be non-negative integers. Ordering and
// duplicate checks are left to the DistanceSet constructor so the caller can
// distinguish parse errors from domain errors.
std::vector<int> parse_distance_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace antimagic::io
