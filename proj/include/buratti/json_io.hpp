#pragma once

#include <string>
#include <vector>

#include "buratti/oracle.hpp"
#include "buratti/realization.hpp"

namespace buratti {

// On-disk form of a single realization: one JSON document with fields in the
// fixed order p, kind, target, edges|order, valid, diameter_vertices,
// provenance. Trees carry `edges` (normalized pairs, sorted), paths carry
// `order`. Serialization is byte-stable so records can be golden-tested.
struct RealizationRecord {
    int p = 0;
    realization_kind kind = realization_kind::tree;
    std::string target;
    std::vector<Edge> edges;
    std::vector<int> order;
    bool valid = false;
    int diameter_vertices = 0;
    std::string provenance;
};

RealizationRecord make_record(const TreeRealization& tree, const LengthMultiset& target,
                              const std::string& provenance);
RealizationRecord make_record(const PathRealization& path, realization_kind kind,
                              const LengthMultiset& target, const std::string& provenance);

std::string record_to_json(const RealizationRecord& record);

// Parses a stored record. Malformed documents (bad JSON, missing or
// ill-typed fields, unknown kind) raise errc::parse.
RealizationRecord parse_record(const std::string& text);

// Re-checks a stored record from scratch: rebuilds the realization, verifies
// it against the record's own target, and recomputes the diameter. Returns
// true only when the record is self-consistent (stored valid flag, stored
// diameter, and the re-verification all agree). `why` gets a diagnostic on
// failure.
bool verify_record(const RealizationRecord& record, std::string* why = nullptr);

// Failure document for realize runs that end without a realization:
// fields p, kind, target, valid (false), status, nodes, provenance.
std::string failure_record(const Modulus& m, realization_kind kind, const LengthMultiset& target,
                           const std::string& status, std::uint64_t nodes,
                           const std::string& provenance);

// DOT graph with vertices 0..p-1 placed on a circle (neato pin positions)
// and edges labeled by cyclic length. Output is stable: vertices ascending,
// edges sorted, fixed attribute order.
std::string record_to_dot(const RealizationRecord& record);

}  // namespace buratti
