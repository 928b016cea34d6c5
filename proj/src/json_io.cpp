#include "buratti/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace buratti {

namespace {

using ordered_json = nlohmann::ordered_json;

length_bound bound_for(realization_kind kind) {
    return kind == realization_kind::linear_path ? length_bound::linear : length_bound::cyclic;
}

RealizationRecord base_record(int p, realization_kind kind, const LengthMultiset& target,
                              const std::string& provenance) {
    RealizationRecord record;
    record.p = p;
    record.kind = kind;
    record.target = target.canonical();
    record.provenance = provenance;
    return record;
}

}  // namespace

RealizationRecord make_record(const TreeRealization& tree, const LengthMultiset& target,
                              const std::string& provenance) {
    RealizationRecord record = base_record(tree.mod.p, realization_kind::tree, target, provenance);
    record.edges = tree.edges;
    std::sort(record.edges.begin(), record.edges.end());
    RealizationReport report = verify(tree, target);
    record.valid = report.valid;
    record.diameter_vertices = report.diameter_vertices;
    return record;
}

RealizationRecord make_record(const PathRealization& path, realization_kind kind,
                              const LengthMultiset& target, const std::string& provenance) {
    if (kind == realization_kind::tree) fail(errc::usage, "path record cannot have kind tree");
    RealizationRecord record = base_record(path.mod.p, kind, target, provenance);
    record.order = path.order;
    RealizationReport report = verify(path, target, kind);
    record.valid = report.valid;
    record.diameter_vertices = report.diameter_vertices;
    return record;
}

std::string record_to_json(const RealizationRecord& record) {
    ordered_json doc;
    doc["p"] = record.p;
    doc["kind"] = kind_name(record.kind);
    doc["target"] = record.target;
    if (record.kind == realization_kind::tree) {
        ordered_json edges = ordered_json::array();
        for (const Edge& e : record.edges) edges.push_back({e.a, e.b});
        doc["edges"] = std::move(edges);
    } else {
        doc["order"] = record.order;
    }
    doc["valid"] = record.valid;
    doc["diameter_vertices"] = record.diameter_vertices;
    doc["provenance"] = record.provenance;
    return doc.dump(2) + "\n";
}

RealizationRecord parse_record(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(errc::parse, "record is not valid JSON");

    RealizationRecord record;
    try {
        record.p = doc.at("p").get<int>();
        record.kind = kind_from_name(doc.at("kind").get<std::string>());
        record.target = doc.at("target").get<std::string>();
        record.valid = doc.at("valid").get<bool>();
        record.diameter_vertices = doc.at("diameter_vertices").get<int>();
        record.provenance = doc.at("provenance").get<std::string>();
        if (record.kind == realization_kind::tree) {
            for (const auto& pair : doc.at("edges")) {
                if (!pair.is_array() || pair.size() != 2)
                    fail(errc::parse, "edge entries must be [a, b] pairs");
                int a = pair[0].get<int>(), b = pair[1].get<int>();
                if (a == b) fail(errc::parse, "edge entry is a self-loop");
                record.edges.emplace_back(a, b);
            }
        } else {
            record.order = doc.at("order").get<std::vector<int>>();
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("malformed realization record: ") + e.what());
    }
    if (record.p < 3) fail(errc::parse, "record needs p >= 3");
    return record;
}

bool verify_record(const RealizationRecord& record, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (!record.valid) return reject("record declares itself invalid");

    Modulus m = Modulus::of(record.p);
    RealizationReport report(record.kind, LengthMultiset(m), LengthMultiset(m));
    try {
        LengthMultiset target = LengthMultiset::parse(record.target, m, bound_for(record.kind));
        if (record.kind == realization_kind::tree) {
            TreeRealization tree{m, record.edges};
            tree.sort_edges();
            report = verify(tree, target);
        } else {
            PathRealization path{m, record.order};
            report = verify(path, target, record.kind);
        }
    } catch (const error& e) {
        return reject(std::string("re-verification raised: ") + e.what());
    }
    if (!report.valid)
        return reject("realization does not match its target (achieved " +
                      report.achieved.canonical() + ")");
    if (report.diameter_vertices != record.diameter_vertices)
        return reject("stored diameter " + std::to_string(record.diameter_vertices) +
                      " != recomputed " + std::to_string(report.diameter_vertices));
    if (why) why->clear();
    return true;
}

std::string failure_record(const Modulus& m, realization_kind kind, const LengthMultiset& target,
                           const std::string& status, std::uint64_t nodes,
                           const std::string& provenance) {
    ordered_json doc;
    doc["p"] = m.p;
    doc["kind"] = kind_name(kind);
    doc["target"] = target.canonical();
    doc["valid"] = false;
    doc["status"] = status;
    doc["nodes"] = nodes;
    doc["provenance"] = provenance;
    return doc.dump(2) + "\n";
}

std::string record_to_dot(const RealizationRecord& record) {
    const int p = record.p;
    Modulus m = Modulus::of(p);
    const double radius = 2.0;
    const double tau = 8.0 * std::atan(1.0);

    std::vector<Edge> edges;
    if (record.kind == realization_kind::tree) {
        edges = record.edges;
    } else {
        for (size_t i = 0; i + 1 < record.order.size(); ++i)
            edges.emplace_back(record.order[i], record.order[i + 1]);
    }
    std::sort(edges.begin(), edges.end());

    std::string out = "graph realization {\n";
    out += "  layout=\"neato\";\n";
    out += "  node [shape=\"circle\", fixedsize=true, width=0.4];\n";
    char buf[96];
    for (int v = 0; v < p; ++v) {
        double angle = tau * v / p;
        std::snprintf(buf, sizeof(buf), "  %d [pos=\"%.4f,%.4f!\"];\n", v,
                      radius * std::cos(angle), radius * std::sin(angle));
        out += buf;
    }
    for (const Edge& e : edges) {
        std::snprintf(buf, sizeof(buf), "  %d -- %d [label=\"%d\"];\n", e.a, e.b,
                      cyclic_length(m, e.a, e.b));
        out += buf;
    }
    out += "}\n";
    return out;
}

std::string fixture_line(const EnumerationResult& result) {
    ordered_json doc;
    doc["p"] = result.mod.p;
    doc["multiset"] = result.target.canonical();
    doc["kind"] = kind_name(result.kind);
    doc["count"] = result.count;
    doc["complete"] = result.complete;
    ordered_json witnesses = ordered_json::array();
    if (result.kind == realization_kind::tree) {
        for (const TreeRealization& tree : result.tree_witnesses) {
            ordered_json edges = ordered_json::array();
            for (const Edge& e : tree.edges) edges.push_back({e.a, e.b});
            witnesses.push_back(std::move(edges));
        }
    } else {
        for (const PathRealization& path : result.path_witnesses) witnesses.push_back(path.order);
    }
    doc["witnesses"] = std::move(witnesses);
    return doc.dump();
}

}  // namespace buratti
