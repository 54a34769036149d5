#include "zigzag/report.hpp"

#include <json.hpp>

#include "zigzag/graph_io.hpp"

namespace zigzag::report {

using json = nlohmann::ordered_json;

namespace {

json graph_summary(const EmbeddedGraph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = g.face_count();
    j["euler_characteristic"] = euler_characteristic(g);
    j["triangulation"] = g.is_triangulation();
    return j;
}

json zigzag_list(const EmbeddedGraph& g, const ZigzagSet& zs) {
    json arr = json::array();
    for (const auto& z : zs.zigzags()) {
        json item;
        item["length"] = z.length();
        item["sequence"] = cycle_string(g, z.seq);
        arr.push_back(std::move(item));
    }
    return arr;
}

json doc(const char* kind) {
    json j;
    j["schema"] = "zigzag-report/1";
    j["kind"] = kind;
    return j;
}

}  // namespace

std::string validation(const EmbeddedGraph& g, const ValidationReport& rep) {
    json j = doc("validation");
    j["graph"] = graph_summary(g);
    j["ok"] = rep.ok;
    json v = json::array();
    for (const auto& viol : rep.violations) {
        json item;
        item["rule"] = viol.rule;
        item["detail"] = viol.detail;
        v.push_back(std::move(item));
    }
    j["violations"] = std::move(v);
    return j.dump(2);
}

std::string graph_file(const EmbeddedGraph& g) {
    json j = doc("graph");
    j["graph"] = graph_summary(g);
    json faces = json::array();
    for (const auto& f : g.faces()) {
        json cyc = json::array();
        for (int v : f) cyc.push_back(g.token(v));
        faces.push_back(std::move(cyc));
    }
    j["faces"] = std::move(faces);
    return j.dump(2);
}

std::string zigzags(const EmbeddedGraph& g, const ZigzagSet& zs) {
    json j = doc("zigzags");
    j["graph"] = graph_summary(g);
    j["z_vector"] = z_vector_string(zs);
    j["z_knotted"] = is_z_knotted(zs);
    j["zigzags"] = zigzag_list(g, zs);
    return j.dump(2);
}

std::string classification(const EmbeddedGraph& g, const ZigzagSet& zs) {
    json j = doc("classification");
    j["graph"] = graph_summary(g);
    j["z_vector"] = z_vector_string(zs);
    j["z_knotted"] = is_z_knotted(zs);

    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        json item;
        item["edge"] = json::array({g.token(g.edge(e).u), g.token(g.edge(e).v)});
        item["type"] = to_string(edge_type(g, zs, e));
        edges.push_back(std::move(item));
    }
    j["edge_types"] = std::move(edges);

    json faces = json::array();
    for (int f = 0; f < g.face_count(); ++f) {
        const auto c = classify_face(g, zs, f);
        json item;
        item["face"] = face_ref(g, f);
        item["class"] = to_string(c.cls);
        json labels = json::array();
        for (int v : c.labels) labels.push_back(g.token(v));
        item["labels"] = std::move(labels);
        faces.push_back(std::move(item));
    }
    j["face_classes"] = std::move(faces);
    return j.dump(2);
}

std::string audit(const EmbeddedGraph& left, int left_face, const EmbeddedGraph& right,
                  int right_face, const AuditReport& rep) {
    json j = doc("audit");
    j["left"] = graph_summary(left);
    j["left_face"] = face_ref(left, left_face);
    j["right"] = graph_summary(right);
    j["right_face"] = face_ref(right, right_face);

    json rows = json::array();
    for (const auto& row : rep.rows) {
        json item;
        std::string id;
        for (const auto& [s, t] : row.gluing.images) {
            if (!id.empty()) id += " ";
            id += left.token(s) + ":" + right.token(t);
        }
        item["identification"] = id;
        item["sum_valid"] = row.sum_valid;
        item["predicted_z_knotted"] = row.predicted.z_knotted;
        item["predicted_zigzags"] = row.predicted.zigzag_count;
        item["reason"] = row.predicted.reason;
        if (row.sum_valid) {
            item["composed_zigzags"] = row.composed_count;
            item["actual_z_knotted"] = row.actual_z_knotted;
            item["actual_z_vector"] = row.actual_z_vector;
            item["oracle_match"] = row.oracle_match;
            item["agree"] = row.agree;
        }
        rows.push_back(std::move(item));
    }
    j["rows"] = std::move(rows);
    j["all_agree"] = rep.all_agree;
    return j.dump(2);
}

std::string tables(const std::vector<TableRowResult>& rows) {
    json j = doc("tables");
    json arr = json::array();
    int mismatches = 0;
    for (const auto& r : rows) {
        json item;
        item["table"] = r.table;
        item["core"] = r.core;
        item["instances"] = r.instances;
        item["identification"] = r.identification;
        item["expected"] = r.expected;
        item["actual"] = r.actual;
        item["match"] = r.match;
        if (!r.match) ++mismatches;
        arr.push_back(std::move(item));
    }
    j["rows"] = std::move(arr);
    j["mismatches"] = mismatches;
    return j.dump(2);
}

}  // namespace zigzag::report
