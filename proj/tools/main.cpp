// Command-line front end: validate, enumerate and classify zigzags, glue
// connected sums, audit the z-knottedness prediction against enumeration,
// and replay the identification tables on the built-in corpus.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zigzag/classify.hpp"
#include "zigzag/dual.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/graph_io.hpp"
#include "zigzag/report.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tables.hpp"
#include "zigzag/zigzag.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

zigzag::EmbeddedGraph load(const std::string& path) { return zigzag::parse_graph(slurp(path)); }

int need_face(const zigzag::EmbeddedGraph& g, const std::string& ref) {
    const int f = zigzag::face_by_ref(g, ref);
    if (f < 0) throw std::runtime_error("no face '" + ref + "' (sorted tokens joined by commas)");
    return f;
}

std::vector<std::pair<std::string, std::string>> parse_map(const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& m : raw) {
        const auto colon = m.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == m.size())
            throw std::runtime_error("bad --map entry '" + m + "' (want src:dst)");
        out.emplace_back(m.substr(0, colon), m.substr(colon + 1));
    }
    return out;
}

std::string summary_line(const zigzag::EmbeddedGraph& g) {
    std::ostringstream os;
    os << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << g.face_count()
       << " chi=" << zigzag::euler_characteristic(g)
       << (g.is_triangulation() ? " (triangulation)" : "");
    return os.str();
}

int cmd_validate(const std::string& file, bool json) {
    const auto g = load(file);
    const auto rep = zigzag::validate_embedding(g);
    if (json) {
        std::cout << zigzag::report::validation(g, rep) << "\n";
    } else if (rep.ok) {
        std::cout << "ok: " << summary_line(g) << "\n";
    } else {
        std::cout << "invalid: " << summary_line(g) << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  [" << v.rule << "] " << v.detail << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_zigzags(const std::string& file, bool json) {
    const auto g = load(file);
    zigzag::require_valid(g, "zigzags");
    const auto zs = zigzag::enumerate_zigzags(g);
    if (json) {
        std::cout << zigzag::report::zigzags(g, zs) << "\n";
        return 0;
    }
    std::cout << zigzag::z_vector_string(zs) << "\n";
    for (const auto& z : zs.zigzags())
        std::cout << "zigzag length=" << z.length() << ": " << zigzag::cycle_string(g, z.seq)
                  << "\n";
    return 0;
}

int cmd_classify(const std::string& file, bool json) {
    const auto g = load(file);
    zigzag::require_valid(g, "classify");
    const auto zs = zigzag::enumerate_zigzags(g);
    if (!zigzag::is_z_knotted(zs))
        throw std::runtime_error("graph is not z-knotted (z-vector " +
                                 zigzag::z_vector_string(zs) + "); nothing to classify");
    if (json) {
        std::cout << zigzag::report::classification(g, zs) << "\n";
        return 0;
    }
    std::cout << summary_line(g) << "\n";
    std::cout << "z-vector: " << zigzag::z_vector_string(zs) << " (z-knotted)\n";
    for (int e = 0; e < g.edge_count(); ++e)
        std::cout << "edge {" << g.token(g.edge(e).u) << "," << g.token(g.edge(e).v)
                  << "}: " << zigzag::to_string(zigzag::edge_type(g, zs, e)) << "\n";
    if (g.is_triangulation()) {
        for (int f = 0; f < g.face_count(); ++f) {
            const auto c = zigzag::classify_face(g, zs, f);
            std::cout << "face (" << zigzag::face_ref(g, f)
                      << "): " << zigzag::to_string(c.cls) << "  labels";
            for (int v : c.labels) std::cout << " " << g.token(v);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_sum(const std::string& file1, const std::string& face1, const std::string& file2,
            const std::string& face2, const std::vector<std::string>& map_raw, bool json) {
    const auto l = load(file1);
    const auto r = load(file2);
    const int lf = need_face(l, face1);
    const int rf = need_face(r, face2);
    const auto g = zigzag::make_gluing(l, lf, r, rf, parse_map(map_raw));
    const auto sum = zigzag::connected_sum(l, lf, r, rf, g);
    if (!sum.validation.ok) {
        std::cerr << "glued graph is not a valid embedding:\n";
        for (const auto& v : sum.validation.violations)
            std::cerr << "  [" << v.rule << "] " << v.detail << "\n";
        return 1;
    }
    if (json)
        std::cout << zigzag::report::graph_file(sum.graph) << "\n";
    else
        std::cout << zigzag::serialize_graph(sum.graph);
    return 0;
}

int cmd_audit(const std::string& file1, const std::string& face1, const std::string& file2,
              const std::string& face2, bool json) {
    const auto l = load(file1);
    const auto r = load(file2);
    const int lf = need_face(l, face1);
    const int rf = need_face(r, face2);
    const auto rep = zigzag::theorem1_audit(l, lf, r, rf);
    if (json) {
        std::cout << zigzag::report::audit(l, lf, r, rf, rep) << "\n";
    } else {
        std::cout << "audit " << face1 << " # " << face2 << ": 6 identifications\n";
        for (const auto& row : rep.rows) {
            std::string id;
            for (const auto& [s, t] : row.gluing.images) {
                if (!id.empty()) id += " ";
                id += l.token(s) + ":" + r.token(t);
            }
            std::cout << "  " << id << "  ";
            if (!row.sum_valid) {
                std::cout << "excluded (glued graph invalid)\n";
                continue;
            }
            std::cout << "predicted=" << (row.predicted.z_knotted ? "z-knotted" : "not")
                      << " composed=" << row.composed_count
                      << " actual=" << row.actual_z_vector
                      << (row.agree ? "  agree" : "  DISAGREE") << "\n";
        }
        std::cout << (rep.all_agree ? "all identifications agree\n" : "DISAGREEMENT FOUND\n");
    }
    return rep.all_agree ? 0 : 1;
}

int cmd_tables(bool json) {
    const auto rows = zigzag::reproduce_tables();
    int bad = 0, core = 0;
    if (json) {
        std::cout << zigzag::report::tables(rows) << "\n";
        for (const auto& r : rows)
            if (!r.match) ++bad;
        return bad ? 1 : 0;
    }
    for (const auto& r : rows) {
        if (r.core) ++core;
        if (!r.match) ++bad;
        std::cout << "table " << r.table << (r.core ? "  " : "* ") << "{" << r.identification
                  << "} on " << r.instances << ": " << (r.match ? "ok" : "MISMATCH") << "\n";
        if (!r.match)
            std::cout << "    expected " << r.expected << "\n    actual   " << r.actual << "\n";
    }
    std::cout << rows.size() << " rows (" << core << " from the numbered tables), " << bad
              << " mismatches\n";
    return bad ? 1 : 0;
}

int cmd_gen(const std::string& name, const std::vector<std::string>& args, bool json) {
    const auto g = zigzag::generate(name, args);
    if (json)
        std::cout << zigzag::report::graph_file(g) << "\n";
    else
        std::cout << zigzag::serialize_graph(g);
    return 0;
}

int cmd_dot(const std::string& file, bool plain) {
    const auto g = load(file);
    zigzag::require_valid(g, "dot");
    if (plain) {
        std::cout << zigzag::export_dot(g);
    } else {
        const auto zs = zigzag::enumerate_zigzags(g);
        std::cout << zigzag::export_dot(g, &zs);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzags of embedded graphs: enumeration, classification, connected sums"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit structured JSON reports");

    std::string file1, file2, face1, face2, gen_name;
    std::vector<std::string> map_raw, gen_args;
    bool dot_plain = false;

    auto* validate = app.add_subcommand("validate", "check the embedding conditions");
    validate->add_option("file", file1, "graph file ('-' for stdin)")->required();

    auto* zz = app.add_subcommand("zigzags", "z-vector and canonical zigzags");
    zz->add_option("file", file1)->required();

    auto* classify = app.add_subcommand("classify", "edge types and face classes (z-knotted only)");
    classify->add_option("file", file1)->required();

    auto* sum = app.add_subcommand("sum", "glue two triangulations along faces");
    sum->add_option("file1", file1)->required();
    sum->add_option("face1", face1, "face as sorted tokens, e.g. 1,2,a")->required();
    sum->add_option("file2", file2)->required();
    sum->add_option("face2", face2)->required();
    sum->add_option("--map", map_raw, "three src:dst vertex pairs")->required()->expected(3);

    auto* audit = app.add_subcommand("audit", "compare prediction, composition and enumeration "
                                              "over all six gluings");
    audit->add_option("file1", file1)->required();
    audit->add_option("face1", face1)->required();
    audit->add_option("file2", file2)->required();
    audit->add_option("face2", face2)->required();

    auto* tables = app.add_subcommand("tables", "replay the identification tables on the corpus");

    auto* gen = app.add_subcommand("gen", "emit a built-in graph");
    gen->add_option("name", gen_name, "tetrahedron|cube|bipyramid|twisted-sum|<corpus id>")
        ->required();
    gen->add_option("args", gen_args, "generator arguments");

    auto* dot = app.add_subcommand("dot", "DOT export with zigzag styling");
    dot->add_option("file", file1)->required();
    dot->add_flag("--plain", dot_plain, "skip zigzag styling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file1, json);
        if (zz->parsed()) return cmd_zigzags(file1, json);
        if (classify->parsed()) return cmd_classify(file1, json);
        if (sum->parsed()) return cmd_sum(file1, face1, file2, face2, map_raw, json);
        if (audit->parsed()) return cmd_audit(file1, face1, file2, face2, json);
        if (tables->parsed()) return cmd_tables(json);
        if (gen->parsed()) return cmd_gen(gen_name, gen_args, json);
        if (dot->parsed()) return cmd_dot(file1, dot_plain);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
