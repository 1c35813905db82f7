#include "weightlab/io.hpp"

#include <fstream>
#include <sstream>

#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VertexId id_from_json(const Json& j, const char* what) {
    if (j.is_string()) return VertexId(j.get<std::string>());
    if (j.is_number_integer()) return VertexId(std::to_string(j.get<long long>()));
    throw InputError(std::string(what) + " must be a string or an integer");
}

DegreeTag tag_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "finite") return DegreeTag::finite();
    if (j.is_object() && j.size() == 1 && j.contains("infinite") && j["infinite"].is_number_integer()) {
        long long r = j["infinite"].get<long long>();
        if (r < 0) throw InputError("infinite rank must be non-negative");
        return DegreeTag::infinite(static_cast<unsigned>(r));
    }
    throw InputError("tag must be \"finite\" or {\"infinite\": <rank>}");
}

WeightList list_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("list must be an array of integers");
    WeightList out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("list must be an array of integers");
        out.push_back(x.get<Weight>());
    }
    return out;
}

OrderedJson tag_to_json(const DegreeTag& t) {
    if (t.is_finite()) return "finite";
    OrderedJson j;
    j["infinite"] = t.rank();
    return j;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return j[key];
}

}  // namespace

bool GraphDocument::has_all_lists() const {
    for (const auto& v : graph.vertices()) {
        if (!lists.has_vertex_list(v)) return false;
    }
    for (const auto& e : graph.edges()) {
        if (!lists.has_edge_list(e)) return false;
    }
    return true;
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

GraphDocument graph_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("graph file must be a JSON object");
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    std::vector<std::pair<VertexId, WeightList>> vertex_lists;
    std::vector<std::pair<EdgeKey, WeightList>> edge_lists;
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array()) throw InputError("\"vertices\" must be an array");
        for (const auto& v : j["vertices"]) {
            VertexId id = id_from_json(require(v, "id"), "vertex id");
            DegreeTag tag = v.contains("tag") ? tag_from_json(v["tag"]) : DegreeTag::finite();
            vertices.emplace_back(id, tag);
            if (v.contains("list")) vertex_lists.emplace_back(id, list_from_json(v["list"]));
        }
    }
    std::vector<EdgeKey> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            EdgeKey key(id_from_json(require(e, "u"), "edge endpoint"),
                        id_from_json(require(e, "v"), "edge endpoint"));
            edges.push_back(key);
            if (e.contains("list")) edge_lists.emplace_back(key, list_from_json(e["list"]));
        }
    }
    GraphDocument doc;
    doc.graph = FiniteGraph(std::move(vertices), std::move(edges));
    for (auto& [id, l] : vertex_lists) doc.lists.set_vertex_list(id, std::move(l));
    for (auto& [key, l] : edge_lists) doc.lists.set_edge_list(key, std::move(l));
    return doc;
}

GraphDocument graph_from_edge_list(std::string_view text) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u;
        std::string v;
        std::string extra;
        if (!(fields >> u)) continue;
        if (!(fields >> v) || (fields >> extra)) {
            throw InputError("line " + std::to_string(lineno) + ": expected \"u v\"");
        }
        pairs.emplace_back(VertexId(u), VertexId(v));
    }
    GraphDocument doc;
    doc.graph = from_edge_list(pairs);
    return doc;
}

GraphDocument read_graph_file(const std::string& path) {
    std::string text = read_text(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json_text(text));
    return graph_from_edge_list(text);
}

OrderedJson graph_to_json(const FiniteGraph& g, const ListAssignment* lists) {
    OrderedJson vertices = OrderedJson::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        OrderedJson v;
        v["id"] = g.vertex(i).value;
        v["tag"] = tag_to_json(g.tag(i));
        if (lists && lists->has_vertex_list(g.vertex(i))) v["list"] = lists->vertex_list(g.vertex(i));
        vertices.push_back(std::move(v));
    }
    OrderedJson edges = OrderedJson::array();
    for (const auto& e : g.edges()) {
        OrderedJson x;
        x["u"] = e.u.value;
        x["v"] = e.v.value;
        if (lists && lists->has_edge_list(e)) x["list"] = lists->edge_list(e);
        edges.push_back(std::move(x));
    }
    OrderedJson out;
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

Weighting weighting_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("weighting file must be a JSON object");
    Weighting w;
    if (j.contains("vertex_weights")) {
        const auto& vw = j["vertex_weights"];
        if (!vw.is_object()) throw InputError("\"vertex_weights\" must be an object");
        for (const auto& [id, value] : vw.items()) {
            if (!value.is_number_integer()) throw InputError("vertex weight of '" + id + "' must be an integer");
            w.set_vertex(VertexId(id), value.get<Weight>());
        }
    }
    if (j.contains("edge_weights")) {
        const auto& ew = j["edge_weights"];
        if (!ew.is_array()) throw InputError("\"edge_weights\" must be an array");
        for (const auto& e : ew) {
            EdgeKey key(id_from_json(require(e, "u"), "edge endpoint"),
                        id_from_json(require(e, "v"), "edge endpoint"));
            const auto& value = require(e, "w");
            if (!value.is_number_integer()) throw InputError("weight of edge " + key.str() + " must be an integer");
            w.set_edge(key, value.get<Weight>());
        }
    }
    return w;
}

Weighting read_weighting_file(const std::string& path) {
    return weighting_from_json(parse_json_text(read_text(path)));
}

OrderedJson weighting_to_json(const Weighting& w) {
    OrderedJson vertex = OrderedJson::object();
    for (const auto& [id, value] : w.vertex_weights()) vertex[id.value] = value;
    OrderedJson edges = OrderedJson::array();
    for (const auto& [e, value] : w.edge_weights()) {
        OrderedJson x;
        x["u"] = e.u.value;
        x["v"] = e.v.value;
        x["w"] = value;
        edges.push_back(std::move(x));
    }
    OrderedJson out;
    out["vertex_weights"] = std::move(vertex);
    out["edge_weights"] = std::move(edges);
    return out;
}

OrderedJson validity_to_json(const ValidityReport& r) {
    OrderedJson violations = OrderedJson::array();
    for (const auto& v : r.violations) {
        OrderedJson x;
        x["u"] = v.edge.u.value;
        x["v"] = v.edge.v.value;
        x["sum"] = v.sum;
        violations.push_back(std::move(x));
    }
    OrderedJson out;
    out["valid"] = r.valid;
    out["violations"] = std::move(violations);
    return out;
}

OrderedJson ball_to_json(const Ball& b) {
    OrderedJson out;
    out["center"] = b.center.value;
    out["radius"] = b.radius;
    OrderedJson distance = OrderedJson::object();
    for (const auto& id : b.members) distance[id.value] = b.distance.at(id);
    out["distance"] = std::move(distance);
    out["graph"] = graph_to_json(b.graph);
    return out;
}

OrderedJson persistence_to_json(const PersistenceReport& r) {
    OrderedJson levels = OrderedJson::array();
    for (const auto& l : r.levels) {
        OrderedJson x;
        x["n"] = l.n;
        x["size"] = l.size;
        x["undecided"] = l.undecided;
        levels.push_back(std::move(x));
    }
    OrderedJson out;
    out["family"] = r.family;
    out["center"] = r.center.value;
    out["j"] = r.j;
    out["nmax"] = r.nmax;
    out["candidates"] = r.candidates;
    out["levels"] = std::move(levels);
    out["carry_rates"] = r.carry_rates;
    out["persistent_witnesses"] = r.persistent_count;
    out["persistent_nonempty"] = r.persistent_nonempty();
    out["exact"] = r.exact;
    out["finding"] = r.finding();
    if (!r.persistent_sample.empty()) {
        out["example_witness"] = weighting_to_json(unpack(r.persistent_sample.front(), r.inner));
    }
    return out;
}

OrderedJson split_report_to_json(const SplitReport& r) {
    OrderedJson out;
    OrderedJson stripped = OrderedJson::array();
    for (const auto& e : r.stripped_edges) {
        OrderedJson x;
        x["u"] = e.u.value;
        x["v"] = e.v.value;
        stripped.push_back(std::move(x));
    }
    out["stripped_edges"] = std::move(stripped);
    out["split_graph"] = graph_to_json(r.split.graph, &r.split.lists);
    OrderedJson copies = OrderedJson::array();
    for (const auto& c : r.split.map.copies) {
        OrderedJson x;
        x["origin"] = c.origin.value;
        x["neighbor"] = c.neighbor.value;
        x["copy"] = c.copy.value;
        copies.push_back(std::move(x));
    }
    out["split_map"] = std::move(copies);
    OrderedJson comps = OrderedJson::array();
    for (const auto& c : r.outcomes) {
        OrderedJson x;
        OrderedJson ids = OrderedJson::array();
        for (const auto& v : c.component.vertices()) ids.push_back(v.value);
        x["vertices"] = std::move(ids);
        x["status"] = c.exempt ? std::string("exempt") : to_string(c.outcome.status);
        if (!c.exempt && !c.outcome.diagnostic.empty()) x["diagnostic"] = c.outcome.diagnostic;
        comps.push_back(std::move(x));
    }
    out["components"] = std::move(comps);
    out["status"] = to_string(r.status);
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    if (r.lifted) {
        out["weighting"] = weighting_to_json(r.lifted->weighting);
        out["validity"] = validity_to_json(r.lifted->report);
    }
    return out;
}

}  // namespace weightlab
