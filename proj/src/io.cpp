#include "kr/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kr {

using nlohmann::json;

namespace {

json element_to_json(const Element& el) {
    json slots = json::array();
    for (const auto& s : el.slots) {
        json rows = json::array();
        for (int r = 1; r <= s.shape.length(); ++r) {
            json row = json::array();
            for (int c = 1; c <= s.shape.part(r); ++c) row.push_back(static_cast<int>(s.at(r, c)));
            rows.push_back(row);
        }
        slots.push_back(rows);
    }
    return slots;
}

Element element_from_json(const json& slots) {
    Element el;
    for (const auto& rows : slots) {
        Slot s;
        std::vector<int> shape;
        for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
        s.shape = Partition(shape);
        for (const auto& row : rows)
            for (const auto& v : row) s.letters.push_back(static_cast<Letter>(v.get<int>()));
        el.slots.push_back(std::move(s));
    }
    return el;
}

}  // namespace

std::string element_json(const Element& el) { return element_to_json(el).dump(); }

void write_graph_json(std::ostream& os, const CrystalGraph& g, const std::vector<int>& sigma) {
    json j;
    j["schema"] = kSchemaVersion;
    j["family"] = family_name(g.type().family);
    j["rank"] = g.type().n;
    json verts = json::array();
    for (int v = 0; v < g.size(); ++v) verts.push_back(element_to_json(g.element(v)));
    j["vertices"] = verts;
    json edges = json::array();
    std::vector<int> colors = g.colors();
    for (int c : colors)
        for (int v = 0; v < g.size(); ++v)
            if (g.f(c, v) >= 0) edges.push_back({v, g.f(c, v), c});
    j["edges"] = edges;
    if (!sigma.empty()) j["sigma"] = sigma;
    os << j.dump(1) << "\n";
}

void write_graph_dot(std::ostream& os, const CrystalGraph& g) {
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box,fontname=\"monospace\"];\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << g.element(v).pretty() << "\"];\n";
    for (int c : g.colors())
        for (int v = 0; v < g.size(); ++v)
            if (g.f(c, v) >= 0)
                os << "  v" << v << " -> v" << g.f(c, v) << " [label=\"" << c << "\"];\n";
    os << "}\n";
}

std::string cache_path(const std::string& dir, const AffineType& type, int r, int s) {
    std::ostringstream os;
    os << dir << "/" << family_name(type.classical().family) << "_" << type.n << "/" << r << "x"
       << s << ".krz";
    return os.str();
}

void save_kr_cache(const std::string& dir, const KRCrystal& k) {
    std::string path = cache_path(dir, k.type, k.r, k.s);
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    json j;
    j["schema"] = kSchemaVersion;
    j["code"] = kCodeVersion;
    j["type"] = k.type.name();
    j["r"] = k.r;
    j["s"] = k.s;
    j["level"] = k.level;
    json verts = json::array();
    for (int v = 0; v < k.graph.size(); ++v) verts.push_back(element_to_json(k.graph.element(v)));
    j["vertices"] = verts;
    json edges = json::array();
    for (int c : k.graph.colors())
        for (int v = 0; v < k.graph.size(); ++v)
            if (k.graph.f(c, v) >= 0) edges.push_back({v, k.graph.f(c, v), c});
    j["edges"] = edges;
    if (!k.sigma_map.empty()) j["sigma"] = k.sigma_map;
    std::ofstream out(path);
    out << j.dump() << "\n";
}

bool check_kr_cache(const std::string& dir, const KRCrystal& expect) {
    std::string path = cache_path(dir, expect.type, expect.r, expect.s);
    std::ifstream in(path);
    if (!in) return false;
    json j;
    in >> j;
    if (j.value("schema", -1) != kSchemaVersion || j.value("code", "") != kCodeVersion)
        return false;
    if (j.value("r", -1) != expect.r || j.value("s", -1) != expect.s) return false;
    const auto& verts = j["vertices"];
    if (static_cast<int>(verts.size()) != expect.graph.size()) return false;
    for (int v = 0; v < expect.graph.size(); ++v) {
        Element el = element_from_json(verts[v]);
        if (!(el == expect.graph.element(v))) return false;
    }
    // Edge multiset must match exactly (deterministic ordering).
    json edges = json::array();
    for (int c : expect.graph.colors())
        for (int v = 0; v < expect.graph.size(); ++v)
            if (expect.graph.f(c, v) >= 0) edges.push_back({v, expect.graph.f(c, v), c});
    if (edges != j["edges"]) return false;
    if (!expect.sigma_map.empty()) {
        if (!j.contains("sigma")) return false;
        if (j["sigma"].get<std::vector<int>>() != expect.sigma_map) return false;
    }
    return true;
}

std::string default_cache_dir() {
    const char* env = std::getenv("KR_CACHE_DIR");
    return env ? env : "";
}

std::string laurent_json(const Laurent& p) {
    json j = json::object();
    for (const auto& [e, c] : p.coefficients()) j[std::to_string(e)] = c;
    return j.dump();
}

}  // namespace kr
