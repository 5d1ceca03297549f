#include "hexlab/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hexlab {

using nlohmann::json;

Catalog Catalog::load(const std::string& surface_name) {
    std::ifstream in(data_dir() + "/catalog_" + surface_name + ".json");
    if (!in) throw CurveError("missing catalog for " + surface_name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

Catalog Catalog::from_json_text(const std::string& text) {
    json j = json::parse(text);
    auto tri = std::make_shared<Triangulation>(load_surface(j.at("surface")));
    Catalog cat(tri);
    for (const auto& [name, w] : j.at("curves").items())
        cat.curves_[name] = w.get<std::vector<Weight>>();
    for (const auto& [name, c] : j.at("classification").items())
        cat.cls_[name] = c.get<std::string>();
    if (j.contains("arcs"))
        for (const auto& [name, a] : j.at("arcs").items()) {
            ArcData d;
            if (a.contains("parallel_edge"))
                d.parallel_edge = a.at("parallel_edge");
            else
                d.word = a.at("word").get<std::vector<int>>();
            cat.arcs_[name] = d;
        }
    if (j.contains("intersections"))
        for (const auto& row : j.at("intersections"))
            cat.inter_[{row.at(0).get<std::string>(), row.at(1).get<std::string>()}] =
                row.at(2).get<Weight>();
    return cat;
}

std::string Catalog::to_json_text() const {
    json j;
    j["schema"] = "hexlab-catalog-1";
    j["surface"] = tri_->name();
    json curves = json::object();
    for (const auto& [name, w] : curves_) curves[name] = w;
    j["curves"] = curves;
    json cls = json::object();
    for (const auto& [name, c] : cls_) cls[name] = c;
    j["classification"] = cls;
    json arcs = json::object();
    for (const auto& [name, a] : arcs_) {
        json ja;
        if (a.parallel_edge >= 0)
            ja["parallel_edge"] = a.parallel_edge;
        else
            ja["word"] = a.word;
        arcs[name] = ja;
    }
    j["arcs"] = arcs;
    json inter = json::array();
    for (const auto& [key, v] : inter_) inter.push_back({key.first, key.second, v});
    j["intersections"] = inter;
    return j.dump(1);
}

Multicurve Catalog::curve(const std::string& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) throw CurveError("catalog: unknown curve " + name);
    return Multicurve{tri_.get(), it->second};
}

NormalArc Catalog::arc(const std::string& name) const {
    auto it = arcs_.find(name);
    if (it == arcs_.end()) throw CurveError("catalog: unknown arc " + name);
    if (it->second.parallel_edge >= 0)
        return arc_parallel_to_edge(*tri_, it->second.parallel_edge);
    return arc_from_word(*tri_, it->second.word);
}

std::vector<std::string> Catalog::curve_names() const {
    std::vector<std::string> out;
    for (const auto& [name, w] : curves_) out.push_back(name);
    return out;
}

std::vector<std::string> Catalog::arc_names() const {
    std::vector<std::string> out;
    for (const auto& [name, a] : arcs_) out.push_back(name);
    return out;
}

const std::string& Catalog::classification(const std::string& name) const {
    auto it = cls_.find(name);
    if (it == cls_.end()) throw CurveError("catalog: unknown classification " + name);
    return it->second;
}

void Catalog::put_curve(const std::string& name, const std::vector<Weight>& w,
                        const std::string& cls) {
    curves_[name] = w;
    cls_[name] = cls;
}

void Catalog::put_arc(const std::string& name, const NormalArc& a) {
    ArcData d;
    d.word = a.word;
    d.parallel_edge = a.parallel_edge;
    arcs_[name] = d;
}

void Catalog::put_intersection(const std::string& a, const std::string& b, Weight v) {
    inter_[{a, b}] = v;
}

}  // namespace hexlab
