#pragma once

#include <map>
#include <memory>

#include "hexlab/arc.hpp"
#include "hexlab/curve.hpp"

namespace hexlab {

// named curves and arcs frozen as regression data; every figure-referenced
// object of the verification suites resolves here
class Catalog {
public:
    static Catalog load(const std::string& surface_name);
    static Catalog from_json_text(const std::string& text);
    std::string to_json_text() const;

    const Triangulation& tri() const { return *tri_; }

    bool has_curve(const std::string& name) const { return curves_.count(name) > 0; }
    Multicurve curve(const std::string& name) const;
    NormalArc arc(const std::string& name) const;
    std::vector<std::string> curve_names() const;
    std::vector<std::string> arc_names() const;

    const std::string& classification(const std::string& name) const;
    // frozen pairwise geometric intersection numbers
    const std::map<std::pair<std::string, std::string>, Weight>& intersections() const {
        return inter_;
    }

    void put_curve(const std::string& name, const std::vector<Weight>& w,
                   const std::string& cls);
    void put_arc(const std::string& name, const NormalArc& a);
    void put_intersection(const std::string& a, const std::string& b, Weight v);

    Catalog() = default;
    explicit Catalog(std::shared_ptr<const Triangulation> tri) : tri_(std::move(tri)) {}

private:
    std::shared_ptr<const Triangulation> tri_;
    std::map<std::string, std::vector<Weight>> curves_;
    std::map<std::string, std::string> cls_;
    struct ArcData {
        std::vector<int> word;
        int parallel_edge = -1;
    };
    std::map<std::string, ArcData> arcs_;
    std::map<std::pair<std::string, std::string>, Weight> inter_;
};

}  // namespace hexlab
