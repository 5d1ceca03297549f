#include "hexlab/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hexlab/intersection.hpp"
#include "json.hpp"

namespace hexlab {

using nlohmann::json;

namespace {

int default_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// deterministic parallel fill: f(i) for i in [0, n)
void parallel_for(int n, int workers, const std::function<void(int)>& f) {
    workers = std::min(default_workers(workers), std::max(1, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace

std::string ComplexKind::name() const {
    switch (value) {
        case Torelli: return "torelli";
        case Curves: return "curves";
        case SepCurves: return "sep-curves";
        case ArcsAll: return "arcs-all";
        case ArcsDual: return "arcs-dual";
        case GraphE: return "graph-E";
        case GraphF: return "graph-F";
    }
    return "?";
}

TorelliVertex make_h_vertex(const Multicurve& a) {
    return TorelliVertex{TorelliVertex::Tag::H, a, std::nullopt, a};
}

TorelliVertex make_bp_vertex(const Multicurve& a, const Multicurve& b) {
    const Multicurve& lo = a.w < b.w ? a : b;
    const Multicurve& hi = a.w < b.w ? b : a;
    return TorelliVertex{TorelliVertex::Tag::BP, lo, hi, multicurve_union({lo, hi})};
}

std::vector<std::vector<Weight>> enumerate_weight_vectors(const Triangulation& T, Weight W) {
    const int E = T.num_edges();
    std::vector<std::array<int, 3>> tris(T.num_triangles());
    for (int t = 0; t < T.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k) tris[t][k] = T.edge_of_side(Triangulation::side_id(t, k));

    // edge order that completes triangles early
    std::vector<int> order;
    {
        std::vector<char> used(E, 0);
        while (static_cast<int>(order.size()) < E) {
            int best = -1, best_score = -1;
            for (int e = 0; e < E; ++e) {
                if (used[e]) continue;
                int score = 0;
                for (const auto& tr : tris) {
                    int have = 0;
                    bool involves = false;
                    for (int x : tr) {
                        if (x == e) involves = true;
                        if (used[x] || x == e) ++have;
                    }
                    if (involves && have == 3) score += 2;
                    if (involves && have == 2) score += 1;
                }
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
            used[best] = 1;
            order.push_back(best);
        }
    }
    std::vector<int> rank(E);
    for (int i = 0; i < E; ++i) rank[order[i]] = i;

    std::vector<std::vector<Weight>> out;
    std::vector<Weight> w(E, 0);

    std::function<void(int, Weight)> dfs = [&](int oi, Weight budget) {
        if (oi == E) {
            if (weights_admissible(T, w, nullptr)) out.push_back(w);
            return;
        }
        int e = order[oi];
        for (Weight x = 0; x <= budget; ++x) {
            w[e] = x;
            bool ok = true;
            for (const auto& tr : tris) {
                bool involves = tr[0] == e || tr[1] == e || tr[2] == e;
                if (!involves) continue;
                int assigned = 0;
                Weight vals[3];
                bool done[3];
                for (int k = 0; k < 3; ++k) {
                    done[k] = rank[tr[k]] <= oi;
                    vals[k] = done[k] ? w[tr[k]] : -1;
                    if (done[k]) ++assigned;
                }
                if (assigned == 3) {
                    Weight a = vals[0], b = vals[1], c = vals[2];
                    if ((a + b + c) % 2 != 0 || a > b + c || b > c + a || c > a + b) ok = false;
                } else if (assigned == 2) {
                    Weight a = -1, b = -1;
                    for (int k = 0; k < 3; ++k)
                        if (done[k]) (a < 0 ? a : b) = vals[k];
                    if (std::llabs(a - b) > budget - x) ok = false;
                }
                if (!ok) break;
            }
            if (ok) dfs(oi + 1, budget - x);
        }
        w[e] = 0;
    };
    dfs(0, W);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Weight sa = std::accumulate(a.begin(), a.end(), Weight{0});
        Weight sb = std::accumulate(b.begin(), b.end(), Weight{0});
        return std::tie(sa, a) < std::tie(sb, b);
    });
    return out;
}

std::vector<EnumCurve> enumerate_single_curves(const Triangulation& T, Weight W) {
    auto vectors = enumerate_weight_vectors(T, W);
    HomologyBasis B = homology_basis(T);
    std::vector<EnumCurve> out;
    for (auto& w : vectors) {
        Multicurve m{&T, w};
        Trace tr = trace_multicurve(m);
        if (tr.comps.size() != 1) continue;
        EnumCurve ec;
        ec.curve = m;
        auto rep = cut_invariants(m);
        ec.separating = rep.pieces.size() == 2;
        bool peripheral = false;
        for (const auto& p : rep.pieces)
            if (p.genus == 0 && p.num_boundary() == 1 && p.punctures.size() <= 1)
                peripheral = true;
        ec.essential = !peripheral;
        if (!ec.essential) continue;
        if (!ec.separating) {
            ec.kind = SeparatingKind::NotSeparating;
        } else {
            ec.kind = SeparatingKind::Other;
            for (const auto& p : rep.pieces) {
                if (p.genus == 1 && p.num_boundary() == 1 && p.punctures.empty())
                    ec.kind = SeparatingKind::HCurve;
                else if (p.genus == 0 && p.num_boundary() == 1 && p.punctures.size() == 2)
                    ec.kind = SeparatingKind::PCurve;
            }
        }
        ec.hom = homology_class(T, B, tr.comps[0].word);
        ec.hom_abs = std::min(ec.hom, negated(ec.hom));
        out.push_back(std::move(ec));
    }
    return out;
}

std::vector<TorelliVertex> enumerate_vertices(const Triangulation& T, Weight W, int workers) {
    auto curves = enumerate_single_curves(T, W);
    std::vector<TorelliVertex> verts;
    std::vector<int> nonsep;
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) {
        if (curves[i].separating)
            verts.push_back(make_h_vertex(curves[i].curve));
        else
            nonsep.push_back(i);
    }
    // the |homology| prefilter is only valid with a single puncture: BP
    // partners on multi-puncture surfaces differ by puncture classes
    std::vector<std::pair<int, int>> candidates;
    if (T.num_punctures() == 1) {
        std::map<std::vector<long long>, std::vector<int>> groups;
        for (int i : nonsep) groups[curves[i].hom_abs].push_back(i);
        for (const auto& [h, idx] : groups)
            for (size_t x = 0; x < idx.size(); ++x)
                for (size_t y = x + 1; y < idx.size(); ++y)
                    candidates.push_back({idx[x], idx[y]});
    } else {
        for (size_t x = 0; x < nonsep.size(); ++x)
            for (size_t y = x + 1; y < nonsep.size(); ++y)
                candidates.push_back({nonsep[x], nonsep[y]});
    }
    std::vector<char> is_bp(candidates.size(), 0);
    std::map<int, Trace> traces;
    for (int i : nonsep) traces[i] = trace_multicurve(curves[i].curve);
    parallel_for(static_cast<int>(candidates.size()), workers, [&](int ci) {
        auto [x, y] = candidates[ci];
        if (geometric_intersection(T, traces.at(x), traces.at(y), curves[x].curve.w,
                                   curves[y].curve.w) != 0)
            return;
        auto uni = multicurve_union({curves[x].curve, curves[y].curve});
        if (cut_invariants(uni).pieces.size() == 2) is_bp[ci] = 1;
    });
    for (size_t ci = 0; ci < candidates.size(); ++ci)
        if (is_bp[ci])
            verts.push_back(make_bp_vertex(curves[candidates[ci].first].curve,
                                           curves[candidates[ci].second].curve));
    std::sort(verts.begin(), verts.end());
    return verts;
}

TorelliVertex map_vertex(const std::vector<TwistStep>& word, const TorelliVertex& v) {
    if (v.tag == TorelliVertex::Tag::H) return make_h_vertex(apply_twist_word(word, v.first));
    return make_bp_vertex(apply_twist_word(word, v.first), apply_twist_word(word, *v.second));
}

std::vector<TorelliVertex> orbit_ball(const Triangulation& T,
                                      const std::vector<TorelliVertex>& seeds,
                                      const std::vector<Multicurve>& generators, int radius,
                                      int workers) {
    (void)T;
    std::set<std::pair<int, std::vector<Weight>>> seen;
    std::vector<TorelliVertex> all, frontier;
    auto push = [&](const TorelliVertex& v, std::vector<TorelliVertex>* dst) {
        auto key = std::pair{static_cast<int>(v.tag), v.merged.w};
        if (seen.insert(key).second) {
            all.push_back(v);
            dst->push_back(v);
        }
    };
    for (const auto& s : seeds) push(s, &frontier);
    for (int r = 0; r < radius; ++r) {
        std::vector<TorelliVertex> next;
        std::vector<std::vector<TorelliVertex>> results(frontier.size());
        parallel_for(static_cast<int>(frontier.size()), workers, [&](int i) {
            for (const auto& g : generators)
                for (long long p : {+1LL, -1LL})
                    results[i].push_back(map_vertex({{g, p}}, frontier[i]));
        });
        for (auto& rs : results)
            for (auto& v : rs) push(v, &next);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool vertices_adjacent(const TorelliVertex& u, const TorelliVertex& v) {
    if (u == v) return false;
    return geometric_intersection(u.merged, v.merged) == 0;
}

std::vector<int> link_of(const ComplexView& view, int v) {
    std::vector<int> out;
    for (int u = 0; u < view.size(); ++u)
        if (view.adj[v][u]) out.push_back(u);
    return out;
}

namespace {

ComplexView build_view(ComplexKind kind, const Triangulation& T, std::vector<TorelliVertex> verts,
                       std::string provenance, int workers) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    ComplexView view;
    view.kind = kind;
    view.tri = &T;
    view.vertices = std::move(verts);
    view.provenance = std::move(provenance);
    int n = view.size();
    view.adj.assign(n, std::vector<char>(n, 0));
    std::vector<Trace> traces(n);
    for (int i = 0; i < n; ++i) traces[i] = trace_multicurve(view.vertices[i].merged);
    parallel_for(n, workers, [&](int i) {
        for (int j = i + 1; j < n; ++j) {
            bool adj = geometric_intersection(T, traces[i], traces[j], view.vertices[i].merged.w,
                                              view.vertices[j].merged.w) == 0;
            view.adj[i][j] = adj ? 1 : 0;
        }
    });
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) view.adj[i][j] = view.adj[j][i];
    return view;
}

}  // namespace

ComplexView build_torelli_view(const Triangulation& T, std::vector<TorelliVertex> verts,
                               std::string provenance, int workers) {
    return build_view(ComplexKind{ComplexKind::Torelli}, T, std::move(verts),
                      std::move(provenance), workers);
}

ComplexView build_sep_curve_view(const Triangulation& T, std::vector<TorelliVertex> verts,
                                 std::string provenance, int workers) {
    std::vector<TorelliVertex> hs;
    for (auto& v : verts)
        if (v.tag == TorelliVertex::Tag::H) hs.push_back(v);
    return build_view(ComplexKind{ComplexKind::SepCurves}, T, std::move(hs),
                      std::move(provenance), workers);
}

FiberReport fiber_forest_check(const ComplexView& view) {
    int n = view.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!view.adj[i][j]) continue;
            if (capped_isotopic(view.vertices[i].merged, view.vertices[j].merged))
                parent[find(i)] = find(j);
        }
    FiberReport rep;
    rep.fiber_of.assign(n, -1);
    std::map<int, int> root_to_fiber;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto it = root_to_fiber.find(r);
        if (it == root_to_fiber.end()) {
            it = root_to_fiber.emplace(r, static_cast<int>(rep.fibers.size())).first;
            rep.fibers.push_back({});
        }
        rep.fiber_of[i] = it->second;
        rep.fibers[it->second].push_back(i);
    }
    for (const auto& f : rep.fibers) {
        if (f.size() >= 2) ++rep.nontrivial_fibers;
        long long edges = 0;
        for (size_t x = 0; x < f.size(); ++x)
            for (size_t y = x + 1; y < f.size(); ++y)
                if (view.adj[f[x]][f[y]]) ++edges;
        if (edges > static_cast<long long>(f.size()) - 1) {
            rep.all_acyclic = false;
            std::vector<int> stack;
            std::vector<int> state(f.size(), 0);
            std::function<bool(int, int)> dfs = [&](int x, int par) {
                state[x] = 1;
                stack.push_back(x);
                for (size_t y = 0; y < f.size(); ++y) {
                    if (static_cast<int>(y) == par || !view.adj[f[x]][f[y]]) continue;
                    if (state[y] == 1) {
                        std::vector<int> cyc;
                        auto it = std::find(stack.begin(), stack.end(), static_cast<int>(y));
                        for (; it != stack.end(); ++it) cyc.push_back(f[*it]);
                        rep.cycle_found.push_back(cyc);
                        return true;
                    }
                    if (state[y] == 0 && dfs(static_cast<int>(y), static_cast<int>(x)))
                        return true;
                }
                stack.pop_back();
                state[x] = 2;
                return false;
            };
            dfs(0, -1);
        }
    }
    return rep;
}

std::string export_dot(const ComplexView& view) {
    std::ostringstream os;
    os << "graph " << view.kind.name() << " {\n";
    os << "  // provenance: " << view.provenance << "\n";
    for (int i = 0; i < view.size(); ++i) {
        const auto& v = view.vertices[i];
        os << "  v" << i << " [label=\"" << (v.tag == TorelliVertex::Tag::H ? "H " : "BP ")
           << weights_to_string(v.merged.w) << "\"];\n";
    }
    for (int i = 0; i < view.size(); ++i)
        for (int j = i + 1; j < view.size(); ++j)
            if (view.adj[i][j]) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const ComplexView& view) {
    json j;
    j["schema"] = "hexlab-view-1";
    j["kind"] = view.kind.name();
    j["triangulation"] = view.tri ? view.tri->name() : "";
    j["provenance"] = view.provenance;
    json verts = json::array();
    for (const auto& v : view.vertices) {
        json jv;
        jv["tag"] = v.tag == TorelliVertex::Tag::H ? "H" : "BP";
        jv["first"] = v.first.w;
        if (v.second) jv["second"] = v.second->w;
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (int a = 0; a < view.size(); ++a)
        for (int b = a + 1; b < view.size(); ++b)
            if (view.adj[a][b]) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump(1);
}

ComplexView import_json(const Triangulation& T, const std::string& text) {
    json j = json::parse(text);
    ComplexView view;
    std::string kind = j.at("kind");
    for (auto v : {ComplexKind::Torelli, ComplexKind::Curves, ComplexKind::SepCurves,
                   ComplexKind::ArcsAll, ComplexKind::ArcsDual, ComplexKind::GraphE,
                   ComplexKind::GraphF})
        if (ComplexKind{v}.name() == kind) view.kind = ComplexKind{v};
    view.tri = &T;
    view.provenance = j.value("provenance", "");
    for (const auto& jv : j.at("vertices")) {
        Multicurve first{&T, jv.at("first").get<std::vector<Weight>>()};
        if (jv.contains("second")) {
            Multicurve second{&T, jv.at("second").get<std::vector<Weight>>()};
            view.vertices.push_back(make_bp_vertex(first, second));
        } else {
            view.vertices.push_back(make_h_vertex(first));
        }
    }
    int n = view.size();
    view.adj.assign(n, std::vector<char>(n, 0));
    for (const auto& e : j.at("edges")) {
        int a = e.at(0), b = e.at(1);
        view.adj[a][b] = view.adj[b][a] = 1;
    }
    return view;
}

}  // namespace hexlab
