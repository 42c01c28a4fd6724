#pragma once

#include "fibtype/stargraph.hpp"
#include "fibtype/words.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fibtype {

enum class DiagramErrorCode {
    Malformed,
    EdgeIncidence,
    EulerCharacteristic,
    FaceLabel,
    NonSimpleBoundary,
};

inline const char* code_name(DiagramErrorCode c) {
    switch (c) {
        case DiagramErrorCode::Malformed: return "malformed";
        case DiagramErrorCode::EdgeIncidence: return "edge-incidence";
        case DiagramErrorCode::EulerCharacteristic: return "euler-characteristic";
        case DiagramErrorCode::FaceLabel: return "face-label";
        case DiagramErrorCode::NonSimpleBoundary: return "non-simple-boundary";
    }
    return "?";
}

class DiagramError : public std::runtime_error {
  public:
    DiagramError(DiagramErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code) {}
    DiagramErrorCode code() const { return code_; }

  private:
    DiagramErrorCode code_;
};

/// Signed reference to an edge occurrence inside a face or boundary cycle.
struct EdgeRef {
    int edge;  // index into VanKampenDiagram::edges
    bool fwd;
};

/// A van Kampen diagram over P_n(m,k) as a combinatorial disk map. Faces and
/// the boundary are cyclic lists of signed edge references; every edge occurs
/// exactly twice with opposite orientations across faces + boundary (the
/// boundary cycle plays the role of the outer face).
struct VanKampenDiagram {
    int n = 0, m = 0, k = 0;
    std::vector<int> vertices;  // ids
    struct Edge {
        int id, from, to, gen;
    };
    std::vector<Edge> edges;
    struct Face {
        int id;
        std::vector<EdgeRef> cycle;
    };
    std::vector<Face> faces;
    std::vector<EdgeRef> boundary;
    int base = 0;  // vertex id

    int ref_from(EdgeRef r) const { return r.fwd ? edges[r.edge].from : edges[r.edge].to; }
    int ref_to(EdgeRef r) const { return r.fwd ? edges[r.edge].to : edges[r.edge].from; }
    Letter ref_letter(EdgeRef r) const { return {edges[r.edge].gen, r.fwd ? +1 : -1}; }
};

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

namespace detail {

// Signed edge ids in files: a JSON integer (sign = traversal direction) or a
// string like "-7". Edge id 0 reversed cannot be written as a JSON integer,
// so it must be spelled "-0".
inline std::pair<long long, bool> parse_signed_ref(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        return {std::llabs(v), v >= 0};
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        bool fwd = true;
        size_t pos = 0;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            fwd = s[0] == '+';
            pos = 1;
        }
        try {
            size_t used = 0;
            long long v = std::stoll(s.substr(pos), &used);
            if (used + pos != s.size() || v < 0) throw std::invalid_argument("");
            return {v, fwd};
        } catch (...) {
            throw DiagramError(DiagramErrorCode::Malformed, "bad edge reference '" + s + "'");
        }
    }
    throw DiagramError(DiagramErrorCode::Malformed, "edge reference must be integer or string");
}

}  // namespace detail

inline VanKampenDiagram diagram_from_json(const nlohmann::json& j) {
    VanKampenDiagram d;
    try {
        d.n = j.at("n").get<int>();
        d.m = j.at("m").get<int>();
        d.k = j.at("k").get<int>();
        d.vertices = j.at("vertices").get<std::vector<int>>();
        d.base = j.at("base").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(DiagramErrorCode::Malformed, e.what());
    }
    if (d.n < 2 || d.m < 0 || d.m >= d.n || d.k < 0 || d.k >= d.n)
        throw DiagramError(DiagramErrorCode::Malformed, "parameters out of range");

    std::map<long long, int> edge_index;
    try {
        for (const auto& je : j.at("edges")) {
            VanKampenDiagram::Edge e;
            e.id = je.at("id").get<int>();
            e.from = je.at("from").get<int>();
            e.to = je.at("to").get<int>();
            e.gen = je.at("gen").get<int>();
            if (e.id < 0) throw DiagramError(DiagramErrorCode::Malformed, "negative edge id");
            if (e.gen < 0 || e.gen >= d.n)
                throw DiagramError(DiagramErrorCode::Malformed, "edge generator out of range");
            if (!edge_index.emplace(e.id, static_cast<int>(d.edges.size())).second)
                throw DiagramError(DiagramErrorCode::Malformed, "duplicate edge id");
            d.edges.push_back(e);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(DiagramErrorCode::Malformed, e.what());
    }

    auto to_ref = [&](const nlohmann::json& jr) {
        auto [id, fwd] = detail::parse_signed_ref(jr);
        auto it = edge_index.find(id);
        if (it == edge_index.end())
            throw DiagramError(DiagramErrorCode::Malformed,
                               "reference to unknown edge " + std::to_string(id));
        return EdgeRef{it->second, fwd};
    };
    try {
        for (const auto& jf : j.at("faces")) {
            VanKampenDiagram::Face f;
            f.id = jf.at("id").get<int>();
            for (const auto& jr : jf.at("cycle")) f.cycle.push_back(to_ref(jr));
            d.faces.push_back(std::move(f));
        }
        for (const auto& jr : j.at("boundary")) d.boundary.push_back(to_ref(jr));
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(DiagramErrorCode::Malformed, e.what());
    }
    return d;
}

inline nlohmann::json diagram_to_json(const VanKampenDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["m"] = d.m;
    j["k"] = d.k;
    j["vertices"] = d.vertices;
    j["base"] = d.base;
    auto ref_out = [&](EdgeRef r) -> nlohmann::json {
        int id = d.edges[r.edge].id;
        if (id == 0 && !r.fwd) return "-0";
        return r.fwd ? id : -id;
    };
    for (const auto& e : d.edges)
        j["edges"].push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"gen", e.gen}});
    for (const auto& f : d.faces) {
        nlohmann::json jf{{"id", f.id}, {"cycle", nlohmann::json::array()}};
        for (EdgeRef r : f.cycle) jf["cycle"].push_back(ref_out(r));
        j["faces"].push_back(std::move(jf));
    }
    j["boundary"] = nlohmann::json::array();
    for (EdgeRef r : d.boundary) j["boundary"].push_back(ref_out(r));
    return j;
}

// ---------------------------------------------------------------------------
// Validation and combinatorial analysis
// ---------------------------------------------------------------------------

/// A face corner: face `face`, position `pos` (between cycle refs pos and
/// pos+1), sitting at `vertex`, with the star-graph type of its letter pair.
struct Corner {
    int face;  // index into faces
    int pos;
    int vertex;  // vertex id
    EdgeType type;
};

struct DiagramAnalysis {
    std::set<int> boundary_vertices;
    std::set<int> interior_vertices;
    std::map<int, int> degree;  // vertex id -> incident edge ends
    std::vector<Corner> corners;
    std::map<std::pair<int, int>, size_t> corner_index;     // (face,pos) -> corners idx
    std::map<int, std::vector<size_t>> corners_at;          // vertex -> corners in rotation order
    std::map<int, std::pair<int, int>> face_occurrence;     // edge idx -> (face idx, pos), fwd
    std::map<int, std::pair<int, int>> face_occurrence_bwd; // edge idx -> (face idx, pos), bwd
    std::set<int> boundary_edges;                           // edge idx
};

namespace detail {

struct Occurrence {
    int place;  // face index, or -1 for the boundary cycle
    int pos;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

}  // namespace detail

/// Validate every diagram invariant; returns the derived incidence data.
/// Throws DiagramError with a distinct code per violated invariant.
inline DiagramAnalysis analyze(const VanKampenDiagram& d) {
    using detail::Occurrence;
    DiagramAnalysis an;

    std::set<int> vset(d.vertices.begin(), d.vertices.end());
    if (vset.size() != d.vertices.size())
        throw DiagramError(DiagramErrorCode::Malformed, "duplicate vertex id");
    for (const auto& e : d.edges)
        if (!vset.count(e.from) || !vset.count(e.to))
            throw DiagramError(DiagramErrorCode::Malformed, "edge endpoint is not a vertex");
    if (!vset.count(d.base))
        throw DiagramError(DiagramErrorCode::Malformed, "base is not a vertex");
    if (d.boundary.empty())
        throw DiagramError(DiagramErrorCode::Malformed, "empty boundary");
    std::set<int> face_ids;
    for (const auto& f : d.faces) {
        if (f.cycle.empty()) throw DiagramError(DiagramErrorCode::Malformed, "empty face cycle");
        if (!face_ids.insert(f.id).second)
            throw DiagramError(DiagramErrorCode::Malformed, "duplicate face id");
    }

    // cycles must be closed walks
    auto cycle_of = [&](int place) -> const std::vector<EdgeRef>& {
        return place < 0 ? d.boundary : d.faces[place].cycle;
    };
    const int nplaces = static_cast<int>(d.faces.size());
    for (int place = -1; place < nplaces; ++place) {
        const auto& cyc = cycle_of(place);
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i].edge < 0 || cyc[i].edge >= static_cast<int>(d.edges.size()))
                throw DiagramError(DiagramErrorCode::Malformed, "edge reference out of range");
            if (d.ref_to(cyc[i]) != d.ref_from(cyc[(i + 1) % cyc.size()]))
                throw DiagramError(DiagramErrorCode::EdgeIncidence,
                                   place < 0 ? "boundary is not a closed walk"
                                             : "face cycle is not a closed walk");
        }
    }

    // each edge exactly twice, once per orientation
    std::vector<std::vector<std::pair<Occurrence, bool>>> occ(d.edges.size());
    for (int place = -1; place < nplaces; ++place) {
        const auto& cyc = cycle_of(place);
        for (size_t i = 0; i < cyc.size(); ++i)
            occ[cyc[i].edge].push_back({{place, static_cast<int>(i)}, cyc[i].fwd});
    }
    for (size_t e = 0; e < d.edges.size(); ++e) {
        if (occ[e].size() != 2 || occ[e][0].second == occ[e][1].second)
            throw DiagramError(DiagramErrorCode::EdgeIncidence,
                               "edge " + std::to_string(d.edges[e].id) +
                                   " must occur exactly twice with opposite orientations");
        for (auto& [o, fwd] : occ[e]) {
            if (o.place >= 0) {
                if (fwd) an.face_occurrence[int(e)] = {o.place, o.pos};
                else an.face_occurrence_bwd[int(e)] = {o.place, o.pos};
            } else {
                an.boundary_edges.insert(int(e));
            }
        }
    }

    // Euler characteristic of the disk
    long long V = static_cast<long long>(d.vertices.size());
    long long E = static_cast<long long>(d.edges.size());
    long long F = static_cast<long long>(d.faces.size());
    if (V - E + F != 1)
        throw DiagramError(DiagramErrorCode::EulerCharacteristic,
                           "V - E + F = " + std::to_string(V - E + F) + ", expected 1");

    // connectivity of the 1-skeleton
    {
        std::map<int, int> comp;
        for (int v : d.vertices) comp[v] = v;
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& e : d.edges) comp[find(e.from)] = find(e.to);
        int root = find(d.vertices.front());
        for (int v : d.vertices)
            if (find(v) != root)
                throw DiagramError(DiagramErrorCode::EdgeIncidence, "diagram is disconnected");
    }

    for (const auto& e : d.edges) {
        an.degree[e.from] += 1;
        an.degree[e.to] += 1;
    }

    // boundary vertices; simple closed curve check
    {
        std::set<int> seen;
        for (EdgeRef r : d.boundary) {
            int v = d.ref_from(r);
            if (!seen.insert(v).second)
                throw DiagramError(DiagramErrorCode::NonSimpleBoundary,
                                   "boundary visits vertex " + std::to_string(v) + " twice");
        }
        an.boundary_vertices = std::move(seen);
        for (int v : d.vertices)
            if (!an.boundary_vertices.count(v)) an.interior_vertices.insert(v);
    }

    // rotation system: the corner pairing at each vertex is a single cycle
    {
        // arrivals at v: occurrences o with ref_to(o) = v; sigma(o) = next in
        // place (departs v); twin(departure) = the opposite occurrence of the
        // same edge (arrives at v). rho = twin . sigma must be one cycle.
        std::map<Occurrence, Occurrence> next_in_place;
        std::map<Occurrence, EdgeRef> ref_at;
        for (int place = -1; place < nplaces; ++place) {
            const auto& cyc = cycle_of(place);
            for (size_t i = 0; i < cyc.size(); ++i) {
                Occurrence o{place, static_cast<int>(i)};
                next_in_place[o] = {place, static_cast<int>((i + 1) % cyc.size())};
                ref_at[o] = cyc[i];
            }
        }
        std::map<int, std::vector<Occurrence>> arrivals;  // vertex -> arriving occs
        for (auto& [o, r] : ref_at) arrivals[d.ref_to(r)].push_back(o);
        auto twin = [&](Occurrence dep) {
            int e = ref_at[dep].edge;
            auto& pair = occ[e];
            Occurrence other = pair[0].first == dep ? pair[1].first : pair[0].first;
            return other;
        };
        for (auto& [v, arr] : arrivals) {
            if (arr.empty()) continue;
            std::set<Occurrence> unvisited(arr.begin(), arr.end());
            Occurrence cur = *unvisited.begin();
            for (size_t steps = 0; steps < arr.size(); ++steps) {
                unvisited.erase(cur);
                cur = twin(next_in_place[cur]);
            }
            if (!unvisited.empty())
                throw DiagramError(DiagramErrorCode::EdgeIncidence,
                                   "corners at vertex " + std::to_string(v) +
                                       " do not close into a single rotation");
        }

        // corner list face by face, then corners_at in rotation order
        for (int fi = 0; fi < nplaces; ++fi) {
            const auto& cyc = d.faces[fi].cycle;
            for (size_t i = 0; i < cyc.size(); ++i) {
                Letter a = d.ref_letter(cyc[i]);
                Letter b = d.ref_letter(cyc[(i + 1) % cyc.size()]);
                Corner c{fi, static_cast<int>(i), d.ref_to(cyc[i]),
                         detail::corner_type(a, b)};
                an.corner_index[{fi, int(i)}] = an.corners.size();
                an.corners.push_back(c);
            }
        }
        for (auto& [v, arr] : arrivals) {
            Occurrence cur = arr.front();
            for (size_t s = 0; s < arr.size(); ++s) {
                Occurrence dep = next_in_place[cur];
                if (cur.place >= 0)
                    an.corners_at[v].push_back(an.corner_index[{cur.place, cur.pos}]);
                cur = twin(dep);
            }
        }
    }

    // face labels: rotations of relators or their inverses
    for (int fi = 0; fi < nplaces; ++fi) {
        const auto& cyc = d.faces[fi].cycle;
        std::vector<Letter> ls;
        for (EdgeRef r : cyc) ls.push_back(d.ref_letter(r));
        Word w(d.n, ls);
        bool ok = false;
        Word rel = fib_word(d.n, d.m, d.k);
        for (int i = 0; i < d.n && !ok; ++i) {
            Word ri = shift(rel, i);
            ok = w.is_rotation_of(ri) || w.is_rotation_of(ri.inverse());
        }
        if (!ok)
            throw DiagramError(DiagramErrorCode::FaceLabel,
                               "face " + std::to_string(d.faces[fi].id) + " reads " +
                                   to_string(w) + ", not a relator rotation");
    }

    return an;
}

inline VanKampenDiagram parse_and_validate(const nlohmann::json& j) {
    VanKampenDiagram d = diagram_from_json(j);
    analyze(d);
    return d;
}

// ---------------------------------------------------------------------------
// Operations on validated diagrams
// ---------------------------------------------------------------------------

/// Boundary word read from the base vertex, following the stored boundary
/// cycle (which runs counterclockwise around the outer face).
inline Word boundary_word(const VanKampenDiagram& d) {
    size_t start = d.boundary.size();
    for (size_t i = 0; i < d.boundary.size(); ++i)
        if (d.ref_from(d.boundary[i]) == d.base) { start = i; break; }
    if (start == d.boundary.size())
        throw DiagramError(DiagramErrorCode::Malformed, "base vertex is not on the boundary");
    std::vector<Letter> ls;
    for (size_t i = 0; i < d.boundary.size(); ++i)
        ls.push_back(d.ref_letter(d.boundary[(start + i) % d.boundary.size()]));
    return Word(d.n, ls);
}

/// Mirror reading: the boundary traversed the other way round.
inline Word boundary_word_mirrored(const VanKampenDiagram& d) {
    return boundary_word(d).inverse();
}

/// True iff no interior edge carries a cancelling face pair: the label of one
/// face read from the edge equals the mirror reading of the other.
inline bool is_reduced(const VanKampenDiagram& d, const DiagramAnalysis& an) {
    auto read_fwd = [&](int f, int pos) {
        const auto& cyc = d.faces[f].cycle;
        std::vector<Letter> ls;
        for (size_t i = 0; i < cyc.size(); ++i)
            ls.push_back(d.ref_letter(cyc[(pos + i) % cyc.size()]));
        return ls;
    };
    auto read_mirror = [&](int f, int pos) {
        const auto& cyc = d.faces[f].cycle;
        std::vector<Letter> ls;
        const size_t L = cyc.size();
        for (size_t i = 0; i < L; ++i) {
            EdgeRef r = cyc[(pos + L - i) % L];
            ls.push_back(d.ref_letter(r).inverse());
        }
        return ls;
    };
    for (auto& [e, fo] : an.face_occurrence) {
        auto it = an.face_occurrence_bwd.find(e);
        if (it == an.face_occurrence_bwd.end()) continue;  // boundary edge
        auto [f1, p1] = fo;
        auto [f2, p2] = it->second;
        if (read_fwd(f1, p1) == read_mirror(f2, p2)) return false;
    }
    return true;
}

inline bool is_reduced(const VanKampenDiagram& d) { return is_reduced(d, analyze(d)); }

/// Corner type word around a vertex, in rotation order (face corners only).
inline std::string vertex_label(const VanKampenDiagram&, const DiagramAnalysis& an, int v) {
    std::string s;
    auto it = an.corners_at.find(v);
    if (it == an.corners_at.end()) return s;
    for (size_t ci : it->second) s += edge_type_char(an.corners[ci].type);
    return s;
}

/// Positions (as cyclic subword) where a vertex label contains XX.
inline bool label_has_cyclic_xx(const std::string& label) {
    if (label.size() < 2) return false;
    for (size_t i = 0; i < label.size(); ++i)
        if (label[i] == 'X' && label[(i + 1) % label.size()] == 'X') return true;
    return false;
}

/// Exact angle assignment: corner -> degrees.
struct AngleAssignment {
    std::map<std::pair<int, int>, Rat> angle;  // (face idx, pos) -> degrees

    const Rat& at(int face, int pos) const { return angle.at({face, pos}); }
};

/// The standard assignment: 360/q at each corner of an interior vertex of
/// degree q, 29 at each corner of a boundary vertex.
inline AngleAssignment standard_angles(const VanKampenDiagram& d, const DiagramAnalysis& an) {
    AngleAssignment a;
    for (const Corner& c : an.corners) {
        Rat v;
        if (an.interior_vertices.count(c.vertex))
            v = Rat(360, an.degree.at(c.vertex));
        else
            v = 29;
        a.angle[{c.face, c.pos}] = v;
    }
    (void)d;
    return a;
}

struct CurvatureReport {
    std::map<int, Rat> face_kappa;             // face id -> kappa
    std::map<int, Rat> interior_vertex_kappa;  // vertex id -> kappa
    std::map<int, Rat> boundary_vertex_kappa;
    Rat face_total = 0, interior_total = 0, boundary_total = 0;
    Rat total = 0;  // Gauss-Bonnet: must equal 360
};

inline CurvatureReport curvature_report(const VanKampenDiagram& d, const DiagramAnalysis& an,
                                        const AngleAssignment& a) {
    CurvatureReport rep;
    std::map<int, Rat> vertex_sum;
    for (int fi = 0; fi < static_cast<int>(d.faces.size()); ++fi) {
        Rat sum = 0;
        for (int pos = 0; pos < static_cast<int>(d.faces[fi].cycle.size()); ++pos) {
            const Rat& ang = a.at(fi, pos);
            sum += ang;
            vertex_sum[an.corners[an.corner_index.at({fi, pos})].vertex] += ang;
        }
        rep.face_kappa[d.faces[fi].id] = sum - 180;
        rep.face_total += sum - 180;
    }
    for (int v : d.vertices) {
        Rat s = vertex_sum.count(v) ? vertex_sum[v] : Rat(0);
        if (an.interior_vertices.count(v)) {
            rep.interior_vertex_kappa[v] = Rat(360) - s;
            rep.interior_total += Rat(360) - s;
        } else {
            rep.boundary_vertex_kappa[v] = Rat(180) - s;
            rep.boundary_total += Rat(180) - s;
        }
    }
    rep.total = rep.face_total + rep.interior_total + rep.boundary_total;
    return rep;
}

/// Lemma-3.3-style check: across every interior edge, a Z corner opposite the
/// edge on one side forbids a Z corner opposite it on the other side (and the
/// corners on the shared edge itself are never Z for a valid triangle).
struct ZPlacementViolation {
    int face1, face2;  // face ids
    int edge_id;
};

inline std::vector<ZPlacementViolation> z_placement_check(const VanKampenDiagram& d,
                                                          const DiagramAnalysis& an) {
    std::vector<ZPlacementViolation> out;
    auto opposite_corner_type = [&](int f, int pos) {
        const int L = static_cast<int>(d.faces[f].cycle.size());
        return an.corners[an.corner_index.at({f, (pos + 1) % L})].type;
    };
    auto edge_corner_types = [&](int f, int pos) {
        const int L = static_cast<int>(d.faces[f].cycle.size());
        return std::pair{an.corners[an.corner_index.at({f, pos})].type,
                         an.corners[an.corner_index.at({f, (pos + L - 1) % L})].type};
    };
    for (auto& [e, fo] : an.face_occurrence) {
        auto it = an.face_occurrence_bwd.find(e);
        if (it == an.face_occurrence_bwd.end()) continue;
        auto [f1, p1] = fo;
        auto [f2, p2] = it->second;
        if (d.faces[f1].cycle.size() != 3 || d.faces[f2].cycle.size() != 3) continue;
        for (auto [fa, pa, fb, pb] : {std::tuple{f1, p1, f2, p2}, std::tuple{f2, p2, f1, p1}}) {
            if (opposite_corner_type(fa, pa) != EdgeType::Z) continue;
            auto [c1, c2] = edge_corner_types(fa, pa);
            bool own_bad = c1 == EdgeType::Z || c2 == EdgeType::Z;
            bool other_bad = opposite_corner_type(fb, pb) == EdgeType::Z;
            if (own_bad || other_bad) {
                out.push_back({d.faces[fa].id, d.faces[fb].id, d.edges[e].id});
                break;  // report the pair once
            }
        }
    }
    return out;
}

}  // namespace fibtype
