#pragma once

#include "fibtype/diagram.hpp"

#include <algorithm>
#include <optional>

namespace fibtype {

class LaneError : public std::runtime_error {
  public:
    explicit LaneError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A triangulated disk with a black/white face coloring. Abstract disks (no
/// underlying diagram) are allowed so the figure configurations can be tested
/// directly.
struct ColoredDisk {
    struct Face {
        int id;
        bool black;
        std::vector<int> neighbors;  // face ids across shared edges
        int boundary_edges = 0;
        std::string label;  // optional, for fixtures
    };
    std::vector<Face> faces;

    const Face& face(int id) const {
        for (const auto& f : faces)
            if (f.id == id) return f;
        throw LaneError("unknown face id " + std::to_string(id));
    }
    bool is_black(int id) const { return face(id).black; }
    bool is_boundary_face(int id) const { return face(id).boundary_edges > 0; }

    std::vector<int> white_neighbors(int id) const {
        std::vector<int> out;
        for (int nb : dedup(face(id).neighbors))
            if (!is_black(nb)) out.push_back(nb);
        return out;
    }
    std::vector<int> black_neighbors(int id) const {
        std::vector<int> out;
        for (int nb : dedup(face(id).neighbors))
            if (is_black(nb)) out.push_back(nb);
        return out;
    }

    static std::vector<int> dedup(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    void validate() const {
        std::set<int> ids;
        for (const auto& f : faces)
            if (!ids.insert(f.id).second) throw LaneError("duplicate face id");
        for (const auto& f : faces) {
            if (f.neighbors.size() + f.boundary_edges > 3)
                throw LaneError("face " + std::to_string(f.id) + " has more than 3 sides");
            for (int nb : f.neighbors) {
                const Face& g = face(nb);
                if (std::count(g.neighbors.begin(), g.neighbors.end(), f.id) !=
                    std::count(f.neighbors.begin(), f.neighbors.end(), nb))
                    throw LaneError("asymmetric adjacency between faces " +
                                    std::to_string(f.id) + " and " + std::to_string(nb));
            }
        }
    }
};

inline ColoredDisk colored_disk_from_json(const nlohmann::json& j) {
    ColoredDisk cd;
    for (const auto& jf : j.at("faces")) {
        ColoredDisk::Face f;
        f.id = jf.at("id").get<int>();
        std::string col = jf.at("color").get<std::string>();
        if (col != "black" && col != "white") throw LaneError("color must be black or white");
        f.black = col == "black";
        f.neighbors = jf.at("neighbors").get<std::vector<int>>();
        f.boundary_edges = jf.value("boundary_edges", 0);
        f.label = jf.value("label", std::string{});
        cd.faces.push_back(std::move(f));
    }
    cd.validate();
    return cd;
}

inline nlohmann::json colored_disk_to_json(const ColoredDisk& cd) {
    nlohmann::json j;
    j["faces"] = nlohmann::json::array();
    for (const auto& f : cd.faces) {
        nlohmann::json jf{{"id", f.id},
                          {"color", f.black ? "black" : "white"},
                          {"neighbors", f.neighbors},
                          {"boundary_edges", f.boundary_edges}};
        if (!f.label.empty()) jf["label"] = f.label;
        j["faces"].push_back(std::move(jf));
    }
    return j;
}

/// Black iff incident to an interior vertex of degree <= 6 (the set V).
inline ColoredDisk color_faces(const VanKampenDiagram& d, const DiagramAnalysis& an) {
    std::set<int> calV;
    for (int v : an.interior_vertices)
        if (an.degree.at(v) <= 6) calV.insert(v);
    ColoredDisk cd;
    for (int fi = 0; fi < static_cast<int>(d.faces.size()); ++fi) {
        ColoredDisk::Face f;
        f.id = d.faces[fi].id;
        f.black = false;
        for (EdgeRef r : d.faces[fi].cycle) {
            if (calV.count(d.ref_from(r))) f.black = true;
            if (calV.count(d.ref_to(r))) f.black = true;
        }
        cd.faces.push_back(std::move(f));
    }
    // adjacency across interior edges; boundary edge count per face
    for (auto& [e, fo] : an.face_occurrence) {
        auto it = an.face_occurrence_bwd.find(e);
        if (it != an.face_occurrence_bwd.end()) {
            cd.faces[fo.first].neighbors.push_back(d.faces[it->second.first].id);
            cd.faces[it->second.first].neighbors.push_back(d.faces[fo.first].id);
        } else {
            cd.faces[fo.first].boundary_edges += 1;
        }
    }
    for (auto& [e, fo] : an.face_occurrence_bwd)
        if (!an.face_occurrence.count(e)) cd.faces[fo.first].boundary_edges += 1;
    cd.validate();
    return cd;
}

/// Every black face has at most one white neighbour; holds for any coloring
/// derived from a diagram, and is assumed by the walk rules.
inline bool black_faces_have_at_most_one_white_neighbor(const ColoredDisk& cd) {
    for (const auto& f : cd.faces)
        if (f.black && cd.white_neighbors(f.id).size() > 1) return false;
    return true;
}

/// Home, the whites of one ant walk, and all black faces adjacent to them.
struct AntLane {
    int home;
    std::vector<int> whites;  // in walk order
    std::set<int> blacks;
    std::optional<int> junction;     // white face with no black neighbour
    std::optional<int> destination;  // last face of the walk (home if no white)

    int b() const { return static_cast<int>(blacks.size()); }
    int w() const { return static_cast<int>(whites.size()); }
    std::set<int> face_set() const {
        std::set<int> s(blacks);
        s.insert(whites.begin(), whites.end());
        return s;
    }
};

/// Deterministic ant walk from a black home face following the three rules:
/// enter home's white neighbour if it has one; from a white face adjacent to
/// a black face other than home, move to the unvisited white neighbour; stop
/// when no move is forced. Two distinct forced moves raise a LaneError.
inline AntLane ant_walk(const ColoredDisk& cd, int home) {
    if (!cd.is_black(home)) throw LaneError("ant home must be a black face");
    AntLane lane;
    lane.home = home;
    auto home_whites = cd.white_neighbors(home);
    if (home_whites.size() > 1)
        throw LaneError("black face " + std::to_string(home) + " has two white neighbours");
    if (!home_whites.empty()) {
        std::set<int> visited{home};
        int cur = home_whites.front();
        int prev = home;
        for (;;) {
            lane.whites.push_back(cur);
            visited.insert(cur);
            bool must_move = false;
            for (int b : cd.black_neighbors(cur))
                if (b != home) must_move = true;
            if (!must_move) break;
            std::vector<int> options;
            for (int w : cd.white_neighbors(cur))
                if (w != prev) options.push_back(w);  // backtracking is the only ban
            if (options.empty()) break;
            if (options.size() > 1)
                throw LaneError("ambiguous forced move out of white face " + std::to_string(cur));
            prev = cur;
            cur = options.front();
            if (visited.count(cur)) throw LaneError("ant revisited a face");
        }
    }
    lane.blacks.insert(home);
    for (int w : lane.whites)
        for (int b : cd.black_neighbors(w)) lane.blacks.insert(b);
    if (!lane.whites.empty()) {
        lane.destination = lane.whites.back();
        if (cd.black_neighbors(lane.whites.back()).empty()) lane.junction = lane.whites.back();
    } else {
        lane.destination = home;
    }
    return lane;
}

/// The admissible lane shapes.
enum class LaneShape {
    SingleBlack,       // (1,0)
    BlackWhite,        // (1,1)
    JunctionEnd,       // b = w >= 2, last white is a junction
    BoundaryEnd,       // b-1 = w >= 1, destination is a boundary face
    DoubleBlackEnd,    // b-2 = w >= 1, destination has two black neighbours
};

inline std::optional<LaneShape> lane_shape(const ColoredDisk& cd, const AntLane& L) {
    const int b = L.b(), w = L.w();
    if (b == 1 && w == 0) return LaneShape::SingleBlack;
    if (b == 1 && w == 1) return LaneShape::BlackWhite;
    if (w >= 2 && b == w && L.junction) return LaneShape::JunctionEnd;
    if (w >= 1 && b == w + 1 && L.destination && cd.is_boundary_face(*L.destination) &&
        !L.junction)
        return LaneShape::BoundaryEnd;
    if (w >= 1 && b == w + 2 && L.destination &&
        cd.black_neighbors(*L.destination).size() == 2 && !L.junction)
        return LaneShape::DoubleBlackEnd;
    return std::nullopt;
}

/// An element of the decomposition: a maximal lane, or the join of two or
/// three maximal lanes at a shared junction.
struct LaneElement {
    std::vector<AntLane> parts;
    std::set<int> faces;  // union, junction counted once
    int b = 0, w = 0;

    int size() const { return static_cast<int>(faces.size()); }
};

struct LaneSet {
    std::vector<AntLane> maximal;  // all distinct maximal lanes
    std::vector<LaneElement> elements;
};

/// All maximal ant lanes, grouped into the decomposition: lanes without a
/// junction stand alone; lanes sharing a junction are joined in pairs or
/// triples. More than three lanes at one junction is a structural error.
inline LaneSet lane_decomposition(const ColoredDisk& cd) {
    std::vector<AntLane> lanes;
    for (const auto& f : cd.faces) {
        if (!f.black) continue;
        AntLane L = ant_walk(cd, f.id);
        bool dup = false;
        for (const auto& other : lanes)
            if (other.face_set() == L.face_set()) { dup = true; break; }
        if (!dup) lanes.push_back(std::move(L));
    }
    LaneSet ls;
    for (const auto& L : lanes) {
        bool contained = false;
        for (const auto& M : lanes) {
            if (&L == &M) continue;
            auto lf = L.face_set(), mf = M.face_set();
            if (lf != mf && std::includes(mf.begin(), mf.end(), lf.begin(), lf.end()))
                contained = true;
        }
        if (!contained) ls.maximal.push_back(L);
    }

    std::map<int, std::vector<const AntLane*>> by_junction;
    for (const auto& L : ls.maximal) {
        if (L.junction) by_junction[*L.junction].push_back(&L);
        else {
            LaneElement el;
            el.parts.push_back(L);
            el.faces = L.face_set();
            el.b = L.b();
            el.w = L.w();
            ls.elements.push_back(std::move(el));
        }
    }
    for (auto& [j, group] : by_junction) {
        if (group.size() > 3)
            throw LaneError("junction " + std::to_string(j) + " shared by " +
                            std::to_string(group.size()) + " maximal lanes");
        LaneElement el;
        for (const AntLane* L : group) {
            el.parts.push_back(*L);
            auto fs = L->face_set();
            el.faces.insert(fs.begin(), fs.end());
            el.b += L->b();
            el.w += L->w();
        }
        el.w -= static_cast<int>(group.size()) - 1;  // the junction is shared
        if (static_cast<int>(el.faces.size()) != el.b + el.w)
            throw LaneError("lanes at junction " + std::to_string(j) +
                            " overlap beyond the junction");
        ls.elements.push_back(std::move(el));
    }

    // no face may belong to two distinct elements
    std::set<int> seen;
    for (const auto& el : ls.elements)
        for (int f : el.faces)
            if (!seen.insert(f).second)
                throw LaneError("face " + std::to_string(f) + " lies in two elements");
    return ls;
}

/// The five impossible colored configurations (lane types (3,1), (4,2),
/// (5,3) and both (6,4) shapes), matched by adjacency pattern.
struct PatternMatch {
    int pattern;  // 1..5
    std::vector<int> whites;
};

inline std::vector<PatternMatch> forbidden_patterns(const ColoredDisk& cd) {
    std::vector<PatternMatch> out;
    auto nb = [&](int f) { return static_cast<int>(cd.black_neighbors(f).size()); };
    std::vector<int> whites;
    for (const auto& f : cd.faces)
        if (!f.black) whites.push_back(f.id);

    for (int w : whites)
        if (nb(w) == 3) out.push_back({1, {w}});

    for (int w1 : whites)
        for (int w2 : cd.white_neighbors(w1)) {
            if (w2 <= w1) continue;
            if (nb(w1) == 2 && nb(w2) == 2) out.push_back({2, {w1, w2}});
        }

    for (int w2 : whites) {
        if (nb(w2) != 1) continue;
        auto wn = cd.white_neighbors(w2);
        for (int w1 : wn)
            for (int w3 : wn) {
                if (w1 >= w3) continue;
                if (nb(w1) == 2 && nb(w3) == 2) out.push_back({3, {w1, w2, w3}});
            }
    }

    for (int c : whites) {
        auto wn = cd.white_neighbors(c);
        if (wn.size() != 3) continue;
        if (std::all_of(wn.begin(), wn.end(), [&](int w) { return nb(w) == 2; }))
            out.push_back({4, {c, wn[0], wn[1], wn[2]}});
    }

    for (int w2 : whites) {
        if (nb(w2) != 1) continue;
        for (int w3 : cd.white_neighbors(w2)) {
            if (w3 <= w2 || nb(w3) != 1) continue;
            for (int w1 : cd.white_neighbors(w2)) {
                if (w1 == w3 || nb(w1) != 2) continue;
                for (int w4 : cd.white_neighbors(w3)) {
                    if (w4 == w2 || nb(w4) != 2) continue;
                    if (w1 == w4) continue;
                    out.push_back({5, {w1, w2, w3, w4}});
                }
            }
        }
    }
    return out;
}

/// Per-element curvature sums and the maximum average face curvature, with
/// the interior-vertex hypothesis gate of the average-curvature lemma.
struct LaneCurvature {
    struct Element {
        int b, w;
        Rat kappa;
        Rat average;
        std::vector<int> faces;
    };
    std::vector<Element> elements;
    Rat kappa_max_average = 0;  // kappa_L
    bool hypothesis_ok = false;  // every interior vertex: degree >= 8 or Z^{3..6}
    std::vector<int> hypothesis_violations;  // vertex ids
    bool verdict_kappa_le_minus_one = false;  // asserted only when hypothesis_ok
};

inline LaneCurvature lane_curvature(const VanKampenDiagram& d, const DiagramAnalysis& an,
                                    const LaneSet& ls) {
    LaneCurvature lc;
    AngleAssignment angles = standard_angles(d, an);
    CurvatureReport rep = curvature_report(d, an, angles);

    lc.hypothesis_ok = true;
    for (int v : an.interior_vertices) {
        if (an.degree.at(v) >= 8) continue;
        std::string lab = vertex_label(d, an, v);
        bool pure_z = lab.size() >= 3 && lab.size() <= 6 &&
                      std::all_of(lab.begin(), lab.end(), [](char c) { return c == 'Z'; });
        if (!pure_z) {
            lc.hypothesis_ok = false;
            lc.hypothesis_violations.push_back(v);
        }
    }

    bool first = true;
    for (const auto& el : ls.elements) {
        LaneCurvature::Element e;
        e.b = el.b;
        e.w = el.w;
        e.kappa = 0;
        for (int fid : el.faces) e.kappa += rep.face_kappa.at(fid);
        e.faces.assign(el.faces.begin(), el.faces.end());
        e.average = e.kappa / Rat(el.faces.size());
        if (first || e.average > lc.kappa_max_average) lc.kappa_max_average = e.average;
        first = false;
        lc.elements.push_back(std::move(e));
    }
    if (lc.hypothesis_ok && !lc.elements.empty())
        lc.verdict_kappa_le_minus_one = lc.kappa_max_average <= Rat(-1);
    return lc;
}

}  // namespace fibtype
