#include "fibtype/diagram.hpp"

#include "diagram_gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>

using namespace fibtype;
using nlohmann::json;

namespace {
json load(const std::string& name) {
    std::ifstream in(std::string(FIBTYPE_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}
}  // namespace

TEST_CASE("single face diagram validates") {
    testgen::DiagramBuilder b(10, 7, 1);
    VanKampenDiagram d = b.d;
    DiagramAnalysis an = analyze(d);
    CHECK(d.vertices.size() == 3);
    CHECK(d.edges.size() == 3);
    CHECK(d.faces.size() == 1);
    CHECK(an.interior_vertices.empty());
    CHECK(boundary_word(d).is_rotation_of(fib_word(10, 7, 1).inverse()));
    CHECK(is_reduced(d, an));

    // the single face has one corner of each type
    std::set<EdgeType> types;
    for (const Corner& c : an.corners) types.insert(c.type);
    CHECK(types == std::set<EdgeType>{EdgeType::X, EdgeType::Y, EdgeType::Z});
}

TEST_CASE("figure 1 fixture: validation, reduction, boundary word") {
    VanKampenDiagram d = parse_and_validate(load("fig1.vkd"));
    DiagramAnalysis an = analyze(d);
    CHECK(d.vertices.size() == 18);
    CHECK(d.edges.size() == 37);
    CHECK(d.faces.size() == 20);
    CHECK(an.interior_vertices.size() == 4);

    Word bw = boundary_word(d);
    // a = x0 x5, b = x1 x0 x2 x1 x3; boundary reads a b a b^-1
    CHECK(to_string(bw) == "x0 x5 x1 x0 x2 x1 x3 x0 x5 X3 X1 X2 X0 X1");
    CHECK(boundary_word_mirrored(d) == bw.inverse());

    CHECK(is_reduced(d, an));
    CHECK(z_placement_check(d, an).empty());

    AngleAssignment angles = standard_angles(d, an);
    CurvatureReport rep = curvature_report(d, an, angles);
    CHECK(rep.total == Rat(360));
    for (auto& [v, kap] : rep.interior_vertex_kappa) CHECK(kap == Rat(0));
}

TEST_CASE("face label errors carry the right code") {
    json j = load("fig1.vkd");
    j["m"] = 3;  // now no face reads a relator of P_10(3,1)
    try {
        parse_and_validate(j);
        FAIL("expected a face-label error");
    } catch (const DiagramError& e) {
        CHECK(e.code() == DiagramErrorCode::FaceLabel);
    }
}

TEST_CASE("euler characteristic violation") {
    json j = load("broken-euler.vkd");
    try {
        parse_and_validate(j);
        FAIL("expected an euler-characteristic error");
    } catch (const DiagramError& e) {
        CHECK(e.code() == DiagramErrorCode::EulerCharacteristic);
    }
}

TEST_CASE("duplicate face ids are malformed") {
    json j = load("p24-z3.vkd");
    j["faces"][1]["id"] = 0;
    try {
        parse_and_validate(j);
        FAIL("expected a malformed-document error");
    } catch (const DiagramError& e) {
        CHECK(e.code() == DiagramErrorCode::Malformed);
    }
}

TEST_CASE("edge incidence violation") {
    json j = load("p24-z3.vkd");
    j["faces"][0]["cycle"] = {1, 4, 2};  // +2 instead of -2: same orientation twice
    try {
        parse_and_validate(j);
        FAIL("expected an edge-incidence error");
    } catch (const DiagramError& e) {
        CHECK(e.code() == DiagramErrorCode::EdgeIncidence);
    }
}

TEST_CASE("non-simple boundary is rejected") {
    // two triangles joined at a single vertex (bowtie): boundary hits it twice
    json j;
    j["n"] = 10; j["m"] = 7; j["k"] = 1;
    j["vertices"] = {0, 1, 2, 3, 4};
    j["edges"] = json::array({
        json{{"id", 1}, {"from", 0}, {"to", 1}, {"gen", 0}},
        json{{"id", 2}, {"from", 1}, {"to", 2}, {"gen", 7}},
        json{{"id", 3}, {"from", 0}, {"to", 2}, {"gen", 1}},
        json{{"id", 4}, {"from", 2}, {"to", 3}, {"gen", 0}},
        json{{"id", 5}, {"from", 3}, {"to", 4}, {"gen", 7}},
        json{{"id", 6}, {"from", 2}, {"to", 4}, {"gen", 1}},
    });
    j["faces"] = json::array({
        json{{"id", 0}, {"cycle", {1, 2, -3}}},
        json{{"id", 1}, {"cycle", {4, 5, -6}}},
    });
    j["boundary"] = {3, 6, -5, -4, -2, -1};
    j["base"] = 0;
    try {
        parse_and_validate(j);
        FAIL("expected a non-simple-boundary error");
    } catch (const DiagramError& e) {
        CHECK(e.code() == DiagramErrorCode::NonSimpleBoundary);
    }
}

TEST_CASE("interior Z^3 vertex fixture over P_24(1,8)") {
    VanKampenDiagram d = parse_and_validate(load("p24-z3.vkd"));
    DiagramAnalysis an = analyze(d);
    REQUIRE(an.interior_vertices.size() == 1);
    int v = *an.interior_vertices.begin();
    CHECK(an.degree.at(v) == 3);
    CHECK(vertex_label(d, an, v) == "ZZZ");
    CHECK(is_reduced(d, an));

    AngleAssignment angles = standard_angles(d, an);
    CurvatureReport rep = curvature_report(d, an, angles);
    CHECK(rep.total == Rat(360));
    CHECK(rep.interior_vertex_kappa.at(v) == Rat(0));
    // interior degree-3 corners get 120 each
    CHECK(angles.at(an.corners[an.corners_at.at(v).front()].face,
                    an.corners[an.corners_at.at(v).front()].pos) == Rat(120));
}

TEST_CASE("mirror pair: not reduced, and a Z placement violation") {
    VanKampenDiagram d = parse_and_validate(load("z-violation.vkd"));
    DiagramAnalysis an = analyze(d);
    CHECK_FALSE(is_reduced(d, an));
    auto viol = z_placement_check(d, an);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0].edge_id == 2);
}

TEST_CASE("single face: trivially reduced, no z violations") {
    testgen::DiagramBuilder b(24, 1, 8);
    DiagramAnalysis an = analyze(b.d);
    CHECK(is_reduced(b.d, an));
    CHECK(z_placement_check(b.d, an).empty());
}

TEST_CASE("single-face curvature adds to 360") {
    testgen::DiagramBuilder b(10, 7, 1);
    DiagramAnalysis an = analyze(b.d);
    CurvatureReport rep = curvature_report(b.d, an, standard_angles(b.d, an));
    // kappa(f) = -180 + 3*29 = -93; three boundary vertices at 151 each
    CHECK(rep.face_kappa.at(0) == Rat(-93));
    for (auto& [v, kap] : rep.boundary_vertex_kappa) CHECK(kap == Rat(151));
    CHECK(rep.total == Rat(360));
}

TEST_CASE("json round trip, including the signed-zero escape") {
    json j = load("fig1.vkd");
    VanKampenDiagram d = parse_and_validate(j);
    json j2 = diagram_to_json(d);
    VanKampenDiagram d2 = parse_and_validate(j2);
    CHECK(boundary_word(d2) == boundary_word(d));
    CHECK(d2.edges.size() == d.edges.size());

    // an edge with id 0 traversed in reverse must round-trip as "-0"
    json z;
    z["n"] = 10; z["m"] = 7; z["k"] = 1;
    z["vertices"] = {0, 1, 2};
    z["edges"] = json::array({
        json{{"id", 0}, {"from", 0}, {"to", 1}, {"gen", 0}},
        json{{"id", 1}, {"from", 1}, {"to", 2}, {"gen", 7}},
        json{{"id", 2}, {"from", 0}, {"to", 2}, {"gen", 1}},
    });
    z["faces"] = json::array({json{{"id", 0}, {"cycle", {0, 1, -2}}}});
    z["boundary"] = {"-0", 2, -1};
    z["base"] = 0;
    VanKampenDiagram dz = parse_and_validate(z);
    json z2 = diagram_to_json(dz);
    CHECK(z2["boundary"][0] == json("-0"));
    CHECK(parse_and_validate(z2).edges.size() == 3);
}

TEST_CASE("generated diagrams always validate") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + int(rng() % 20);
        int m = 1 + int(rng() % (n - 1)), k = 1 + int(rng() % (n - 1));
        if (m == k) continue;
        VanKampenDiagram d = testgen::random_diagram(rng, n, m, k, 1 + int(rng() % 40));
        CHECK_NOTHROW(analyze(d));
    }
}

TEST_CASE("a cyclic XX interior label certifies a cancelling pair") {
    // XX around an interior vertex pins a mirror pair on the shared edge, so
    // it can only show up in non-reduced diagrams.
    std::mt19937 rng(99);
    int with_interior = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + int(rng() % 18);
        int m = 1 + int(rng() % (n - 1)), k = 1 + int(rng() % (n - 1));
        if (m == k) continue;
        VanKampenDiagram d = testgen::random_diagram(rng, n, m, k, 12 + int(rng() % 30), 500);
        DiagramAnalysis an = analyze(d);
        bool reduced = is_reduced(d, an);
        for (int v : an.interior_vertices) {
            ++with_interior;
            if (label_has_cyclic_xx(vertex_label(d, an, v))) CHECK_FALSE(reduced);
        }
    }
    CHECK(with_interior > 0);  // the sweep must actually exercise interior vertices
}
