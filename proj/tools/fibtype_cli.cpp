// Command-line front end: classification, tables, small cancellation tests,
// star graph analysis, abelianisation, coset enumeration and the van Kampen
// diagram auditor.

#include "fibtype/abelian.hpp"
#include "fibtype/classify.hpp"
#include "fibtype/coset.hpp"
#include "fibtype/diagram.hpp"
#include "fibtype/lanes.hpp"
#include "fibtype/stargraph.hpp"
#include "fibtype/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace fibtype;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitResource = 2;

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::pair<int, int> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(spec);
        return {v, v};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

int cmd_classify(int n, int m, int k, bool as_json) {
    Classification c = classify(n, m, k);
    if (as_json)
        std::cout << classification_json(n, m, k, c).dump(1) << "\n";
    else
        std::cout << classification_text(n, m, k, c);
    return kExitOk;
}

int cmd_table(const std::string& spec, bool as_json) {
    auto [lo, hi] = parse_range(spec);
    if (lo < 3 || hi < lo) throw std::invalid_argument("table: bad range " + spec);
    json arr = json::array();
    for (int n = lo; n <= hi; ++n)
        for (const ReportRow& r : table_rows(n)) {
            if (as_json) arr.push_back(r);
            else std::cout << r.to_text() << "\n";
        }
    if (as_json) std::cout << arr.dump(1) << "\n";
    return kExitOk;
}

int cmd_star_girth(int n, int m, int k) {
    int g = girth(build_star_graph(n, m, k));
    if (g == kInfiniteGirth) std::cout << "girth = infinity\n";
    else std::cout << "girth = " << g << "\n";
    return kExitOk;
}

int cmd_star_cycles(int n, int m, int k, int maxlen) {
    if (maxlen > 12) {
        std::cerr << "cycle budget exceeded: maxlen must be <= 12\n";
        return kExitResource;
    }
    for (const CycleRecord& c : short_cycles(build_star_graph(n, m, k), maxlen)) {
        std::cout << "len=" << c.length << " type=" << c.type_word << " alpha=" << c.alpha
                  << " beta=" << c.beta;
        if (c.has_xx) std::cout << " XX-FLAG";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_star_census(int n, int m, int k, int p) {
    CensusReport rep = interior_vertex_census(n, m, k, p);
    std::cout << "cycles of length <= 7: " << rep.cycles.size() << "\n";
    for (const CycleRecord& c : rep.cycles)
        std::cout << "len=" << c.length << " type=" << c.type_word << " alpha=" << c.alpha
                  << " beta=" << c.beta << "\n";
    if (rep.pass) {
        std::cout << "census: PASS (all cycles pure Z, length divisible by " << p << ")\n";
        return kExitOk;
    }
    std::cout << "census: FAIL (" << rep.violations.size() << " violation(s))\n";
    return kExitInvalid;
}

int cmd_ab(int n, int m, int k, bool as_json) {
    AbelianInvariants inv = abelian_invariants(n, m, k);
    if (as_json) {
        json j;
        j["free_rank"] = inv.free_rank;
        j["torsion"] = json::array();
        for (const auto& d : inv.torsion) j["torsion"].push_back(d.str());
        j["order"] = inv.finite() ? json(inv.order()->str()) : json(nullptr);
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << inv.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_order(int n, int m, int k, uint32_t max_cosets) {
    CosetResult r = enumerate(fib_presentation(n, m, k), {}, max_cosets);
    std::cerr << "cosets defined: " << r.stats.cosets_defined
              << ", coincidences: " << r.stats.coincidences
              << ", lookaheads: " << r.stats.lookaheads << "\n";
    if (!r.closed()) {
        std::cerr << "overflow: exceeded " << r.limit << " cosets (not a proof of infiniteness)\n";
        return kExitResource;
    }
    std::cout << "order = " << r.order << "\n";
    return kExitOk;
}

int cmd_t5(int n, int m, int k) {
    std::cout << (is_T5(n, m, k) ? "T(5): yes" : "T(5): no") << "\n";
    return kExitOk;
}

int cmd_t6(int n, int m, int k) {
    FibParams p = derive(n, m, k);
    bool profile = is_T6_profile(n, p.A, p.B);
    std::cout << (profile ? "T(6): yes" : "T(6): no") << "\n";
    if (profile && !is_T6_generic(n, m, k))
        std::cout << "note: A+B = n/2, the T(6) hyperbolicity test does not apply\n";
    return kExitOk;
}

int cmd_cases(int p) {
    for (const FibParams& r : case_representatives(p))
        std::cout << "G_" << r.n << "(" << r.m << "," << r.k << ")\n";
    return kExitOk;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

int audit_colored_disk(const ColoredDisk& cd, bool full) {
    int blacks = 0;
    for (const auto& f : cd.faces) blacks += f.black;
    std::cout << "colored disk: " << cd.faces.size() << " faces, " << blacks << " black\n";
    auto matches = forbidden_patterns(cd);
    for (const auto& m : matches) {
        std::cout << "forbidden pattern #" << m.pattern << " matched (white faces:";
        for (int w : m.whites) std::cout << " " << w;
        std::cout << ")\n";
    }
    if (matches.empty()) std::cout << "no forbidden patterns\n";
    if (!full) return kExitOk;
    LaneSet ls = lane_decomposition(cd);
    std::cout << "maximal ant lanes: " << ls.maximal.size() << "\n";
    std::cout << "lane id | type | faces\n";
    int id = 0;
    for (const auto& el : ls.elements) {
        std::cout << id++ << " | (" << el.b << "," << el.w << ") |";
        for (int f : el.faces) std::cout << " " << f;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_diagram(const std::string& path, bool audit) {
    json j = load_json(path);
    if (ends_with(path, ".cdk")) {
        ColoredDisk cd = colored_disk_from_json(j);
        std::cout << "valid colored disk\n";
        return audit_colored_disk(cd, audit);
    }
    VanKampenDiagram d = parse_and_validate(j);
    DiagramAnalysis an = analyze(d);
    std::cout << "valid van Kampen diagram over P_" << d.n << "(" << d.m << "," << d.k << "): "
              << d.vertices.size() << " vertices, " << d.edges.size() << " edges, "
              << d.faces.size() << " faces\n";
    if (!audit) return kExitOk;

    std::cout << "reduced: " << (is_reduced(d, an) ? "yes" : "no") << "\n";
    std::cout << "boundary = " << to_string(boundary_word(d)) << "\n";
    AngleAssignment angles = standard_angles(d, an);
    CurvatureReport rep = curvature_report(d, an, angles);
    std::cout << "Gauss-Bonnet total = " << rat_str(rep.total) << "\n";
    for (auto& [fid, kap] : rep.face_kappa)
        std::cout << "face " << fid << ": kappa = " << rat_str(kap) << "\n";
    auto viols = z_placement_check(d, an);
    std::cout << "Z placement violations: " << viols.size() << "\n";
    for (auto& v : viols)
        std::cout << "  faces " << v.face1 << "," << v.face2 << " across edge " << v.edge_id
                  << "\n";

    ColoredDisk cd = color_faces(d, an);
    int blacks = 0;
    for (const auto& f : cd.faces) blacks += f.black;
    std::cout << "black faces: " << blacks << "\n";
    LaneSet ls = lane_decomposition(cd);
    LaneCurvature lc = lane_curvature(d, an, ls);
    std::cout << "lane id | type | faces | kappa | avg\n";
    int id = 0;
    for (const auto& el : lc.elements) {
        std::cout << id++ << " | (" << el.b << "," << el.w << ") |";
        for (int f : el.faces) std::cout << " " << f;
        std::cout << " | " << rat_str(el.kappa) << " | " << rat_str(el.average) << "\n";
    }
    if (lc.hypothesis_ok) {
        std::cout << "interior-vertex hypothesis: holds; kappa_L = "
                  << rat_str(lc.kappa_max_average)
                  << (lc.verdict_kappa_le_minus_one ? " <= -1 (verdict holds)"
                                                    : " > -1 (VERDICT FAILS)")
                  << "\n";
    } else {
        std::cout << "interior-vertex hypothesis fails (vertices:";
        for (int v : lc.hypothesis_violations) std::cout << " " << v;
        std::cout << "); curvature verdict withheld\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fibtype: groups of Fibonacci type G_n(m,k), their classification and"
                 " the combinatorial machinery behind it"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    int n = 0, m = 0, k = 0, p = 0, maxlen = 7;
    uint32_t max_cosets = 1000000;
    bool as_json = false;
    std::string spec, path;

    auto* c_classify = app.add_subcommand("classify", "classify G_n(m,k)");
    c_classify->add_option("n", n)->required();
    c_classify->add_option("m", m)->required();
    c_classify->add_option("k", k)->required();
    c_classify->add_flag("--json", as_json);
    c_classify->callback([&] { exit_code = cmd_classify(n, m, k, as_json); });

    auto* c_table = app.add_subcommand("table", "emit classification table rows");
    c_table->add_option("--n", spec, "single n or range lo..hi")->required();
    c_table->add_flag("--json", as_json);
    c_table->callback([&] { exit_code = cmd_table(spec, as_json); });

    auto* c_t5 = app.add_subcommand("t5", "T(5) congruence test");
    c_t5->add_option("n", n)->required();
    c_t5->add_option("m", m)->required();
    c_t5->add_option("k", k)->required();
    c_t5->callback([&] { exit_code = cmd_t5(n, m, k); });

    auto* c_t6 = app.add_subcommand("t6", "T(6) congruence test");
    c_t6->add_option("n", n)->required();
    c_t6->add_option("m", m)->required();
    c_t6->add_option("k", k)->required();
    c_t6->callback([&] { exit_code = cmd_t6(n, m, k); });

    auto* c_star = app.add_subcommand("star", "star graph analysis");
    c_star->require_subcommand(1);
    auto* c_girth = c_star->add_subcommand("girth", "girth of the star graph");
    c_girth->add_option("n", n)->required();
    c_girth->add_option("m", m)->required();
    c_girth->add_option("k", k)->required();
    c_girth->callback([&] { exit_code = cmd_star_girth(n, m, k); });
    auto* c_cycles = c_star->add_subcommand("cycles", "short cycle census");
    c_cycles->add_option("n", n)->required();
    c_cycles->add_option("m", m)->required();
    c_cycles->add_option("k", k)->required();
    c_cycles->add_option("--maxlen", maxlen, "cycle length budget (<= 12)");
    c_cycles->callback([&] { exit_code = cmd_star_cycles(n, m, k, maxlen); });
    auto* c_census = c_star->add_subcommand("census", "interior vertex label census");
    c_census->add_option("n", n)->required();
    c_census->add_option("m", m)->required();
    c_census->add_option("k", k)->required();
    c_census->add_option("p", p)->required();
    c_census->callback([&] { exit_code = cmd_star_census(n, m, k, p); });

    auto* c_ab = app.add_subcommand("ab", "abelianisation via Smith normal form");
    c_ab->add_option("n", n)->required();
    c_ab->add_option("m", m)->required();
    c_ab->add_option("k", k)->required();
    c_ab->add_flag("--json", as_json);
    c_ab->callback([&] { exit_code = cmd_ab(n, m, k, as_json); });

    auto* c_order = app.add_subcommand("order", "group order by coset enumeration");
    c_order->add_option("n", n)->required();
    c_order->add_option("m", m)->required();
    c_order->add_option("k", k)->required();
    c_order->add_option("--max-cosets", max_cosets, "table size limit")->capture_default_str();
    c_order->callback([&] { exit_code = cmd_order(n, m, k, max_cosets); });

    auto* c_cases = app.add_subcommand("cases", "case representatives for 13 <= n <= 7p");
    c_cases->add_option("p", p)->required();
    c_cases->callback([&] { exit_code = cmd_cases(p); });

    auto* c_diag = app.add_subcommand("diagram", "van Kampen diagram tools");
    c_diag->require_subcommand(1);
    auto* c_check = c_diag->add_subcommand("check", "validate a diagram file");
    c_check->add_option("file", path)->required();
    c_check->callback([&] { exit_code = cmd_diagram(path, false); });
    auto* c_audit = c_diag->add_subcommand("audit", "validate and audit curvature/lanes");
    c_audit->add_option("file", path)->required();
    c_audit->callback([&] { exit_code = cmd_diagram(path, true); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalid : kExitOk;
    } catch (const DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const LaneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return exit_code;
}
