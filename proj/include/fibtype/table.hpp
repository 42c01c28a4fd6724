#pragma once

#include "fibtype/classify.hpp"

#include <json.hpp>

#include <sstream>

namespace fibtype {

/// One row of the classification tables: a named isomorphism-class
/// representative for n <= 12, or a congruence family for n >= 13.
struct ReportRow {
    int n = 0;
    std::string congruence;  // empty for the n <= 12 rows
    std::string name;        // F/S/H/G notation (or the group column for families)
    std::string group;       // descriptive column ("cyclic", "T(6)", ...)
    std::string order;       // decimal, "inf", "?" or "-"
    std::string hyp;         // "Yes", "No" or "?"
    std::string tits;
    int m = -1, k = -1;  // representative parameters when applicable

    friend bool operator==(const ReportRow&, const ReportRow&) = default;

    std::string to_text() const {
        std::ostringstream os;
        if (congruence.empty())
            os << n << " | " << name << " | " << group << " | " << order << " | " << hyp
               << " | " << tits;
        else
            os << congruence << " | " << group << " | " << hyp << " | " << tits;
        return os.str();
    }
};

inline void to_json(nlohmann::json& j, const ReportRow& r) {
    j = {{"n", r.n},     {"congruence", r.congruence}, {"name", r.name},
         {"group", r.group}, {"order", r.order},       {"hyp", r.hyp},
         {"tits", r.tits},   {"m", r.m},               {"k", r.k}};
}

inline void from_json(const nlohmann::json& j, ReportRow& r) {
    j.at("n").get_to(r.n);
    j.at("congruence").get_to(r.congruence);
    j.at("name").get_to(r.name);
    j.at("group").get_to(r.group);
    j.at("order").get_to(r.order);
    j.at("hyp").get_to(r.hyp);
    j.at("tits").get_to(r.tits);
    j.at("m").get_to(r.m);
    j.at("k").get_to(r.k);
}

/// Table rows for one n: the isomorphism classes for 3 <= n <= 12, or the
/// congruence families for n >= 13 (the two n/2 rows are omitted for odd n).
inline std::vector<ReportRow> table_rows(int n) {
    std::vector<ReportRow> rows;
    if (n >= 3 && n <= 12) {
        for (const auto& r : detail::table1()) {
            if (r.n != n) continue;
            rows.push_back({n, "", r.name, r.group, r.order, r.hyp, r.tits, r.m, r.k});
        }
        return rows;
    }
    if (n < 13) throw std::invalid_argument("table_rows: supported for n >= 3");

    auto add = [&](std::string cong, std::string group, std::string hyp, std::string tits) {
        ReportRow r;
        r.n = n;
        r.congruence = std::move(cong);
        r.group = std::move(group);
        r.hyp = std::move(hyp);
        r.tits = std::move(tits);
        r.order = "-";
        rows.push_back(std::move(r));
    };
    const bool even = n % 2 == 0;
    if (even)
        add("B=n/2 or A=n/2",
            "Z_" + cyclic_order_half(n, 0).str() + " or Z_" + cyclic_order_half(n, 1).str(),
            "No", "finite");
    add("B=sn/p or A=sn/p, (s,p)=1, p in {3,4,5}", "", "Yes", "SQ-univ.");
    add("A+B=0", "S(2," + std::to_string(n) + ")", "No", "SQ-univ.");
    add("A-B=0", "Z_" + cyclic_order_full(n).str(), "No", "finite");
    add("A-2B=0 or B-2A=0", "F(2," + std::to_string(n) + "), T(5)", "Yes", "SQ-univ.");
    add("A+2B=0 or B+2A=0", "H(" + std::to_string(n) + ",3), T(5)", "Yes", "SQ-univ.");
    if (even)
        add("A+B=n/2", "H(" + std::to_string(n) + "," + std::to_string(n / 2 + 2) + "), T(6)",
            "No", "SQ-univ.");
    add("none of the above", "T(6)", "Yes", "SQ-univ.");
    return rows;
}

// ---------------------------------------------------------------------------
// Classification serialization (line record and JSON)
// ---------------------------------------------------------------------------

inline const char* to_string(Hyperbolicity h) {
    switch (h) {
        case Hyperbolicity::NonElementaryHyperbolic: return "non-elementary hyperbolic";
        case Hyperbolicity::NotHyperbolic: return "not hyperbolic";
        case Hyperbolicity::Finite: return "finite";
        case Hyperbolicity::Unknown: return "unknown";
    }
    return "?";
}

inline const char* to_string(TitsKind t) {
    switch (t) {
        case TitsKind::Finite: return "finite";
        case TitsKind::VirtuallySolvable: return "virtually solvable";
        case TitsKind::SQUniversal: return "SQ-universal";
        case TitsKind::FreeSubgroupOnly: return "free subgroup";
        case TitsKind::Unknown: return "unknown";
    }
    return "?";
}

inline const char* to_string(FamilyKind f) {
    switch (f) {
        case FamilyKind::Trivial: return "trivial";
        case FamilyKind::FiniteCyclic: return "finite-cyclic";
        case FamilyKind::Fibonacci: return "fibonacci";
        case FamilyKind::Sieradski: return "sieradski";
        case FamilyKind::GilbertHowie: return "gilbert-howie";
        case FamilyKind::HalfShiftGH: return "half-shift";
        case FamilyKind::OrderP: return "order-p";
        case FamilyKind::GenericT6: return "generic-t6";
        case FamilyKind::TableEntry: return "table-entry";
        case FamilyKind::Unknown: return "unknown";
    }
    return "?";
}

inline std::string classification_text(int n, int m, int k, const Classification& c) {
    std::ostringstream os;
    os << "G_" << n << "(" << m << "," << k << ") = " << c.name << " [" << to_string(c.family)
       << "]\n";
    os << "  order: " << (c.order ? c.order->str() : (c.hyperbolicity == Hyperbolicity::Unknown
                                                          ? std::string("?")
                                                          : std::string("infinite")))
       << "\n";
    os << "  hyperbolicity: " << to_string(c.hyperbolicity) << "\n";
    os << "  Tits: " << to_string(c.tits);
    if (!c.tits_desc.empty() && c.tits_desc != to_string(c.tits)) os << " (" << c.tits_desc << ")";
    os << "\n";
    os << "  T(5): " << (c.t5 ? "yes" : "no") << "  T(6): " << (c.t6 ? "yes" : "no") << "\n";
    os << "  provenance: " << c.provenance << "\n";
    return os.str();
}

inline nlohmann::json classification_json(int n, int m, int k, const Classification& c) {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["k"] = k;
    j["family"] = to_string(c.family);
    j["name"] = c.name;
    if (c.order) j["order"] = c.order->str();
    else j["order"] = nullptr;
    j["hyperbolicity"] = to_string(c.hyperbolicity);
    j["tits"] = to_string(c.tits);
    j["tits_desc"] = c.tits_desc;
    j["t5"] = c.t5;
    j["t6"] = c.t6;
    if (c.family == FamilyKind::OrderP) {
        j["p"] = c.order_p;
        j["s"] = c.order_s;
    }
    j["provenance"] = c.provenance;
    return j;
}

}  // namespace fibtype
