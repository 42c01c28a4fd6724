#pragma once

#include "fibtype/abelian.hpp"
#include "fibtype/params.hpp"
#include "fibtype/stargraph.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>

namespace fibtype {

enum class FamilyKind {
    Trivial,
    FiniteCyclic,
    Fibonacci,
    Sieradski,
    GilbertHowie,  // H(n,3)
    HalfShiftGH,   // H(n, n/2+2)
    OrderP,        // k of additive order p in {3,4,5}
    GenericT6,
    TableEntry,  // named n <= 12 row outside the four families
    Unknown,
};

enum class Hyperbolicity { NonElementaryHyperbolic, NotHyperbolic, Finite, Unknown };

enum class TitsKind { Finite, VirtuallySolvable, SQUniversal, FreeSubgroupOnly, Unknown };

struct Classification {
    FamilyKind family = FamilyKind::Unknown;
    std::string name;  // F/S/H/G notation, or Z_d for cyclic verdicts
    std::optional<Int> order;  // set iff the group is finite
    Hyperbolicity hyperbolicity = Hyperbolicity::Unknown;
    TitsKind tits = TitsKind::Unknown;
    std::string tits_desc;  // e.g. "virtually Z^3"
    bool t5 = false, t6 = false;
    int order_p = 0, order_s = 0;  // for FamilyKind::OrderP
    std::string provenance;
};

struct FamilyStatus {
    Hyperbolicity hyperbolicity;
    TitsKind tits;
    std::string tits_desc;
    std::optional<Int> order;
    std::string provenance;
};

/// Per-n status of the four named families, including all small-n branches.
inline FamilyStatus family_status(FamilyKind family, int n) {
    auto fin = [](Int order, std::string prov) {
        return FamilyStatus{Hyperbolicity::Finite, TitsKind::Finite, "finite", order, std::move(prov)};
    };
    auto neh = [](std::string prov) {
        return FamilyStatus{Hyperbolicity::NonElementaryHyperbolic, TitsKind::SQUniversal,
                            "SQ-universal", std::nullopt, std::move(prov)};
    };
    auto nh_sq = [](std::string prov) {
        return FamilyStatus{Hyperbolicity::NotHyperbolic, TitsKind::SQUniversal, "SQ-universal",
                            std::nullopt, std::move(prov)};
    };
    switch (family) {
        case FamilyKind::Fibonacci:
            if (n < 2) break;
            if (n == 2) return fin(1, "F(2,2) trivial");
            if (n == 3) return fin(8, "F(2,3) = Q_8");
            if (n == 4) return fin(5, "F(2,4) = Z_5");
            if (n == 5) return fin(11, "F(2,5) = Z_11");
            if (n == 7) return fin(29, "F(2,7) = Z_29");
            if (n == 6)
                return {Hyperbolicity::NotHyperbolic, TitsKind::VirtuallySolvable,
                        "virtually Z^3", std::nullopt, "F(2,6) virtually Z^3"};
            return neh("F(2,n) non-elementary hyperbolic for n >= 8");
        case FamilyKind::Sieradski:
            if (n < 2) break;
            if (n == 2) return fin(3, "S(2,2) = Z_3");
            if (n == 3) return fin(8, "S(2,3) = Q_8");
            if (n == 4) return fin(24, "S(2,4) = SL(2,3)");
            if (n == 5) return fin(120, "S(2,5) = SL(2,5)");
            if (n == 6)
                return {Hyperbolicity::NotHyperbolic, TitsKind::VirtuallySolvable,
                        "metabelian", std::nullopt, "S(2,6) infinite metabelian, contains Z^2"};
            return nh_sq("S(2,n) not hyperbolic, SQ-universal for n >= 7");
        case FamilyKind::GilbertHowie:  // H(n,3)
            if (n < 2) break;
            if (n == 2) return fin(1, "H(2,3) trivial");
            if (n == 3) return fin(7, "H(3,3) = Z_7");
            if (n == 4) return fin(5, "H(4,3) = Z_5");
            if (n == 5) return fin(11, "H(5,3) = Z_11");
            if (n == 6) return fin(56, "H(6,3) = Z_2^3 : Z_7");
            if (n == 8) return fin(Int(295245), "H(8,3) solvable of order 3^10*5");
            if (n == 7)
                return {Hyperbolicity::NotHyperbolic, TitsKind::VirtuallySolvable,
                        "virtually Z^8", std::nullopt, "H(7,3) virtually Z^8"};
            return neh("H(n,3) non-elementary hyperbolic for n >= 9");
        case FamilyKind::HalfShiftGH:  // H(n, n/2+2), n even
            if (n < 2 || n % 2 != 0) break;
            if (n == 2) return fin(1, "H(2,3) trivial");
            if (n == 4) return fin(15, "H(4,4) = Z_15");
            if (n == 6)
                return {Hyperbolicity::NotHyperbolic, TitsKind::VirtuallySolvable,
                        "virtually Z^3", std::nullopt, "H(6,5) = F(2,6) virtually Z^3"};
            if (n == 10)
                return {Hyperbolicity::NotHyperbolic, TitsKind::FreeSubgroupOnly,
                        "contains a non-abelian free subgroup", std::nullopt,
                        "H(10,7) not hyperbolic, contains a non-abelian free subgroup"};
            return nh_sq("H(n,n/2+2) not hyperbolic, SQ-universal for even n >= 8, n != 10");
        default:
            break;
    }
    throw std::invalid_argument("family_status: family/n outside admissible range");
}

namespace detail {

struct Table1Row {
    int n;
    OrbitKey key;
    const char* name;
    int m, k;                 // representative parameters
    const char* group;        // Table "Group" column, "" when blank
    const char* order;        // decimal, "inf" or "?"
    const char* hyp;          // "Yes", "No" or "?"
    const char* tits;         // Tits column text
    FamilyKind family;
    Hyperbolicity hyperbolicity;
    TitsKind tits_kind;
    const char* provenance;
};

// All isomorphism classes of G_n(m,k), 0 < m,k < n, m != k, gcd(n,m,k) = 1,
// for 3 <= n <= 12, keyed by the canonical (A,B) orbit representative. The
// verdicts for these rows rest on external computations and are embedded as
// classification facts.
inline std::span<const Table1Row> table1() {
    using F = FamilyKind;
    using H = Hyperbolicity;
    using T = TitsKind;
    static const std::array<Table1Row, 49> rows = {{
        {3, {1, 2}, "F(2,3)", 1, 2, "Q_8", "8", "No", "finite", F::Fibonacci, H::Finite, T::Finite, "small-n table: F(2,3) = Q_8"},
        {4, {1, 2}, "F(2,4)", 1, 2, "cyclic", "5", "No", "finite", F::Fibonacci, H::Finite, T::Finite, "small-n table: F(2,4) = Z_5"},
        {4, {1, 3}, "S(2,4)", 2, 1, "SL(2,3)", "24", "No", "finite", F::Sieradski, H::Finite, T::Finite, "small-n table: S(2,4) = SL(2,3)"},
        {5, {1, 2}, "F(2,5)", 1, 2, "cyclic, T(5)", "11", "No", "finite", F::Fibonacci, H::Finite, T::Finite, "small-n table: F(2,5) = Z_11"},
        {5, {1, 4}, "S(2,5)", 2, 1, "SL(2,5)", "120", "No", "finite", F::Sieradski, H::Finite, T::Finite, "small-n table: S(2,5) = SL(2,5)"},
        {6, {1, 2}, "F(2,6)", 1, 2, "3-mfd. gp.", "inf", "No", "virtually Z^3", F::Fibonacci, H::NotHyperbolic, T::VirtuallySolvable, "small-n table: F(2,6) virtually Z^3"},
        {6, {1, 5}, "S(2,6)", 2, 1, "3-mfd. gp.", "inf", "No", "metabelian", F::Sieradski, H::NotHyperbolic, T::VirtuallySolvable, "small-n table: S(2,6) metabelian, contains Z^2"},
        {6, {1, 4}, "H(6,3)", 3, 1, "Z_2^3:Z_7", "56", "No", "finite", F::GilbertHowie, H::Finite, T::Finite, "small-n table: H(6,3) = Z_2^3 : Z_7"},
        {6, {1, 3}, "H(6,4)", 4, 1, "cyclic", "9", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: H(6,4) = Z_9"},
        {6, {2, 3}, "G_6(1,3)", 1, 3, "cyclic", "7", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: G_6(1,3) = Z_7"},
        {7, {1, 2}, "F(2,7)", 1, 2, "cyclic, T(5)", "29", "No", "finite", F::Fibonacci, H::Finite, T::Finite, "small-n table: F(2,7) = Z_29"},
        {7, {1, 6}, "S(2,7)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,7)"},
        {7, {1, 3}, "H(7,3)", 3, 1, "T(5)", "inf", "No", "virtually Z^8", F::GilbertHowie, H::NotHyperbolic, T::VirtuallySolvable, "small-n table: H(7,3) virtually Z^8"},
        {8, {1, 2}, "F(2,8)", 1, 2, "3-mfd. gp.", "inf", "Yes", "SQ-univ.", F::Fibonacci, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: F(2,8)"},
        {8, {1, 7}, "S(2,8)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,8)"},
        {8, {1, 6}, "H(8,3)", 3, 1, "solvable", "295245", "No", "finite", F::GilbertHowie, H::Finite, T::Finite, "small-n table: H(8,3) of order 3^10*5"},
        {8, {1, 5}, "H(8,4)", 4, 1, "T(6)", "inf", "No", "SQ-univ.", F::TableEntry, H::NotHyperbolic, T::SQUniversal, "small-n table: H(8,4) not hyperbolic, SQ-universal"},
        {8, {1, 4}, "H(8,5)", 5, 1, "cyclic", "17", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: H(8,5) = Z_17"},
        {8, {1, 3}, "H(8,6)", 6, 1, "T(6)", "inf", "No", "SQ-univ.", F::TableEntry, H::NotHyperbolic, T::SQUniversal, "small-n table: H(8,6) = H(8,8/2+2)"},
        {9, {1, 2}, "F(2,9)", 1, 2, "T(5)", "inf", "Yes", "SQ-univ.", F::Fibonacci, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: F(2,9)"},
        {9, {1, 8}, "S(2,9)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,9)"},
        {9, {1, 4}, "H(9,3)", 3, 1, "T(5)", "inf", "Yes", "SQ-univ.", F::GilbertHowie, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(9,3)"},
        {9, {1, 6}, "H(9,4)", 4, 1, "", "?", "?", "?", F::TableEntry, H::Unknown, T::Unknown, "small-n table: H(9,4) open (not hyperbolic if torsion-free)"},
        {9, {1, 3}, "H(9,7)", 7, 1, "", "?", "?", "?", F::TableEntry, H::Unknown, T::Unknown, "small-n table: H(9,7) open"},
        {10, {1, 2}, "F(2,10)", 1, 2, "3-mfd. gp., T(5)", "inf", "Yes", "SQ-univ.", F::Fibonacci, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: F(2,10)"},
        {10, {1, 9}, "S(2,10)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,10)"},
        {10, {1, 8}, "H(10,3)", 3, 1, "T(5)", "inf", "Yes", "SQ-univ.", F::GilbertHowie, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(10,3)"},
        {10, {1, 4}, "H(10,7)", 7, 1, "T(5)", "inf", "No", "Free subgroup", F::TableEntry, H::NotHyperbolic, T::FreeSubgroupOnly, "small-n table: H(10,7) contains BS(1,-1) and a free subgroup"},
        {10, {1, 3}, "H(10,4)", 4, 1, "T(6)", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(10,4)"},
        {10, {1, 6}, "H(10,5)", 5, 1, "T(5)", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(10,5)"},
        {10, {1, 5}, "H(10,6)", 6, 1, "cyclic", "33", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: H(10,6) = Z_33"},
        {10, {2, 5}, "G_10(1,6)", 1, 6, "cyclic", "31", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: G_10(1,6) = Z_31"},
        {11, {1, 2}, "F(2,11)", 1, 2, "T(5)", "inf", "Yes", "SQ-univ.", F::Fibonacci, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: F(2,11)"},
        {11, {1, 10}, "S(2,11)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,11)"},
        {11, {1, 5}, "H(11,3)", 3, 1, "T(5)", "inf", "Yes", "SQ-univ.", F::GilbertHowie, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(11,3)"},
        {11, {1, 7}, "H(11,4)", 4, 1, "T(6)", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(11,4)"},
        {11, {1, 3}, "H(11,8)", 8, 1, "T(6)", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(11,8)"},
        {12, {1, 2}, "F(2,12)", 1, 2, "3-mfd. gp., T(5)", "inf", "Yes", "SQ-univ.", F::Fibonacci, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: F(2,12)"},
        {12, {1, 11}, "S(2,12)", 2, 1, "3-mfd. gp.", "inf", "No", "SQ-univ.", F::Sieradski, H::NotHyperbolic, T::SQUniversal, "small-n table: S(2,12)"},
        {12, {1, 10}, "H(12,3)", 3, 1, "T(5)", "inf", "Yes", "SQ-univ.", F::GilbertHowie, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(12,3)"},
        {12, {1, 5}, "H(12,8)", 8, 1, "T(6)", "inf", "No", "SQ-univ.", F::TableEntry, H::NotHyperbolic, T::SQUniversal, "small-n table: H(12,8) = H(12,12/2+2)"},
        {12, {1, 6}, "H(12,7)", 7, 1, "cyclic", "65", "No", "finite", F::FiniteCyclic, H::Finite, T::Finite, "small-n table: H(12,7) = Z_65"},
        {12, {1, 7}, "H(12,6)", 6, 1, "T(6)", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(12,6)"},
        {12, {1, 8}, "H(12,5)", 5, 1, "", "inf", "No", "SQ-univ.", F::TableEntry, H::NotHyperbolic, T::SQUniversal, "small-n table: H(12,5) contains Z^2, large"},
        {12, {1, 9}, "H(12,4)", 4, 1, "", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(12,4)"},
        {12, {1, 4}, "H(12,9)", 9, 1, "", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(12,9)"},
        {12, {1, 3}, "H(12,10)", 10, 1, "", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: H(12,10)"},
        {12, {2, 3}, "G_12(1,3)", 1, 3, "", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: G_12(1,3)"},
        {12, {3, 4}, "G_12(1,9)", 1, 9, "", "inf", "Yes", "SQ-univ.", F::TableEntry, H::NonElementaryHyperbolic, T::SQUniversal, "small-n table: G_12(1,9)"},
    }};
    return rows;
}

inline const Table1Row* table1_lookup(int n, OrbitKey key) {
    for (const auto& r : table1())
        if (r.n == n && r.key == key) return &r;
    return nullptr;
}

inline TitsKind tits_of_row(const Table1Row& r) { return r.tits_kind; }

}  // namespace detail

/// Order 2^{n/2} - (-1)^{m + n/2} of the finite cyclic case A = n/2 or B = n/2.
inline Int cyclic_order_half(int n, int m) {
    Int o = pow2(n / 2);
    if ((m + n / 2) % 2 == 0) o -= 1;
    else o += 1;
    return o;
}

/// Order 2^n - 1 of the finite cyclic case A = B (i.e. m = 0).
inline Int cyclic_order_full(int n) { return pow2(n) - 1; }

/// The classification of G_n(m,k): family, finiteness and order,
/// hyperbolicity, and the Tits-alternative verdict.
inline Classification classify(int n, int m, int k) {
    if (n < 2) throw std::invalid_argument("classify: n must be >= 2");
    if (m < 0 || m >= n || k < 0 || k >= n)
        throw std::invalid_argument("classify: m,k must lie in [0,n)");
    const FibParams p = derive(n, m, k);
    if (p.decomposable())
        throw std::invalid_argument(
            "classify: gcd(n,m,k) > 1, group decomposes as a free product; reduce parameters");

    Classification c;
    if (p.m > 0 && p.k > 0 && p.m != p.k) {
        c.t5 = is_T5(n, m, k);
        c.t6 = is_T6_profile(n, p.A, p.B);
    }

    if (p.a_zero() || p.b_zero()) {
        c.family = FamilyKind::Trivial;
        c.name = "1";
        c.order = 1;
        c.hyperbolicity = Hyperbolicity::Finite;
        c.tits = TitsKind::Finite;
        c.tits_desc = "finite";
        c.provenance = "trivial group: A = 0 or B = 0 mod n";
        return c;
    }

    if (p.A == p.B) {  // m = 0
        c.family = FamilyKind::FiniteCyclic;
        c.order = cyclic_order_full(n);
        c.name = "Z_" + c.order->str();
        c.hyperbolicity = Hyperbolicity::Finite;
        c.tits = TitsKind::Finite;
        c.tits_desc = "finite";
        c.provenance = "A = B: cyclic of order 2^n - 1";
        return c;
    }

    if (n <= 12) {
        const auto* row = detail::table1_lookup(n, canonicalize(p));
        if (!row)
            throw std::logic_error("classify: orbit key missing from the n <= 12 table");
        c.family = row->family;
        c.name = row->name;
        if (std::string(row->order) != "inf" && std::string(row->order) != "?")
            c.order = Int(row->order);
        c.hyperbolicity = row->hyperbolicity;
        c.tits = detail::tits_of_row(*row);
        c.tits_desc = row->tits;
        c.provenance = row->provenance;
        return c;
    }

    // n >= 13: the congruence classification, clauses applied in order.
    const bool a_half = mod(2LL * p.A, n) == 0;  // A = n/2 (A != 0 known)
    const bool b_half = mod(2LL * p.B, n) == 0;
    if (a_half || b_half) {
        c.family = FamilyKind::FiniteCyclic;
        c.order = cyclic_order_half(n, m);
        c.name = "Z_" + c.order->str();
        c.hyperbolicity = Hyperbolicity::Finite;
        c.tits = TitsKind::Finite;
        c.tits_desc = "finite";
        c.provenance = "A = n/2 or B = n/2: cyclic of order 2^(n/2) - (-1)^(m + n/2)";
        return c;
    }
    if (mod(p.A + p.B, n) == 0) {
        c.family = FamilyKind::Sieradski;
        c.name = "S(2," + std::to_string(n) + ")";
        c.hyperbolicity = Hyperbolicity::NotHyperbolic;
        c.tits = TitsKind::SQUniversal;
        c.tits_desc = "SQ-universal";
        c.provenance = "A + B = 0: Sieradski group, not hyperbolic, SQ-universal";
        return c;
    }
    if (n % 2 == 0 && mod(p.A + p.B - n / 2, n) == 0) {
        c.family = FamilyKind::HalfShiftGH;
        c.name = "H(" + std::to_string(n) + "," + std::to_string(n / 2 + 2) + ")";
        c.hyperbolicity = Hyperbolicity::NotHyperbolic;
        c.tits = TitsKind::SQUniversal;
        c.tits_desc = "SQ-universal";
        c.provenance = "A + B = n/2: H(n, n/2+2), not hyperbolic, SQ-universal";
        return c;
    }
    // remaining case: non-elementary hyperbolic; refine the family name
    c.hyperbolicity = Hyperbolicity::NonElementaryHyperbolic;
    c.tits = TitsKind::SQUniversal;
    c.tits_desc = "SQ-universal";
    const int ord_a = additive_order(p.A, n);
    const int ord_b = additive_order(p.B, n);
    if (ord_a >= 3 && ord_a <= 5) {
        c.family = FamilyKind::OrderP;
        c.order_p = ord_a;
        c.order_s = p.A / (n / ord_a);
        c.name = "G_" + std::to_string(n) + "(" + std::to_string(m) + "," + std::to_string(k) + ")";
        c.provenance = "A = sn/p with p in {3,4,5}: non-elementary hyperbolic";
    } else if (ord_b >= 3 && ord_b <= 5) {
        c.family = FamilyKind::OrderP;
        c.order_p = ord_b;
        c.order_s = p.B / (n / ord_b);
        c.name = "G_" + std::to_string(n) + "(" + std::to_string(m) + "," + std::to_string(k) + ")";
        c.provenance = "B = sn/p with p in {3,4,5}: non-elementary hyperbolic (via swap)";
    } else if (mod(p.A - 2LL * p.B, n) == 0 || mod(p.B - 2LL * p.A, n) == 0) {
        c.family = FamilyKind::Fibonacci;
        c.name = "F(2," + std::to_string(n) + ")";
        c.provenance = "A = 2B or B = 2A: Fibonacci group, non-elementary hyperbolic for n >= 8";
    } else if (mod(p.A + 2LL * p.B, n) == 0 || mod(p.B + 2LL * p.A, n) == 0) {
        c.family = FamilyKind::GilbertHowie;
        c.name = "H(" + std::to_string(n) + ",3)";
        c.provenance = "A + 2B = 0 or B + 2A = 0: H(n,3), non-elementary hyperbolic for n >= 9";
    } else {
        c.family = FamilyKind::GenericT6;
        c.name = "G_" + std::to_string(n) + "(" + std::to_string(m) + "," + std::to_string(k) + ")";
        c.provenance = "T(6) congruence profile: non-elementary hyperbolic";
    }
    return c;
}

/// Which clause of the n >= 13 classification fires (precedence a..e).
inline char classification_clause(int n, int A, int B) {
    if (mod(A - B, n) == 0) return 'a';
    if ((mod(2LL * A, n) == 0 && A != 0) || (mod(2LL * B, n) == 0 && B != 0)) return 'b';
    if (mod(A + B, n) == 0) return 'c';
    if (n % 2 == 0 && mod(A + B - n / 2, n) == 0) return 'd';
    return 'e';
}

}  // namespace fibtype
