#include "fibtype/table.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fibtype;
using nlohmann::json;

TEST_CASE("row counts per n") {
    CHECK(table_rows(3).size() == 1);
    CHECK(table_rows(8).size() == 6);
    CHECK(table_rows(11).size() == 5);
    CHECK(table_rows(12).size() == 12);
    CHECK(table_rows(20).size() == 8);  // the congruence table
    CHECK(table_rows(13).size() == 6);  // odd n: the two n/2 rows are vacuous
    CHECK_THROWS_AS(table_rows(2), std::invalid_argument);
}

TEST_CASE("table rows round-trip through json") {
    for (int n : {3, 6, 8, 9, 10, 12, 13, 20}) {
        for (const ReportRow& r : table_rows(n)) {
            json j = r;
            ReportRow back = j.get<ReportRow>();
            CHECK(back == r);
        }
    }
}

TEST_CASE("congruence rows carry concrete orders") {
    auto rows = table_rows(20);
    CHECK(rows[0].congruence == "B=n/2 or A=n/2");
    CHECK(rows[0].group == "Z_1023 or Z_1025");
    bool has_full = false;
    for (const auto& r : rows)
        if (r.congruence == "A-B=0") {
            CHECK(r.group == "Z_1048575");  // 2^20 - 1
            has_full = true;
        }
    CHECK(has_full);
}

TEST_CASE("classification serialization round trips through json") {
    for (auto [n, m, k] : {std::tuple{13, 2, 1}, {9, 4, 1}, {16, 1, 8}, {15, 1, 5}, {6, 1, 2}}) {
        Classification c = classify(n, m, k);
        json j = classification_json(n, m, k, c);
        CHECK(j["name"] == c.name);
        CHECK(j["hyperbolicity"] == to_string(c.hyperbolicity));
        CHECK(j["tits"] == to_string(c.tits));
        if (c.order) CHECK(j["order"] == c.order->str());
        json reparsed = json::parse(j.dump());
        CHECK(reparsed == j);
    }
}
