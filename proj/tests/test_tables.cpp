#include <doctest.h>

#include "deephole/report_json.hpp"
#include "deephole/tables.hpp"

using namespace deephole;

TEST_CASE("reference table 1") {
    TableReport r = reproduce_table(ReferenceTable::table1);
    REQUIRE(r.rows.size() == 3);
    for (const auto& row : r.rows) {
        CHECK(*row.interpolant_match);
        CHECK(row.v_is_codeword);
        CHECK(row.not_deep_hole);
        CHECK(row.exact_distance == 4);
    }
    CHECK(r.rows[0].d_u_v == 4);
    CHECK(r.rows[0].pass);
    CHECK(r.rows[2].d_u_v == 4);
    CHECK(r.rows[2].pass);

    // row 2's listed v is a duplicate of row 3's and sits at distance 7
    // from row 2's word; the reproduction flags the listed pair distance
    // as inconsistent rather than patching it
    CHECK(r.rows[1].d_u_v == 7);
    CHECK(r.rows[1].listed_d_u_v == 4);
    CHECK_FALSE(r.rows[1].d_u_v_match);
    CHECK_FALSE(r.rows[1].pass);
    CHECK_FALSE(r.pass);
    CHECK_THROWS_AS((void)reproduce_table_checked(ReferenceTable::table1), RowMismatch);
}

TEST_CASE("reference table 2") {
    TableReport r = reproduce_table(ReferenceTable::table2);
    REQUIRE(r.rows.size() == 4);
    std::vector<uint32_t> weights;
    for (const auto& row : r.rows) {
        CHECK(row.pass);
        weights.push_back(*row.weight);
        CHECK(row.exact_distance <= *row.weight);
        CHECK(row.not_deep_hole);
    }
    CHECK(weights == std::vector<uint32_t>{4, 3, 3, 4});
    CHECK(r.pass);
}

TEST_CASE("reference table 3") {
    TableReport r = reproduce_table(ReferenceTable::table3);
    REQUIRE(r.rows.size() == 6);
    for (const auto& row : r.rows) {
        CHECK(*row.interpolant_match);
        CHECK(row.v_is_codeword);
        CHECK(row.not_deep_hole);
    }
    // row 3's listed pair distance is 4 but the listed pair sits at 3
    CHECK(r.rows[2].d_u_v == 3);
    CHECK_FALSE(r.rows[2].d_u_v_match);
    CHECK_FALSE(r.pass);

    // row 4's witness is the zero word, so d(u, 0) = w(u) = 4
    CHECK(r.rows[3].codeword_v == std::vector<uint32_t>(10, 0));
    CHECK(r.rows[3].d_u_v == 4);
    CHECK(r.rows[3].pass);

    std::vector<uint32_t> exact;
    for (const auto& row : r.rows) exact.push_back(row.exact_distance);
    CHECK(exact == std::vector<uint32_t>{3, 4, 3, 3, 4, 3});
}

TEST_CASE("reference table 4 and the dense-interpolant word") {
    TableReport r4 = reproduce_table(ReferenceTable::table4);
    REQUIRE(r4.rows.size() == 4);
    std::vector<uint32_t> duv;
    for (const auto& row : r4.rows) {
        CHECK(row.pass);
        duv.push_back(row.d_u_v);
    }
    CHECK(duv == std::vector<uint32_t>{4, 4, 4, 3});
    CHECK(r4.pass);

    TableReport re = reproduce_table(ReferenceTable::example424);
    REQUIRE(re.rows.size() == 1);
    CHECK(re.rows[0].d_u_v == 4);
    CHECK(re.rows[0].exact_distance == 3);
    CHECK(re.rows[0].pass);
    CHECK(re.pass);
    CHECK_NOTHROW((void)reproduce_table_checked(ReferenceTable::example424));
}

TEST_CASE("table reports serialize to json and csv") {
    TableReport r = reproduce_table(ReferenceTable::example424);
    json j = to_json(r);
    CHECK(j["table"] == "e424");
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0]["pass"] == true);
    CHECK(j.contains("timing"));
    CHECK_FALSE(strip_timing(j).contains("timing"));

    std::string csv = to_csv(r);
    CHECK(csv.find("received_word,interpolant,codeword_v,d_u_v,exact_distance,is_deep_hole") !=
          std::string::npos);
    CHECK(csv.find("(9,10,4,9,10,0,0,0,0,0)") != std::string::npos);

    CHECK(reference_table_from_name("e424") == ReferenceTable::example424);
    CHECK(reference_table_from_name("2") == ReferenceTable::table2);
    CHECK_THROWS_AS((void)reference_table_from_name("9"), Error);
}
