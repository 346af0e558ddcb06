#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "octachain/report.hpp"

using namespace octachain;

namespace {

std::string run_table(const std::string& which, int n_max, OutputFormat fmt) {
    std::ostringstream out;
    REQUIRE(cmd_table(which, n_max, fmt, out) == 0);
    return out.str();
}

}  // namespace

TEST_CASE("table kf") {
    const std::string single = run_table("kf", 1, OutputFormat::Table);
    CHECK(single.find("18.00") != std::string::npos);

    const std::string full = run_table("kf", 20, OutputFormat::Table);
    CHECK(full.find("24639.33") != std::string::npos);  // n=17
    CHECK(full.find("39487.33") != std::string::npos);  // n=20

    // determinism
    CHECK(full == run_table("kf", 20, OutputFormat::Table));
}

TEST_CASE("table tau") {
    const std::string full = run_table("tau", 8, OutputFormat::Table);
    CHECK(full.find("210119944214597861376") != std::string::npos);  // n=7
    CHECK(full.find("161372117156811157536768") != std::string::npos);
}

TEST_CASE("table formats") {
    const std::string csv = run_table("kfstar", 2, OutputFormat::Csv);
    CHECK(csv == "n,exact,display\n1,213,213.00\n2,1118,1118.00\n");

    const auto doc = nlohmann::json::parse(run_table("kf", 2, OutputFormat::Json));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[1]["exact"] == "238/3");
    CHECK(doc[1]["display"] == "79.33");
}

TEST_CASE("table usage errors") {
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_table("bogus", 3, OutputFormat::Table, out), UsageError);
    CHECK_THROWS_AS(cmd_table("kf", 0, OutputFormat::Table, out), UsageError);
}

TEST_CASE("verify passes with WARN lines for the two bad cubics") {
    std::ostringstream out;
    const int rc = cmd_verify(2, out);
    CHECK(rc == 0);
    const std::string text = out.str();
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("WARN n=1 closed_form:wiener_claimed") != std::string::npos);
    CHECK(text.find("WARN n=1 closed_form:gutman_claimed") != std::string::npos);
    CHECK(text.find("corrected fit: 18n^3+18n^2+9n+1") != std::string::npos);
    CHECK(text.find("corrected fit: 338n^3+78n^2+133n-7") != std::string::npos);
    // WARN is reserved for exactly those two formulas
    size_t warns = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("WARN", 0) == 0) {
            ++warns;
            const bool known = line.find("wiener_claimed") != std::string::npos ||
                               line.find("gutman_claimed") != std::string::npos;
            CHECK(known);
        }
    }
    CHECK(warns == 4);  // two formulas, two values of n
}

TEST_CASE("verify fails loudly on an injected fault") {
    std::ostringstream out;
    CHECK(cmd_verify(1, out, /*inject_fault=*/true) == 1);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("resistance command") {
    std::ostringstream out;
    CHECK(cmd_resistance(1, "1", "1'", out) == 0);
    CHECK(out.str() == "r(1, 1') = 1/2 = 0.500000\n");

    std::ostringstream ignored;
    CHECK_THROWS_AS(cmd_resistance(1, "2", "2", ignored), UsageError);
    CHECK_THROWS_AS(cmd_resistance(1, "5", "1", ignored), UsageError);
    CHECK_THROWS_AS(cmd_resistance(0, "1", "2", ignored), UsageError);
}

TEST_CASE("export csv") {
    std::ostringstream out;
    REQUIRE(cmd_export(2, OutputFormat::Csv, out) == 0);
    std::istringstream lines(out.str());
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "n,kf_num,kf_den,kf_2dp,kfstar_num,kfstar_den,kfstar_2dp,tau,wiener,gutman");
    CHECK(row1 == "1,18,1,18.00,213,1,213.00,1024,46,542");
    CHECK(row2.find("786432") != std::string::npos);
    CHECK(row2.rfind("2,238,3,79.33,", 0) == 0);
}

TEST_CASE("export json round-trips") {
    std::ostringstream out;
    REQUIRE(cmd_export(3, OutputFormat::Json, out) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[0]["kf_num"] == "18");
    CHECK(doc[0]["tau"] == "1024");
    CHECK(doc[0]["wiener"] == 46);
    CHECK(doc[2]["tau"] == "603979776");
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("ratio command") {
    std::ostringstream out;
    REQUIRE(cmd_ratio(1, out) == 0);
    const std::string text = out.str();
    CHECK(text.find("9/23") != std::string::npos);
    std::ostringstream again;
    cmd_ratio(1, again);
    CHECK(text == again.str());
}
