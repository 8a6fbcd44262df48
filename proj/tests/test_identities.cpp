#include <doctest.h>

#include "errsumlab/identities.hpp"
#include "errsumlab/rational.hpp"

using namespace errsum;

TEST_CASE("registry contents and statuses") {
    std::vector<std::string> ids;
    for (const auto& ident : registry()) ids.push_back(ident.id);
    std::vector<std::string> expect = {
        "eq1_main",   "thm3_f1",     "thm3_f2",         "cor4_e",
        "cor4_epow",  "cor5_closed", "eq2_helper",      "eq2_easier",
        "eq3_othere", "eq4_otherpow", "elsner_sqrt7",   "elsner_metallic",
        "elsner_golden", "hetyei_cf", "conj_cf",
    };
    CHECK(ids == expect);

    for (const auto& ident : registry()) {
        bool empirical = ident.id == "hetyei_cf" || ident.id == "conj_cf";
        CHECK(ident.status ==
              (empirical ? IdentityStatus::Empirical : IdentityStatus::Proved));
        CHECK(ident.default_digits == (empirical ? 30 : 50));
        CHECK(!ident.description.empty());
    }
}

TEST_CASE("default parameter grids") {
    const Identity* f1 = find_identity("thm3_f1");
    REQUIRE(f1 != nullptr);
    auto grid = default_param_grid(*f1);
    CHECK(grid.size() == 9);  // {2,3,4} x {1,2,3}
    CHECK(grid.front() == Params{{"l", 2}, {"s", 1}});
    CHECK(grid.back() == Params{{"l", 4}, {"s", 3}});

    const Identity* plain = find_identity("cor4_e");
    REQUIRE(plain != nullptr);
    auto g2 = default_param_grid(*plain);
    REQUIRE(g2.size() == 1);
    CHECK(g2.front().empty());
}

TEST_CASE("parameter validation") {
    const Identity* f1 = find_identity("thm3_f1");
    REQUIRE(f1 != nullptr);
    CHECK_NOTHROW(validate_params(*f1, Params{{"l", 2}, {"s", 1}}));
    // l = 1 collapses the F1 pattern (a zero quotient) and is rejected
    CHECK_THROWS_AS(validate_params(*f1, Params{{"l", 1}, {"s", 1}}), DomainError);
    CHECK_THROWS_AS(validate_params(*f1, Params{{"l", 2}}), DomainError);
    CHECK_THROWS_AS(validate_params(*f1, Params{{"l", 2}, {"s", 1}, {"x", 1}}),
                    DomainError);
    CHECK_THROWS_AS(verify("no_such_identity", {}, Precision(10)), DomainError);
}

TEST_CASE("verify a few entries at modest precision") {
    for (const char* id : {"cor4_e", "eq2_helper", "elsner_golden"}) {
        IdentityReport rep = verify(id, {}, Precision(20));
        CAPTURE(id);
        CHECK(rep.pass);
        CHECK(rep.agreed_digits >= 20);
        CHECK(rep.lhs.intersects(rep.rhs));
        CHECK(rep.elapsed_ms >= 0.0);
    }
    IdentityReport f1 = verify("thm3_f1", Params{{"l", 2}, {"s", 1}}, Precision(20));
    CHECK(f1.pass);
    IdentityReport cor5 = verify("cor5_closed", Params{{"l", 2}, {"s", 3}}, Precision(20));
    CHECK(cor5.pass);
}

TEST_CASE("empirical identities pass and carry their status") {
    IdentityReport h = verify("hetyei_cf", {}, Precision(20));
    CHECK(h.pass);
    CHECK(h.status == IdentityStatus::Empirical);
    IdentityReport c = verify("conj_cf", {}, Precision(20));
    CHECK(c.pass);
    CHECK(c.status == IdentityStatus::Empirical);
}

TEST_CASE("agreed digits grow with the requested precision") {
    IdentityReport lo = verify("cor4_e", {}, Precision(15));
    IdentityReport hi = verify("cor4_e", {}, Precision(30));
    CHECK(lo.pass);
    CHECK(hi.pass);
    CHECK(hi.agreed_digits >= lo.agreed_digits);
}

TEST_CASE("json report schema") {
    IdentityReport rep = verify("elsner_golden", {}, Precision(12));
    std::string with = report_to_json(rep, true);
    std::string without = report_to_json(rep, false);
    CHECK(with.find("\"id\":\"elsner_golden\"") != std::string::npos);
    CHECK(with.find("\"digits\":12") != std::string::npos);
    CHECK(with.find("\"pass\":true") != std::string::npos);
    CHECK(with.find("\"status\":\"proved\"") != std::string::npos);
    CHECK(with.find("\"elapsed_ms\":") != std::string::npos);
    CHECK(without.find("\"elapsed_ms\":") == std::string::npos);
    CHECK(with.find("1.618033988749") != std::string::npos);
    // field order is fixed
    CHECK(with.find("\"id\"") < with.find("\"params\""));
    CHECK(with.find("\"params\"") < with.find("\"digits\""));
    CHECK(with.find("\"lhs\"") < with.find("\"rhs\""));
    CHECK(with.find("\"rhs\"") < with.find("\"agreed_digits\""));
    CHECK(with.find("\"agreed_digits\"") < with.find("\"pass\""));
}

TEST_CASE("status names") {
    CHECK(std::string(status_name(IdentityStatus::Proved)) == "proved");
    CHECK(std::string(status_name(IdentityStatus::Empirical)) == "empirical");
}
