#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonres/report.hpp"
#include "ribbonres/suites.hpp"
#include "ribbonres/sympoly.hpp"

using namespace ribbonres;

TEST_CASE("report serialization") {
    Report rep;
    CheckResult a;
    a.check = "demo";
    a.anchor = "a, \"quoted\" anchor";
    a.params = json{{"d", 2}};
    a.expected = 5;
    a.computed = 5;
    a.pass = true;
    a.millis = 17;
    rep.add(a);

    json j = rep.to_json(true);
    CHECK(j.size() == 1);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["millis"] == 17);
    json j0 = rep.to_json(false);
    CHECK(j0[0]["millis"] == 0);

    std::string csv = rep.to_csv(false);
    CHECK(csv.find("demo") != std::string::npos);
    CHECK(csv.find("\"a, \"\"quoted\"\" anchor\"") != std::string::npos);
    // byte-identical across runs once timing is suppressed
    CHECK(csv == rep.to_csv(false));
}

TEST_CASE("ring spec parsing") {
    CHECK(CoefficientRing::parse("q").tag == RingTag::rationals);
    CHECK(CoefficientRing::parse("z").tag == RingTag::integers);
    auto f5 = CoefficientRing::parse("fp:5");
    CHECK(f5.tag == RingTag::prime_field);
    CHECK(f5.p == 5);
    CHECK_THROWS_AS(CoefficientRing::parse("fp:4"), UsageError);
    CHECK_THROWS_AS(CoefficientRing::parse("gf8"), UsageError);
    CHECK(f5.str() == "fp:5");
}

TEST_CASE("composition enumeration for the grids") {
    auto of4 = suites::compositions_of(4);
    CHECK(of4.size() == 8);  // 2^(4-1)
    auto upto3 = suites::compositions_up_to(3);
    CHECK(upto3.size() == 1 + 2 + 4);
    for (auto& c : of4) {
        int s = 0;
        for (int x : c) s += x;
        CHECK(s == 4);
    }
}

TEST_CASE("restricted suite slices pass") {
    suites::SuiteOptions opt;
    opt.only_n = 2;
    opt.only_ring = CoefficientRing::prime_field(2);
    CHECK(suites::kernel_lemma(opt).all_pass());
    CHECK(suites::generating_identity(opt).all_pass());
}
