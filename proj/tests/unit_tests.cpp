#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "egr/dataset.hpp"
#include "egr/enumerate.hpp"
#include "egr/galois.hpp"
#include "egr/heights.hpp"
#include "egr/units.hpp"
#include "json.hpp"

using namespace egr;

static Q qq(long n, long d = 1) {
    Q q(n, d);
    q.canonicalize();
    return q;
}

TEST_CASE("height basics over Q") {
    NFPtr K = field_Q();
    CHECK(height_compare(NFElement::zero(K), 1) == 0);
    NFElement half(K, {qq(1, 2)});
    CHECK(height_compare(half, 2) == 0);
    CHECK(height_compare(half, qq(3, 2)) == 1);
    Q h;
    CHECK(height_exact_rational(NFElement(K, {qq(3, 7)}), h));
    CHECK(h == 7);
    CHECK(height_denominator_norm(half) == 2);
}

TEST_CASE("height of the golden ratio is irrational and below 2") {
    NFPtr K = field_real_quadratic(5);
    NFElement w = NFElement::gen(K);
    CHECK(height_compare(w, 1) == 1);
    CHECK(height_compare(w, 2) == -1);
    Q h;
    CHECK_FALSE(height_exact_rational(w, h));
    RBall b = height_ball(w, 128);
    CHECK(b.gt(qq(1618, 1001)));
    CHECK(b.lt(qq(1619, 1000)));
}

TEST_CASE("enumeration matches small closed forms") {
    // golden ratio field at B = 1.7: 0, +/-1, +/-w, +/-(w - 1)
    auto r5 = enumerate_bounded_height(field_real_quadratic(5), qq(17, 10));
    CHECK(r5.complete);
    CHECK(r5.elements.size() == 7);

    // rationals with denominator ideal (3) at B = 5
    NFPtr K = field_Q();
    Ideal b = ideal_principal(NFElement(K, {Q(3)}));
    auto got = enumerate_with_denominator(K, b, 5, unit_group(K));
    std::vector<NFElement> want;
    for (long n : {1, 2, 4, 5}) {
        want.emplace_back(K, QVec{qq(n, 3)});
        want.emplace_back(K, QVec{qq(-n, 3)});
    }
    sort_elements(want);
    sort_elements(got);
    CHECK(got == want);
}

TEST_CASE("enumeration agrees with brute force on Q(sqrt 2)") {
    NFPtr K = field_sqrt(2);
    auto res = enumerate_bounded_height(K, 3);
    CHECK(res.complete);
    auto oracle = brute_force_bounded_height(K, 3, 12);
    sort_elements(oracle);
    std::vector<NFElement> got = res.elements;
    sort_elements(got);
    CHECK(got == oracle);
}

TEST_CASE("quadratic fundamental units and narrow class numbers") {
    NFPtr F5 = field_real_quadratic(5);
    CHECK(fundamental_unit_quadratic_in(F5) == NFElement::gen(F5));
    NFPtr F8;
    NFElement u8 = fundamental_unit_quadratic(Z(8), &F8);
    CHECK(u8.a == QVec({Q(1), Q(1)}));  // 1 + sqrt 2
    CHECK(u8.norm() == -1);
    CHECK(narrow_class_number_quadratic(Z(5)) == 1);
    CHECK(narrow_class_number_quadratic(Z(8)) == 1);
    CHECK(narrow_class_number_quadratic(Z(12)) == 2);
}

TEST_CASE("units of bounded height in Q(sqrt 2)") {
    UnitGroup U = unit_group(field_sqrt(2));
    CHECK(U.cert == UnitCertification::CertifiedFundamental);
    CHECK(U.rank() == 1);
    // H((1+sqrt2)^2) = 3 + 2 sqrt 2 = 5.828..., inside at 6 but not at 5
    CHECK(units_of_height_up_to(U, 5).size() == 6);
    CHECK(units_of_height_up_to(U, 6).size() == 10);
    CHECK(units_of_height_up_to(U, qq(1, 2)).empty());
}

TEST_CASE("prime decomposition in Q(i)") {
    NFPtr K = field_gauss();
    auto p2 = prime_decomposition(K, Z(2));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].e == 2);
    CHECK(p2[0].f == 1);
    auto p5 = prime_decomposition(K, Z(5));
    REQUIRE(p5.size() == 2);
    CHECK(p5[0].f == 1);
    auto p3 = prime_decomposition(K, Z(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].f == 2);

    auto ideals = ideals_of_norm_up_to(K, 10);
    for (size_t i = 1; i < ideals.size(); i++)
        CHECK(ideals[i - 1].second <= ideals[i].second);
    // norms 1,2,4,5,5,8,9,10,10
    CHECK(ideals.size() == 9);
}

TEST_CASE("numerator and denominator ideals") {
    NFPtr K = field_gauss();
    NFElement x(K, {qq(3, 2), qq(1, 2)});  // (3 + i)/2
    Ideal num, den;
    numerator_denominator(x, num, den);
    CHECK(den.norm() == 2);   // (1 + i)
    CHECK(num.norm() == 5);   // N(3 + i)/N(1 + i)
    CHECK(height_denominator_norm(x) == 2);
}

TEST_CASE("small finite fields and projective orders") {
    SmallField F4 = SmallField::make(2, 2);
    CHECK(F4.mul(2, 2) == 3);  // a^2 = a + 1
    CHECK(F4.mul(2, 3) == 1);
    CHECK(F4.inv(2) == 3);
    CHECK(F4.from_int(3) == 1);
    SmallField F5 = SmallField::make(5, 1);
    // x^2 - x + 1: roots are primitive 6th roots of unity, their ratio a cube root
    CHECK(projective_frobenius_order(F5, 1, 1) == 3);
}

TEST_CASE("cycle type scan of x^2 + 1") {
    QPoly f = qpoly_from_z({Z(1), Z(0), Z(1)});
    CycleTypeScan s = cycle_type_scan(f, 100);
    CHECK(s.counts.at({1, 1}) > 0);   // p = 1 mod 4
    CHECK(s.counts.at({2}) > 0);      // p = 3 mod 4
    CHECK(s.counts.size() == 2);
    CHECK(s.primes_used + s.primes_skipped == 25);
}

TEST_CASE("ramification support") {
    CHECK(ramification_support(Z(-4)).primes == std::vector<Z>({2}));
    // polynomial discriminant of the 353 sextic; 17 is the index prime
    CHECK(ramification_support(Z(-50848945412)).primes == std::vector<Z>({2, 17, 353}));
    // field discriminant of the same field drops the index prime
    CHECK(ramification_support(Z(-175947908)).primes == std::vector<Z>({2, 353}));
}

TEST_CASE("embedded tables are structurally sound") {
    auto pairs = surface_pairs();
    CHECK(pairs.size() == 41);
    std::set<long> ds;
    for (auto& p : pairs) ds.insert(p.D);
    CHECK(ds.size() == 31);
    CHECK(surface_discriminants().size() == 31);
    CHECK(exceptional_discriminants().size() == 5);
    CHECK(scan_polynomials().size() == 17);
    CHECK(frobenius_tables().size() == 4);
    CHECK(curve_model_discs() == std::vector<long>({353, 421, 1597}));
}

TEST_CASE("1997 elliptic discriminants are units") {
    for (const EllipticModel& e : elliptic_models_1997()) {
        Q n = elliptic_discriminant(e).norm();
        CHECK(abs(n) == 1);
    }
}

TEST_CASE("field JSON round trip") {
    NFPtr K = field_real_quadratic(5);
    NFPtr K2 = field_from_json(field_to_json(K));
    CHECK(K2->f == K->f);
    CHECK(K2->field_disc == K->field_disc);
    CHECK(K2->ib == K->ib);

    NFPtr G = field_from_json(R"({"poly": [1, 0, 1], "label": "gauss"})");
    CHECK(G->degree() == 2);
    CHECK(G->field_disc == -4);
}

TEST_CASE("unit and element JSON round trips") {
    NFPtr K = field_sqrt(2);
    UnitGroup U = unit_group(K);
    UnitGroup U2 = units_from_json(K, units_to_json(U));
    REQUIRE(U2.rank() == U.rank());
    CHECK(U2.gens[0] == U.gens[0]);
    CHECK(U2.cert == UnitCertification::Supplied);

    auto parsed = nlohmann::json::parse(elements_to_json(U.gens));
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 1);
}

#ifdef EGR_TOOL_PATH
static int run_cli(const std::string& args) {
    int rc = std::system((std::string(EGR_TOOL_PATH) + " " + args).c_str());
    return WEXITSTATUS(rc);
}

TEST_CASE("cli exit codes and fontaine output") {
    CHECK(run_cli("definitely-not-a-command > /dev/null 2>&1") == 2);
    CHECK(run_cli("enumerate --bound 1 > /dev/null 2>&1") == 2);  // missing --field
    CHECK(run_cli("enumerate --field Q --bound 1 > /dev/null") == 0);
    CHECK(run_cli("fontaine --p 2 --delta-f sqrt:353 > /tmp/egr_unit_cli.out") == 0);
    std::ifstream in("/tmp/egr_unit_cli.out");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("75.1531") != std::string::npos);
    CHECK(run_cli("tables --name no-such-table > /dev/null 2>&1") == 2);
}
#endif
