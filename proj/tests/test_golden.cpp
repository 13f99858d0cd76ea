#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ncmut/golden.hpp"
#include "ncmut/reference_data.hpp"
#include "ncmut/scalar.hpp"

using namespace ncmut;

namespace {

template <class E, class F>
std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return "";
}

golden_int random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    return {d(rng), d(rng)};
}

// small enough that triple products stay inside int64
golden_int random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-10000, 10000);
    return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("embedding constant", "[golden]") {
    CHECK(golden_a == Catch::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    // a^2 = 3a - 1 in the embedding
    CHECK(golden_a * golden_a == Catch::Approx(3.0 * golden_a - 1.0).epsilon(1e-15));
}

TEST_CASE("ring axioms on random triples", "[golden]") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 10000; ++t) {
        golden_int x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE(x + y == y + x);
        REQUIRE(golden_mul(x, y) == golden_mul(y, x));
        REQUIRE(x - x == golden_int{0, 0});
        golden_int u = random_small(rng), v = random_small(rng), w = random_small(rng);
        REQUIRE(golden_mul(golden_mul(u, v), w) == golden_mul(u, golden_mul(v, w)));
        REQUIRE(golden_mul(u, v + w) == golden_mul(u, v) + golden_mul(u, w));
    }
}

TEST_CASE("embedding commutes with ring operations and sign", "[golden]") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 10000; ++t) {
        golden_int x = random_elem(rng), y = random_elem(rng);
        double ex = x.embed(), ey = y.embed();
        double es = (x + y).embed();
        CHECK(std::abs(es - (ex + ey)) <= 1e-12 * std::max(1.0, std::abs(ex + ey)));
        double ep = golden_mul(x, y).embed();
        CHECK(std::abs(ep - ex * ey) <= 1e-9 * std::max(1.0, std::abs(ex * ey)));
        // sign is decidable exactly; the embedding must agree whenever it is
        // clearly away from zero
        if (std::abs(ex) > 1e-6) CHECK(golden_sign(x) == (ex > 0 ? 1 : -1));
    }
}

TEST_CASE("multiplication examples reduce via the defining relation", "[golden]") {
    golden_int a{0, 1};
    CHECK(golden_mul(a, a) == golden_int{-1, 3});  // a^2 = 3a - 1
    golden_int am2{-2, 1};
    CHECK(golden_mul(am2, am2) == golden_int{3, -1});  // (a-2)^2 = 3 - a
    CHECK(golden_conj(a) == golden_int{3, -1});
    CHECK(golden_norm(a) == 1);
    CHECK(golden_norm(golden_int{1, 1}) == 5);
    CHECK(golden_norm(golden_int{-2, 1}) == -1);
    // x * conj(x) equals the norm as a ring element
    golden_int x{7, -4};
    CHECK(golden_mul(x, golden_conj(x)) == golden_int{golden_norm(x), 0});
}

TEST_CASE("exact sign determination", "[golden]") {
    CHECK(golden_sign(golden_int{0, 0}) == 0);
    CHECK(golden_sign(golden_int{1, 0}) == 1);
    CHECK(golden_sign(golden_int{-1, 0}) == -1);
    CHECK(golden_sign(golden_int{0, 1}) == 1);
    CHECK(golden_sign(golden_int{3, -1}) == 1);   // 3 - a > 0
    CHECK(golden_sign(golden_int{2, -1}) == -1);  // 2 - a < 0
    CHECK(golden_sign(golden_int{-5, 2}) == 1);   // 2a - 5 = 0.236...
    CHECK(golden_sign(golden_int{5, -2}) == -1);
    CHECK(golden_sign(golden_int{-13, 5}) == 1);   // 5a - 13 = 0.09...
    CHECK(golden_sign(golden_int{-1000001, 381966}) == -1);  // near-zero combination
}

TEST_CASE("comparison follows the real embedding", "[golden]") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 2000; ++t) {
        golden_int x = random_elem(rng), y = random_elem(rng);
        double dx = x.embed(), dy = y.embed();
        if (std::abs(dx - dy) > 1e-3) CHECK((x < y) == (dx < dy));
    }
    CHECK(golden_cmp(golden_int{0, 1}, golden_int{3, 0}) < 0);  // a < 3
    CHECK(golden_cmp(golden_int{0, 1}, golden_int{2, 0}) > 0);  // a > 2
}

TEST_CASE("render and parse round trip", "[golden]") {
    CHECK(to_string(golden_int{-1, 1}) == "-1+1*a");
    CHECK(to_string(golden_int{0, 0}) == "0+0*a");
    CHECK(to_string(golden_int{2, -1}) == "2-1*a");
    std::mt19937_64 rng(45);
    for (int t = 0; t < 2000; ++t) {
        golden_int x = random_elem(rng);
        CHECK(parse_golden(to_string(x)) == x);
    }
    CHECK(parse_golden("3") == golden_int{3, 0});
    CHECK(parse_golden("-7") == golden_int{-7, 0});
    CHECK(parse_golden("+4") == golden_int{4, 0});
    CHECK(parse_golden("0+1*a") == golden_int{0, 1});
    for (const char* bad : {"", "a", "1+a", "1+2*b", "1 + 2*a", "1+2*a ", "1.5", "2*a", "1+2"}) {
        INFO(bad);
        CHECK(thrown_message<std::invalid_argument>([&] { (void)parse_golden(bad); })
                  .find("bad golden literal") != std::string::npos);
    }
}

TEST_CASE("checked arithmetic rejects overflow", "[golden]") {
    golden_int big{INT64_MAX, 0};
    CHECK_THROWS_AS((big + golden_int{1, 0}), std::overflow_error);
    CHECK_THROWS_AS(golden_mul(golden_int{INT64_MAX / 2, 0}, golden_int{3, 0}), std::overflow_error);
    CHECK_THROWS_AS((-golden_int{INT64_MIN, 0}), std::overflow_error);
    // sign guard trips before the 128-bit squares can overflow
    CHECK_THROWS_AS(golden_sign(golden_int{INT64_MAX / 2 + 1, 1}), std::overflow_error);
}

TEST_CASE("rational normalization and structural equality", "[golden]") {
    CHECK(golden_rational(golden_int{2, 4}, 2) == golden_rational(golden_int{1, 2}, 1));
    CHECK(golden_rational(golden_int{1, 0}, -2) == golden_rational(golden_int{-1, 0}, 2));
    CHECK(golden_rational(golden_int{0, 0}, 5) == golden_rational(golden_int{0, 0}, 1));
    CHECK_THROWS_AS(golden_rational(golden_int{1, 0}, 0), std::domain_error);
    golden_rational half{golden_int{1, 0}, 2};
    CHECK(half + half == golden_rational(golden_int{1, 0}));
    CHECK(half - half == golden_rational(golden_int{0, 0}));
}

TEST_CASE("rational inverse and division", "[golden]") {
    golden_rational a{golden_int{0, 1}};
    golden_rational inv = golden_inverse(a);
    CHECK(a * inv == golden_rational(golden_int{1, 0}));   // a * (3 - a) = 1
    CHECK(inv == golden_rational(golden_int{3, -1}));
    golden_rational q{golden_int{-2, 1}, 3};
    CHECK(q / q == golden_rational(golden_int{1, 0}));
    CHECK(q * golden_inverse(q) == golden_rational(golden_int{1, 0}));
    CHECK_THROWS_AS(golden_inverse(golden_rational(golden_int{0, 0})), std::domain_error);
    CHECK(golden_sign(golden_rational(golden_int{2, -1}, 7)) == -1);
    CHECK(to_string(golden_rational(golden_int{-1, 1}, 2)) == "(-1+1*a)/2");
    CHECK(to_string(golden_rational(golden_int{-1, 1}, 1)) == "-1+1*a");
}

TEST_CASE("scalar modes never mix", "[golden]") {
    scalar e{golden_int{1, 1}};
    scalar f{2.5};
    CHECK(e.is_exact());
    CHECK(f.mode() == scalar_mode::floating);
    CHECK_THROWS_AS(e + f, std::invalid_argument);
    CHECK_THROWS_AS(e * f, std::invalid_argument);
    CHECK_THROWS_AS(f / e, std::invalid_argument);
    CHECK_THROWS_AS(e.float_value(), std::logic_error);
    CHECK_THROWS_AS(f.exact_value(), std::logic_error);
    CHECK((e + e).exact_value() == golden_rational(golden_int{2, 2}));
    CHECK((f * f).float_value() == 6.25);
    CHECK(e.embed() == Catch::Approx(1.0 + golden_a).epsilon(1e-15));
}

TEST_CASE("scalar sign with tolerance", "[golden]") {
    CHECK(scalar_sign(scalar{golden_int{3, -1}}) == 1);
    CHECK(scalar_sign(scalar{golden_int{0, 0}}) == 0);
    CHECK(scalar_sign(scalar{5e-10}) == 0);       // below default 1e-9
    CHECK(scalar_sign(scalar{5e-10}, 1e-12) == 1);
    CHECK(scalar_sign(scalar{-2.0}) == -1);
    CHECK(scalar_sign(golden_int{-5, 2}) == 1);
}

TEST_CASE("real powering", "[golden]") {
    CHECK(golden_pow_real(scalar{1.0}, scalar{golden_int{0, 1}}).float_value() == 1.0);
    // exponent exactly one returns the base unchanged
    CHECK(golden_pow_real(scalar{2.0}, scalar{1.0}).float_value() == 2.0);
    scalar p = golden_pow_real(scalar{refdata::pow_pin_base}, scalar{refdata::pow_pin_expo});
    CHECK(p.mode() == scalar_mode::floating);
    CHECK(p.float_value() == Catch::Approx(refdata::pow_pin_value).epsilon(1e-14));
    CHECK(golden_pow_real(scalar{golden_int{2, 0}}, scalar{golden_int{1, 0}}).mode() ==
          scalar_mode::floating);
    CHECK_THROWS_AS(golden_pow_real(scalar{0.0}, scalar{2.0}), std::domain_error);
    CHECK_THROWS_AS(golden_pow_real(scalar{-1.0}, scalar{2.0}), std::domain_error);
}
