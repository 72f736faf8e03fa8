#include "doctest.h"

#include <set>

#include "permcodes/errors.hpp"
#include "permcodes/exact.hpp"
#include "permcodes/field.hpp"

using namespace permcodes;
using Code = GaloisField::Code;

namespace {

// Trial-division oracle kept separate from the library's primality test.
bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool naive_prime_power(std::uint64_t n) {
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!naive_prime(p)) continue;
        std::uint64_t v = p;
        while (v < n) v *= p;
        if (v == n) return true;
    }
    return false;
}

} // namespace

TEST_CASE("factor_prime_power") {
    CHECK(factor_prime_power(9) == PrimePower{3, 2, 9});
    CHECK(factor_prime_power(7) == PrimePower{7, 1, 7});
    CHECK(factor_prime_power(16) == PrimePower{2, 4, 16});
    CHECK_THROWS_AS(factor_prime_power(12), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(1), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(0), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(-4), NotAPrimePower);
}

TEST_CASE("next_prime and next_prime_power") {
    CHECK(next_prime(9) == 11);
    CHECK(next_prime(14) == 17);
    CHECK(next_prime(11) == 11);
    CHECK(next_prime_power(9) == 9);
    CHECK(next_prime_power(14) == 16);
    CHECK(next_prime_power(10) == 11);

    for (std::uint64_t n = 2; n <= 1000; ++n) {
        const auto p = next_prime(n);
        const auto pp = next_prime_power(n);
        REQUIRE(naive_prime(p));
        REQUIRE(naive_prime_power(pp));
        REQUIRE(p >= pp);
        REQUIRE(pp >= n);
        for (std::uint64_t m = n; m < pp; ++m) REQUIRE_FALSE(naive_prime_power(m));
    }
    for (std::uint64_t n = 0; n <= 300; ++n) {
        CHECK(is_prime(n) == naive_prime(n));
        CHECK(is_prime_power(n) == naive_prime_power(n));
    }
}

TEST_CASE("modulus selection") {
    CHECK(field_make(4)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(field_make(8)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(field_make(16)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(field_make(9)->modulus().size() == 3);
    CHECK(is_irreducible(field_make(9)->modulus(), 3));
    const auto f5 = field_make(5);
    CHECK(f5->degree() == 1);
    CHECK(f5->mul(3, 4) == 2);
    CHECK(field_make(4) == field_make(4));
}

TEST_CASE("small products and inverses") {
    CHECK(field_make(4)->mul(2, 2) == 3);
    CHECK(field_make(5)->mul(3, 4) == 2);
    CHECK(field_make(7)->inv(3) == 5);
    CHECK_THROWS_AS(field_make(7)->inv(0), DivisionByZero);
    CHECK_THROWS_AS(field_make(6), NotAPrimePower);

    const auto f = field_make(7);
    const FieldElement a(f, 3);
    const FieldElement b(f, 5);
    CHECK((a * b).code() == 1);
    CHECK((a + b).code() == 1);
    CHECK((a - b).code() == 5);
    CHECK((-a).code() == 4);
    CHECK((a / b).code() == 2);
    CHECK(a.pow(-1) == b);
    CHECK_THROWS_AS(a + FieldElement(field_make(5), 1), SpecMismatch);
}

TEST_CASE("field axioms, exhaustive") {
    for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 11U, 13U, 16U}) {
        CAPTURE(q);
        const auto f = field_make(q);
        for (Code a = 0; a < q; ++a) {
            REQUIRE(f->add(a, 0) == a);
            REQUIRE(f->mul(a, 1) == a);
            REQUIRE(f->add(a, f->neg(a)) == 0);
            if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
            for (Code b = 0; b < q; ++b) {
                REQUIRE(f->add(a, b) == f->add(b, a));
                REQUIRE(f->mul(a, b) == f->mul(b, a));
                REQUIRE(f->sub(f->add(a, b), b) == a);
                if (a != 0 && b != 0) REQUIRE(f->mul(a, b) != 0);
                for (Code c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
        // A cyclic multiplicative group: some element has order q - 1.
        bool generator = false;
        for (Code a = 1; a < q; ++a) {
            std::set<Code> powers;
            for (std::int64_t e = 0; e < q - 1; ++e) powers.insert(f->pow(a, e));
            REQUIRE((q - 1) % f->multiplicative_order(a) == 0);
            REQUIRE(f->pow(a, f->multiplicative_order(a)) == 1);
            if (powers.size() == q - 1) generator = true;
        }
        CHECK(generator);
        CHECK(f->pow(2 % q, static_cast<std::int64_t>(q)) == 2 % q);
    }
}

TEST_CASE("exact helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(ipow(BigInt(11), 4) == 14641);
    CHECK(ceil(make_rational(638512875, 32)) == 19953528);
    CHECK(floor(make_rational(638512875, 32)) == 19953527);
    CHECK(ceil(make_rational(-7, 2)) == -3);
    CHECK(floor(make_rational(-7, 2)) == -4);
    CHECK(ceil(Rational(5)) == 5);
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("0.75") == make_rational(3, 4));
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS(parse_rational("x"));
    CHECK(format_significant(make_rational(14641, 13122), 6) == "1.11576");
    CHECK(format_significant(Rational(182571325044256), 6) == "182571000000000");
    CHECK(format_significant(Rational(BigInt("1234567890123456")), 6) == "1.23457e+15");
    CHECK(format_significant(make_rational(1, 1000000), 2) == "1.0e-06");
    CHECK(format_significant(make_rational(1, 3), 3) == "0.333");
}

TEST_CASE("field_make is deterministic") {
    for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 81, 125}) {
        const GaloisField fresh(static_cast<std::uint32_t>(q));
        CHECK(fresh == *field_make(q));
        CHECK(is_irreducible(fresh.modulus(), fresh.characteristic()));
    }
}
