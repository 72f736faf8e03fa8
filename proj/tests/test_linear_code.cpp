#include "doctest.h"

#include <set>
#include <sstream>

#include "permcodes/code_io.hpp"
#include "permcodes/errors.hpp"
#include "permcodes/linear_code.hpp"
#include "permcodes/mds.hpp"

using namespace permcodes;

namespace {

std::set<FieldVector> codewords(const LinearCode& c) {
    std::set<FieldVector> out;
    for_each_codeword(c.generator(), [&](std::span<const Code> w, std::span<const Code>) {
        out.emplace(w.begin(), w.end());
        return true;
    });
    return out;
}

// Brute-force minimum weight over all q^n vectors in the kernel of H.
std::size_t kernel_min_weight(const MatrixGF& h) {
    const std::uint32_t q = h.field()->order();
    const std::size_t n = h.cols();
    FieldVector v(n, 0);
    std::size_t best = n + 1;
    while (true) {
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++v[i] < q) break;
            v[i] = 0;
        }
        if (i == n) break;
        const auto s = h.apply(v);
        bool zero = true;
        for (Code c : s) zero = zero && c == 0;
        if (zero) best = std::min(best, hamming_weight(v));
    }
    return best;
}

LinearCode repetition(std::uint32_t q, std::size_t n) {
    return LinearCode(MatrixGF::from_rows(field_make(q), {FieldVector(n, 1)}));
}

} // namespace

TEST_CASE("rref examples") {
    const auto f5 = field_make(5);
    const auto id = MatrixGF::identity(f5, 3);
    CHECK(rref(id).reduced == id);
    CHECK(rank(id) == 3);

    const MatrixGF zero(field_make(2), 2, 4);
    CHECK(rref(zero).reduced == zero);
    CHECK(rank(zero) == 0);

    const auto m = MatrixGF::from_rows(field_make(2), {{1, 1, 0, 0}, {0, 1, 1, 0}});
    const auto e = rref(m);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == MatrixGF::from_rows(field_make(2), {{1, 0, 1, 0}, {0, 1, 1, 0}}));
}

TEST_CASE("matrix algebra") {
    const auto f = field_make(7);
    const auto a = MatrixGF::from_rows(f, {{1, 2}, {3, 4}});
    CHECK(a * MatrixGF::identity(f, 2) == a);
    CHECK(a.transpose().at(0, 1) == 3);
    CHECK((a * a) == MatrixGF::from_rows(f, {{0, 3}, {1, 1}}));
    CHECK_THROWS_AS(a * MatrixGF(f, 3, 1), DimensionMismatch);
    CHECK_THROWS_AS(a * MatrixGF::identity(field_make(5), 2), SpecMismatch);
    CHECK(a.apply(FieldVector{1, 1}) == FieldVector{3, 0});
}

TEST_CASE("code construction validates shape") {
    const auto f = field_make(2);
    CHECK_THROWS_AS(LinearCode(MatrixGF::identity(f, 3)), ParameterError);
    CHECK_THROWS_AS(LinearCode(MatrixGF::from_rows(f, {{1, 1, 0}, {1, 1, 0}})), ParameterError);
}

TEST_CASE("dual and parity check") {
    const auto rep = repetition(2, 3);
    const auto par = dual(rep);
    CHECK(par.length() == 3);
    CHECK(par.dimension() == 2);
    CHECK(min_distance(par) == 2);
    CHECK(min_distance(rep) == 3);
    CHECK((rep.generator() * parity_check(rep).transpose()).is_zero());

    const auto rs = reed_solomon(7, 6, 4);
    const auto d = dual(rs);
    CHECK(d.dimension() == 2);
    CHECK(min_distance(d) == 5);

    std::mt19937_64 rng(7);
    const auto f3 = field_make(3);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixGF g(f3, 2, 5);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 5; ++c) g.set(r, c, static_cast<Code>(uniform_below(rng, 3)));
        if (rank(g) < 2) continue;
        const LinearCode c(g);
        CHECK(codewords(dual(dual(c))) == codewords(c));
    }
}

TEST_CASE("min_distance and column independence agree") {
    CHECK(min_distance(repetition(2, 3)) == 3);
    const auto rs = reed_solomon(7, 6, 4);
    CHECK(min_distance(rs) == 3);
    CHECK(min_distance_by_columns(parity_check(rs)) == 3);
    CHECK(min_distance(dual(extended_rs(4, 3))) == 4);
    CHECK_THROWS_AS(min_distance(rs, 100), BudgetExceeded);

    const auto f2 = field_make(2);
    CHECK(check_columns_independent(MatrixGF::identity(f2, 3), 3));
    CHECK_FALSE(check_columns_independent(MatrixGF::from_rows(f2, {{1, 0}, {1, 0}}), 1));
    const auto h = parity_check(rs);
    CHECK(check_columns_independent(h, 2));
    CHECK_FALSE(check_columns_independent(h, 3));
    CHECK(check_columns_independent(h, 0));
    CHECK_THROWS_AS(check_columns_independent(h, 7), ParameterError);

    // d = smallest t such that some t columns are dependent, against a kernel scan.
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2U, 3U, 4U}) {
        const auto f = field_make(q);
        for (int trial = 0; trial < 15; ++trial) {
            MatrixGF hr(f, 3, 6);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 6; ++c) hr.set(r, c, static_cast<Code>(uniform_below(rng, q)));
            if (rank(hr) < 3) continue;
            const std::size_t d = kernel_min_weight(hr);
            CAPTURE(q);
            CHECK(min_distance_by_columns(hr) == d);
            for (std::size_t t = 1; t <= 3; ++t) CHECK(check_columns_independent(hr, t) == (t < d));
        }
    }
}

TEST_CASE("normalization to an all-ones first row") {
    const auto f2 = field_make(2);
    const auto even = LinearCode(MatrixGF::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
    const auto w = find_full_weight_dual_codeword(even, 0);
    REQUIRE(w);
    CHECK(*w == FieldVector{1, 1, 1});
    const auto norm = normalize_first_row_ones(even, *w);
    CHECK(norm.generator() == even.generator());
    const MatrixGF hn = parity_check(norm);
    const auto h1 = hn.row(0);
    CHECK(std::all_of(h1.begin(), h1.end(), [](Code c) { return c == 1; }));

    for (auto [q, n, k] : {std::tuple{7U, 6UL, 4UL}, std::tuple{5U, 5UL, 2UL}}) {
        const auto rs = reed_solomon(q, n, k);
        const auto wr = find_full_weight_dual_codeword(rs, 3);
        REQUIRE(wr);
        CHECK(hamming_weight(*wr) == n);
        CHECK(rs.is_orthogonal(*wr));
        const auto nc = normalize_first_row_ones(rs, *wr);
        const MatrixGF hc = parity_check(nc);
        const auto row = hc.row(0);
        CHECK(std::all_of(row.begin(), row.end(), [](Code c) { return c == 1; }));
        CHECK((nc.generator() * parity_check(nc).transpose()).is_zero());
        CHECK(min_distance(nc) == n - k + 1);
    }

    const auto rs = reed_solomon(7, 6, 4);
    CHECK_THROWS_AS(normalize_first_row_ones(rs, FieldVector{0, 1, 1, 1, 1, 1}), NotFullWeight);
    CHECK_THROWS_AS(normalize_first_row_ones(rs, FieldVector{1, 1, 1, 1, 1, 1}), NotInDual);
    CHECK_THROWS_AS(normalize_first_row_ones(rs, FieldVector{1, 1}), LengthMismatch);
}

TEST_CASE("full-weight dual codewords") {
    const auto amds = random_code_search(6, 2, 4, 4, 1, 10000);
    REQUIRE(amds);
    const auto w = find_full_weight_dual_codeword(*amds, 5);
    REQUIRE(w);
    CHECK(hamming_weight(*w) == 6);
    CHECK(amds->is_orthogonal(*w));

    const auto rs = reed_solomon(7, 7, 3);
    const auto w7 = find_full_weight_dual_codeword(rs, 9);
    REQUIRE(w7);
    CHECK(hamming_weight(*w7) == 7);
    CHECK(rs.is_orthogonal(*w7));

    // [3,1] repetition over GF(2): the dual is the even-weight code, no word of weight 3.
    CHECK_FALSE(find_full_weight_dual_codeword(repetition(2, 3), 0));
}

TEST_CASE("random code search") {
    const auto amds = random_code_search(6, 2, 4, 4, 1, 10000);
    REQUIRE(amds);
    CHECK(amds->known_distance() == 4);
    CHECK(singleton_defect(*amds) == 1);

    const auto rep = random_code_search(3, 1, 3, 2, 0, 100);
    REQUIRE(rep);
    CHECK(rep->generator() == MatrixGF::from_rows(field_make(2), {{1, 1, 1}}));

    CHECK_FALSE(random_code_search(5, 4, 3, 2, 0, 1000));

    const auto again = random_code_search(6, 2, 4, 4, 1, 10000);
    CHECK(again->generator() == amds->generator());
}

TEST_CASE("singleton defect") {
    CHECK(singleton_defect(reed_solomon(7, 6, 4)) == 0);
    CHECK(singleton_defect(repetition(2, 3).verified()) == 0);
    CHECK_THROWS_AS(singleton_defect(repetition(2, 3)), PreconditionViolated);
    const auto s = summarize(reed_solomon(7, 6, 4));
    CHECK(s.n == 6);
    CHECK(s.k == 4);
    CHECK(s.d == 3);
    CHECK(s.defect == 0);
}

TEST_CASE("code file round trip and errors") {
    const auto rs = reed_solomon(7, 6, 4);
    const std::string text = format_code(rs);
    const auto back = parse_code(text);
    CHECK(back.generator() == rs.generator());
    CHECK(parse_code("# comment\n\n2 3 1\n1 1 1\n").length() == 3);

    auto line_of = [](const std::string& s) {
        try {
            parse_code(s);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("2 3 1\n1 1\n") == 2);
    CHECK(line_of("2 3 1\n1 2 1\n") == 2);
    CHECK(line_of("6 3 1\n1 1 1\n") == 1);
    CHECK(line_of("2 3 2\n1 1 1\n") > 0);
}

TEST_CASE("fixture invariants") {
    std::vector<LinearCode> fixtures{reed_solomon(7, 6, 4), reed_solomon(5, 5, 2), extended_rs(5, 3),
                                     extended_rs(4, 3), repetition(2, 3), dual(repetition(2, 3)),
                                     *random_code_search(6, 2, 4, 4, 1, 10000)};
    for (const auto& c : fixtures) {
        const auto v = c.verified();
        const MatrixGF h = parity_check(c);
        CHECK((h * c.generator().transpose()).is_zero());
        CHECK(rank(h) == c.length() - c.dimension());
        const std::size_t d = *v.known_distance();
        CHECK(d + c.dimension() <= c.length() + 1);
        CHECK(d == min_distance(c));
        if (count_vectors(c.q(), c.dimension()) <= 100000)
            for (std::size_t t = 0; t <= c.length() - c.dimension(); ++t)
                CHECK((d >= t + 1) == check_columns_independent(h, t));

        if (const auto w = find_full_weight_dual_codeword(c, 4)) {
            CHECK(hamming_weight(*w) == c.length());
            CHECK(h.rows() > 0);
            CHECK(c.is_orthogonal(*w));
            const auto nc = normalize_first_row_ones(c, *w);
            CHECK(nc.length() == c.length());
            CHECK(nc.dimension() == c.dimension());
            CHECK(min_distance(nc) == d);
        }
    }
}

TEST_CASE("dual codewords with non-leading pivots") {
    const auto f5 = field_make(5);
    const LinearCode c(MatrixGF::from_rows(f5, {{0, 1, 0, 2, 3}, {0, 0, 1, 4, 1}}));
    REQUIRE(rref(c.generator()).pivots == std::vector<std::size_t>{1, 2});
    const LinearCode shuffled(MatrixGF::from_rows(f5, {{1, 2, 0, 3, 4}, {2, 4, 1, 1, 1}}));
    REQUIRE(rref(shuffled.generator()).pivots == std::vector<std::size_t>{0, 2});
    for (const auto& code : {c, shuffled}) {
        const auto w = find_full_weight_dual_codeword(code, 8);
        REQUIRE(w);
        CHECK(hamming_weight(*w) == 5);
        CHECK(code.is_orthogonal(*w));
    }
}

TEST_CASE("code files are byte-stable") {
    const auto c = *random_code_search(6, 2, 4, 4, 1, 10000);
    const std::string text = format_code(c);
    CHECK(format_code(parse_code(text)) == text);
    CHECK(format_code(parse_code("# header\n" + text + "# trailer\n")) == text);
    CHECK(text.substr(0, 6) == "4 6 2\n");
}
