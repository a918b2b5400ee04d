#include <doctest.h>

#include "helpers.hpp"
#include "plinear/errors.hpp"
#include "plinear/ring/laurent_poly.hpp"
#include "plinear/ring/residue.hpp"
#include "plinear/ring/tpoly.hpp"

using namespace plinear;
using namespace testutil;

TEST_SUITE("ring") {

TEST_CASE("integer helpers")
{
    const auto t = pascal(40);
    for (std::int64_t n = 0; n <= 40; ++n)
        for (std::int64_t k = -1; k <= n + 1; ++k)
            CHECK(binomial(n, k) == pas(t, n, k));
    for (std::uint64_t n = 0; n < 200; ++n) {
        bool naive = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                naive = false;
        CHECK(is_prime(n) == naive);
    }
    CHECK(is_prime(1'000'000'007ULL));
    CHECK_FALSE(is_prime(1'000'000'007ULL * 3));
    CHECK(mod_floor(Integer(-7), Integer(5)) == 3);
    CHECK(mod_floor_u64(Integer(-1), 9) == 8);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(mul_mod(inv_mod(7, 25), 7, 25) == 1);
    CHECK_THROWS_AS(inv_mod(5, 25), Error);
}

TEST_CASE("residues")
{
    const Modulus m9(3, 2), m5(5, 1);
    CHECK(m9.value() == 9);
    CHECK(m9.reduce(std::int64_t{-1}) == 8);
    Residue a(std::uint64_t{7}, m9), b(std::uint64_t{5}, m9);
    CHECK((a + b).value() == 3);
    CHECK((a - b).value() == 2);
    CHECK((b - a).value() == 7);
    CHECK((a * b).value() == 8);
    CHECK((-a).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK_THROWS_AS(Residue(std::uint64_t{3}, m9).inverse(), Error);
    CHECK_THROWS_AS(a + Residue(std::uint64_t{1}, m5), RingMismatch);
    CHECK_THROWS(Modulus(4, 1));
    CHECK_THROWS(Modulus(3, 0));
    CHECK_THROWS(Modulus(2, 63));
    CHECK_NOTHROW(Modulus(2, 62));
}

TEST_CASE("exponent vectors order lexicographically")
{
    CHECK(ExpVec{-1, 5} < ExpVec{0, 0});
    CHECK(ExpVec{0, 1} < ExpVec{1, -3});
    CHECK((ExpVec{1, 2} + ExpVec{3, -4}) == ExpVec{4, -2});
    CHECK(ExpVec{4, -6}.divisible_by(2));
    CHECK_FALSE(ExpVec{4, -3}.divisible_by(2));
    CHECK(ExpVec{4, -6}.divided(2) == ExpVec{2, -3});
    CHECK_THROWS(ExpVec(0));
    CHECK_THROWS(ExpVec(9));
}

TEST_CASE("tpoly arithmetic")
{
    using TP = TPoly<Integer>;
    TP z;
    CHECK(z.degree() == -1);
    TP a(std::vector<Integer>{1, 2, 0, 0});
    CHECK(a.degree() == 1);
    TP b(std::vector<Integer>{-1, 0, 3});
    CHECK((a * b) == TP(std::vector<Integer>{-1, -2, 3, 6}));
    CHECK((a - a).is_zero());
    CHECK(a.frobenius(3) == TP(std::vector<Integer>{1, 0, 0, 2}));
    CHECK(a.shifted(2) == TP(std::vector<Integer>{0, 0, 1, 2}));

    const Modulus m(3, 1);
    auto ar = to_residues(TP(std::vector<Integer>{1, -4, 6}), m);
    CHECK(ar.degree() == 1);
    CHECK(ar.coeff(0).value() == 1);
    CHECK(ar.coeff(1).value() == 2);
}

TEST_CASE("digit slices")
{
    using TP = TPoly<Integer>;
    auto s = tpoly_digit_slice(TP(std::vector<Integer>{1, 2}), 3, 0, 2);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == TP(std::vector<Integer>{1, 2}));
    CHECK(s[1].is_zero());

    s = tpoly_digit_slice(TP::monomial(1, 4), 3, 1, 2);
    CHECK(s[0].is_zero());
    CHECK(s[1] == TP::monomial(1, 2));

    // largest degree allowed by the bound: p(r-1+ceil(rho/p)) - 1 <= p*rho - 1
    const std::uint64_t p = 5;
    const std::size_t rho = 3, r = 3;
    const std::size_t deg = p * (r - 1) + p * 1 - rho;
    TP top = TP::monomial(1, deg);
    CHECK_NOTHROW(tpoly_digit_slice(top, p, rho - 1, rho));
    CHECK_THROWS_AS(tpoly_digit_slice(TP::monomial(1, p * rho), p, 0, rho), DegreeEscape);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> co(-50, 50);
    for (int it = 0; it < 200; ++it) {
        const std::uint64_t pp = std::vector<std::uint64_t>{2, 3, 5, 7}[it % 4];
        const std::size_t count = 1 + it % 4;
        const std::size_t shift = static_cast<std::size_t>(it) % count;
        std::vector<Integer> c(pp * count - shift);
        for (auto& v : c)
            v = co(rng);
        TP q(c);
        auto parts = tpoly_digit_slice(q, pp, shift, count);
        TP back;
        for (std::size_t m = 0; m < count; ++m) {
            CHECK(parts[m].degree() < static_cast<std::int64_t>(pp));
            back += parts[m].shifted(pp * m);
        }
        CHECK(back == q.shifted(shift));
    }
}

TEST_CASE("laurent products")
{
    IntLaurent g = x1() + x1(-1);
    CHECK((g * g) == x1(2) + c1(2) + x1(-2));
    CHECK((g * IntLaurent(1)).is_zero());
    CHECK_THROWS_AS(g * IntLaurent(2), RingMismatch);
    CHECK_THROWS_AS(g.add_term(ExpVec{1, 1}, 1), RingMismatch);

    IntLaurent h = x1() + c1(2) + x1(-1);
    TLaurent f = one_minus_t(h);
    TLaurent f2 = f * f;
    using TP = TPoly<Integer>;
    CHECK(f2.coeff(ExpVec{0}) == TP(std::vector<Integer>{1, -4, 6}));
    CHECK(f2.coeff(ExpVec{1}) == TP(std::vector<Integer>{0, -2, 4}));
    CHECK(f2.coeff(ExpVec{-1}) == TP(std::vector<Integer>{0, -2, 4}));
    CHECK(f2.coeff(ExpVec{2}) == TP(std::vector<Integer>{0, 0, 1}));
    CHECK(f2.coeff(ExpVec{-2}) == TP(std::vector<Integer>{0, 0, 1}));
    CHECK(f2.size() == 5);
}

TEST_CASE("powers")
{
    IntLaurent h = x1() + c1(2) + x1(-1);
    CHECK(lp_pow(h, 0) == c1(1));
    CHECK(lp_pow(h, 2) == x1(2) + c1(4) * x1() + c1(6) + c1(4) * x1(-1) + x1(-2));
    CHECK(lp_pow(h, 3).coeff(ExpVec{0}) == 20);
    const auto t = pascal(40);
    for (std::int64_t k = 0; k <= 20; ++k)
        CHECK(lp_pow(h, static_cast<std::uint64_t>(k)).coeff(ExpVec{0}) == pas(t, 2 * k, k));

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        IntLaurent a = random_laurent(rng, 2, -2, 2, 4);
        const Integer m = 125;
        for (std::uint64_t e : {1u, 3u, 6u})
            CHECK(lp_pow(a, e, m) == reduce_mod(lp_pow(a, e), m));
    }
}

TEST_CASE("ring axioms on random inputs")
{
    std::mt19937_64 rng(3);
    const std::vector<Rational> pt{Rational(3, 2), Rational(-2, 5)};
    for (int it = 0; it < 30; ++it) {
        IntLaurent a = random_laurent(rng, 2, -3, 3, 5), b = random_laurent(rng, 2, -3, 3, 5),
                   c = random_laurent(rng, 2, -3, 3, 5);
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(eval_at(a * b, pt) == eval_at(a, pt) * eval_at(b, pt));
        const auto sab = a.support();
        for (const auto& e : (a * b).support()) {
            bool found = false;
            for (const auto& u : sab)
                for (const auto& v : b.support())
                    found = found || (u + v) == e;
            CHECK(found);
        }
        const std::uint64_t e1 = it % 3, e2 = 1 + it % 2;
        CHECK(lp_pow(a, e1 + e2) == lp_pow(a, e1) * lp_pow(a, e2));
    }
}

TEST_CASE("frobenius")
{
    IntLaurent h = x1() + c1(2) + x1(-1);
    CHECK(lp_frobenius(h, 3) == x1(3) + c1(2) + x1(-3));
    TLaurent f = one_minus_t(x1());
    TLaurent fs = lp_frobenius(f, 2);
    CHECK(fs.coeff(ExpVec{0}) == TPoly<Integer>::constant(1));
    CHECK(fs.coeff(ExpVec{2}) == TPoly<Integer>::monomial(-1, 2));
    CHECK(fs.size() == 2);

    std::mt19937_64 rng(9);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (int it = 0; it < 15; ++it) {
            IntLaurent a = random_laurent(rng, 2, -2, 2, 4, 9);
            const Integer m(static_cast<unsigned long>(p));
            CHECK(reduce_mod(lp_pow(a, p), m) == reduce_mod(lp_frobenius(a, p), m));
        }
    }
}

}
