#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weil/cyclotomic.hpp"

using namespace weil;

namespace {

FieldPtr make_q(int q) {
    for (int p : {3, 5, 7, 11, 13}) {
        int pe = p, e = 1;
        while (pe < q) pe *= p, ++e;
        if (pe == q) return FieldDesc::make(p, e);
    }
    throw std::invalid_argument("unsupported q");
}

}  // namespace

TEST_CASE("ring basics and canonical reduction") {
    const int p = 5;
    auto one = CycNumber::integer(p, 1);
    auto z = CycNumber::zeta_pow(p, 1);
    CHECK(z.pow(5) == one);
    // 1 + z + z^2 + z^3 + z^4 = 0
    CycNumber s(p);
    for (int k = 0; k < 5; ++k) s += CycNumber::zeta_pow(p, k);
    CHECK(s.is_zero());
    CHECK(CycNumber::zeta_pow(p, 7) == z.pow(7));
    CHECK((z * z.conj()) == one);
}

TEST_CASE("inverse") {
    const int p = 3;
    auto one = CycNumber::integer(p, 1);
    CHECK(one.inverse() == one);
    auto z = CycNumber::zeta_pow(p, 1);
    // zeta^{-1} = zeta^{p-1} = -1 - zeta for p = 3
    CycNumber expect(p);
    expect.add_zeta_pow(0, -1);
    expect.add_zeta_pow(1, -1);
    CHECK(z.inverse() == expect);
    CHECK_THROWS_WITH_AS(CycNumber(p).inverse(), "division by zero", std::domain_error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CycNumber x(7);
        for (int k = 0; k < 6; ++k)
            x += CycNumber::zeta_pow(7, k) * mpq_class(static_cast<int>(rng() % 7) - 3,
                                                       1 + static_cast<int>(rng() % 4));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == CycNumber::integer(7, 1));
    }
}

TEST_CASE("gauss sum identity rho^2 = delta q") {
    SUBCASE("q=3 explicit value") {
        auto f = make_q(3);
        CycNumber expect(3);
        expect.add_zeta_pow(0, 1);
        expect.add_zeta_pow(1, 2);
        CHECK(rho(*f) == expect);  // 1 + 2*zeta
        CHECK(rho(*f).pow(2) == CycNumber::integer(3, -3));
        // rho^{-1} = rho / (-3)
        CHECK(rho(*f).inverse() == rho(*f) * mpq_class(-1, 3));
    }
    for (int q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
        auto f = make_q(q);
        CHECK(rho(*f).pow(2) == CycNumber::integer(f->p(), f->delta() * q));
    }
}

TEST_CASE("psi") {
    auto f3 = make_q(3);
    CHECK(psi(*f3, 0) == CycNumber::integer(3, 1));
    CHECK(psi(*f3, 1) == CycNumber::zeta_pow(3, 1));
    auto f9 = make_q(9);
    CHECK(psi(*f9, 3) == CycNumber::integer(3, 1));  // tr(x) = 0 with modulus x^2+1
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(psi(*f9, f9->add(a, b)) == psi(*f9, a) * psi(*f9, b));
}

TEST_CASE("character sums of linear functionals") {
    for (int q : {3, 5, 9}) {
        auto f = make_q(q);
        for (int dim = 1; dim <= 2; ++dim) {
            long count = 1;
            for (int i = 0; i < dim; ++i) count *= q;
            for (long lidx = 0; lidx < count; ++lidx) {
                QuadraticFormDesc form;
                form.field = f;
                form.dim = dim;
                form.gram.assign(static_cast<size_t>(dim) * dim, 0);
                form.linear.resize(dim);
                long t = lidx;
                for (int i = 0; i < dim; ++i) {
                    form.linear[i] = static_cast<uint32_t>(t % q);
                    t /= q;
                }
                auto s = quad_psi_sum_brute(form);
                if (lidx == 0)
                    CHECK(s == CycNumber::integer(f->p(), count));
                else
                    CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("quadratic sum examples") {
    auto f3 = make_q(3);
    QuadraticFormDesc sq{f3, 1, {1}, {}};  // Q(x) = x^2
    CHECK(quad_psi_sum_brute(sq) == rho(*f3));
    CHECK(quad_psi_sum_closed(sq) == rho(*f3));

    QuadraticFormDesc zero2{f3, 2, {0, 0, 0, 0}, {}};
    CHECK(quad_psi_sum_brute(zero2) == CycNumber::integer(3, 9));
    CHECK(quad_psi_sum_closed(zero2) == CycNumber::integer(3, 9));

    // Q(x,y) = xy: gram [[0, 1/2],[1/2, 0]]
    const uint32_t h = f3->half(1);
    QuadraticFormDesc hyp{f3, 2, {0, h, h, 0}, {}};
    CHECK(quad_psi_sum_brute(hyp) == CycNumber::integer(3, 3));
    CHECK(quad_psi_sum_closed(hyp) == CycNumber::integer(3, 3));

    // affine: Q = x^2, l = x
    QuadraticFormDesc aff{f3, 1, {1}, {1}};
    CycNumber expect = CycNumber::zeta_pow(3, 2) * rho(*f3);  // psi(-1) * rho
    CHECK(quad_psi_sum_brute(aff) == expect);
    CHECK(quad_psi_sum_closed(aff) == expect);

    CHECK_THROWS_WITH_AS(
        quad_psi_sum_brute(QuadraticFormDesc{f3, 7, std::vector<uint32_t>(49, 0), {}}),
        "dimension limit", std::invalid_argument);
}

TEST_CASE("closed form equals brute force on random forms") {
    std::mt19937 rng(42);
    for (int q : {3, 5, 9}) {
        auto f = make_q(q);
        for (int trial = 0; trial < 60; ++trial) {
            const int dim = 1 + static_cast<int>(rng() % 3);
            QuadraticFormDesc form;
            form.field = f;
            form.dim = dim;
            form.gram.assign(static_cast<size_t>(dim) * dim, 0);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j <= i; ++j) {
                    uint32_t v = rng() % q;
                    form.gram[static_cast<size_t>(i) * dim + j] = v;
                    form.gram[static_cast<size_t>(j) * dim + i] = v;
                }
            if (rng() % 2) {
                form.linear.resize(dim);
                for (auto& v : form.linear) v = rng() % q;
            }
            CHECK(quad_psi_sum_closed(form) == quad_psi_sum_brute(form));
        }
    }
}

TEST_CASE("sum bound with equality iff F = 0") {
    // |sum psi(F(x))|^2 <= q^{2 dim}, equality iff F identically 0
    std::mt19937 rng(11);
    for (int q : {3, 5, 9}) {
        auto f = make_q(q);
        for (int trial = 0; trial < 40; ++trial) {
            const int dim = 1 + static_cast<int>(rng() % 3);
            QuadraticFormDesc form;
            form.field = f;
            form.dim = dim;
            form.gram.assign(static_cast<size_t>(dim) * dim, 0);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j <= i; ++j) {
                    uint32_t v = rng() % q;
                    form.gram[static_cast<size_t>(i) * dim + j] = v;
                    form.gram[static_cast<size_t>(j) * dim + i] = v;
                }
            form.linear.resize(dim);
            for (auto& v : form.linear) v = rng() % q;

            auto s = quad_psi_sum_brute(form);
            auto n = s.norm_sq();
            REQUIRE(n.is_rational());
            long bound = 1;
            for (int i = 0; i < 2 * dim; ++i) bound *= q;
            CHECK(n.rational() <= bound);
            bool f_zero = true;
            for (auto v : form.gram) f_zero = f_zero && v == 0;
            for (auto v : form.linear) f_zero = f_zero && v == 0;
            CHECK((n.rational() == bound) == f_zero);
        }
    }

    // exhaustive for q=3, dim 1: psi(F) = 1 everywhere forces F = 0
    auto f3 = make_q(3);
    for (uint32_t g = 0; g < 3; ++g)
        for (uint32_t l = 0; l < 3; ++l) {
            QuadraticFormDesc form{f3, 1, {g}, {l}};
            bool all_one = true;
            for (uint32_t x = 0; x < 3 && all_one; ++x)
                all_one = psi(*f3, form.eval({x})) == CycNumber::integer(3, 1);
            CHECK(all_one == (g == 0 && l == 0));
        }
}
