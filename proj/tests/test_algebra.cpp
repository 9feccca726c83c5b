#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weil/algebra.hpp"

using namespace weil;

namespace {

struct Fixture {
    FieldPtr F = FieldDesc::make(3, 1);
    SympSpace sp = SympSpace::standard(F, 1);
};

}  // namespace

TEST_CASE("twisted multiplication of basis elements") {
    Fixture fx;
    const auto& sp = fx.sp;
    for (uint32_t xi = 0; xi < sp.point_count(); ++xi)
        for (uint32_t yi = 0; yi < sp.point_count(); ++yi) {
            const auto x = sp.decode(xi), y = sp.decode(yi);
            std::vector<uint32_t> xy{fx.F->add(x[0], y[0]), fx.F->add(x[1], y[1])};
            const AlgebraElement prod =
                AlgebraElement::basis(sp, xi) * AlgebraElement::basis(sp, yi);
            // (x)(y) = f(x,y)(x+y): exactly one term.
            CHECK(prod.terms().size() == 1);
            CHECK(prod.coeff(sp.encode(xy)) == f_pair(sp, x, y));
        }
}

TEST_CASE("associativity, identity, linearity") {
    Fixture fx;
    const auto& sp = fx.sp;
    std::mt19937 rng(11);
    std::uniform_int_distribution<uint32_t> pt(0, sp.point_count() - 1);
    auto rand_elem = [&] {
        AlgebraElement a(sp);
        for (int i = 0; i < 4; ++i)
            a.set_coeff(pt(rng), a.coeff(0) + CycNumber::zeta_pow(3, rng() % 3));
        return a;
    };
    const AlgebraElement one = AlgebraElement::one(sp);
    for (int t = 0; t < 30; ++t) {
        const AlgebraElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(one * a == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("space mismatch is rejected") {
    Fixture fx;
    const SympSpace other = SympSpace::standard(fx.F, 2);
    const AlgebraElement a = AlgebraElement::one(fx.sp);
    const AlgebraElement b = AlgebraElement::one(other);
    CHECK_THROWS_WITH(static_cast<void>(a * b), "space mismatch");
    CHECK_THROWS_WITH(static_cast<void>(a + b), "space mismatch");
}

TEST_CASE("apply_g is a ring automorphism") {
    Fixture fx;
    const auto& sp = fx.sp;
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const GroupElement g = random_element(sp, rng);
        for (uint32_t xi = 0; xi < sp.point_count(); ++xi)
            for (uint32_t yi = 0; yi < sp.point_count(); ++yi) {
                const AlgebraElement x = AlgebraElement::basis(sp, xi);
                const AlgebraElement y = AlgebraElement::basis(sp, yi);
                CHECK(apply_g(x * y, g) == apply_g(x, g) * apply_g(y, g));
            }
    }
}

TEST_CASE("s(g) conjugates (x) to (x^g) with unit (0)-coefficient") {
    Fixture fx;
    const auto& sp = fx.sp;
    const CycNumber one = CycNumber::integer(3, 1);
    for (const auto& g : enumerate_group(sp)) {
        const AlgebraElement s = s_of(g);
        const AlgebraElement sinv = s_inverse(g);
        CHECK(s.coeff(0) == one);
        CHECK(s * sinv == AlgebraElement::one(sp));
        CHECK(sinv * s == AlgebraElement::one(sp));
        for (uint32_t xi = 0; xi < sp.point_count(); ++xi)
            CHECK(sinv * AlgebraElement::basis(sp, xi) * s ==
                  AlgebraElement::basis(sp, g.apply_index(xi)));
    }
}

TEST_CASE("s(g^-1) matches the negated-form sum") {
    Fixture fx;
    const auto& sp = fx.sp;
    for (const auto& g : enumerate_group(sp)) {
        long cnt = 1;
        for (int i = 0; i < moved_space(g).dim(); ++i) cnt *= 3;
        CHECK(s_of(g.inverse()) ==
              s_inverse(g) * CycNumber::integer(3, cnt));
    }
}

TEST_CASE("mu is the cocycle of s and a rho-q unit") {
    Fixture fx;
    const auto& sp = fx.sp;
    const auto group = enumerate_group(sp);
    for (const auto& g : group)
        for (const auto& h : group) {
            const CycNumber m = mu(g, h);
            CHECK_FALSE(m.is_zero());
            CHECK(s_of(g) * s_of(h) == s_of(g * h) * m);
            // |mu|^2 is a power of q.
            const CycNumber n2 = m.norm_sq();
            REQUIRE(n2.is_rational());
            mpq_class v = n2.rational();
            CHECK(v.get_den() == 1);
            long num = v.get_num().get_si();
            while (num % 3 == 0) num /= 3;
            CHECK(num == 1);
        }
}

TEST_CASE("mu against the direct-sum criterion") {
    Fixture fx;
    const auto& sp = fx.sp;
    const auto group = enumerate_group(sp);
    const CycNumber one = CycNumber::integer(3, 1);
    for (const auto& g : group)
        for (const auto& h : group) {
            if (intersect(moved_space(g), moved_space(h)).dim() == 0)
                CHECK(mu(g, h) == one);
            if (mu(g, h) == one)
                CHECK(moved_space(g * h).dim() ==
                      moved_space(g).dim() + moved_space(h).dim());
        }
}
