#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharplab/scalar.hpp"

using namespace sharplab;
using GR = GaussianRational;
using C = std::complex<double>;

TEST_CASE("exact field arithmetic") {
    GR a(mpq_class(1, 2), mpq_class(3, 4));   // 1/2 + 3/4 i
    GR b(mpq_class(-2, 3), mpq_class(1, 5));  // -2/3 + 1/5 i

    auto sum = a + b;
    CHECK(sum.re == mpq_class(-1, 6));
    CHECK(sum.im == mpq_class(19, 20));

    // (1/2 + 3/4 i)(-2/3 + 1/5 i) = (-1/3 - 3/20) + (1/10 - 1/2) i
    auto prod = a * b;
    CHECK(prod.re == mpq_class(-29, 60));
    CHECK(prod.im == mpq_class(-2, 5));

    CHECK(a * b.reciprocal() * b == a);
    CHECK((a / b) * b == a);
    CHECK(a - a == GR());
}

TEST_CASE("conjugation and norm") {
    GR a(mpq_class(3, 5), mpq_class(-4, 5));
    CHECK(a.conj().im == mpq_class(4, 5));
    CHECK(a.norm_sq() == 1);
    CHECK((a * a.conj()).re == 1);
    CHECK((a * a.conj()).im == 0);
}

TEST_CASE("reciprocal of zero throws") {
    CHECK_THROWS_AS(GR().reciprocal(), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == mpq_class(3, 4));
    CHECK(parse_rational("-7") == mpq_class(-7));
    CHECK(parse_rational("6/8") == mpq_class(3, 4));  // canonicalized
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
}

TEST_CASE("traits agree across backends") {
    using TE = ScalarTraits<GR>;
    using TF = ScalarTraits<C>;
    CHECK(TE::exact);
    CHECK_FALSE(TF::exact);

    GR i_e = TE::imaginary_unit();
    C i_f = TF::imaginary_unit();
    CHECK(to_complex(i_e * i_e) == C(-1.0, 0.0));
    CHECK(std::abs(i_f * i_f - C(-1.0, 0.0)) < 1e-15);

    GR a(mpq_class(2, 7), mpq_class(-5, 3));
    C af = to_complex(a);
    CHECK(std::abs(TE::abs_sq(a).get_d() - TF::abs_sq(af)) < 1e-12);
    CHECK(std::abs(to_complex(TE::conj(a)) - TF::conj(af)) < 1e-15);
}

TEST_CASE("is_real and is_probability") {
    using TE = ScalarTraits<GR>;
    CHECK(TE::is_real(GR(mpq_class(1, 3)), 0.0));
    CHECK_FALSE(TE::is_real(GR(0, mpq_class(1, 1000000)), 0.0));
    CHECK(is_probability(GR(mpq_class(1, 2)), 0.0));
    CHECK(is_probability(GR(1), 0.0));
    CHECK_FALSE(is_probability(GR(mpq_class(101, 100)), 0.0));
    CHECK_FALSE(is_probability(GR(mpq_class(-1, 100)), 0.0));
    CHECK(is_probability(C(1.0 + 1e-12, 0.0), 1e-9));
    CHECK_FALSE(is_probability(C(0.5, 0.1), 1e-9));
}

TEST_CASE("text rendering") {
    CHECK(GR(mpq_class(1, 2), mpq_class(3, 4)).str() == "1/2 + 3/4 i");
    CHECK(GR(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2 - 3/4 i");
    CHECK(GR(mpq_class(-2)).str() == "-2");
}
