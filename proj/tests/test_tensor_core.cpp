#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sharplab/linear_map.hpp"
#include "sharplab/probes.hpp"

using namespace sharplab;
using GR = GaussianRational;
using C = std::complex<double>;

namespace {

// Index-summation oracle for g.f, independent of compose_seq's loop order.
template <class S>
LinearMap<S> matmul_oracle(const LinearMap<S>& g, const LinearMap<S>& f) {
    auto out = LinearMap<S>::zero(f.domain(), g.codomain());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) {
            S acc = ScalarTraits<S>::zero();
            for (std::size_t k = 0; k < f.rows(); ++k) acc += g.at(r, k) * f.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

LinearMap<GR> from_ints(SpaceType dom, SpaceType cod, std::vector<std::pair<long, long>> cells) {
    std::vector<GR> e;
    for (auto [re, im] : cells) e.push_back(GR(mpq_class(re), mpq_class(im)));
    return LinearMap<GR>(std::move(dom), std::move(cod), std::move(e));
}

}  // namespace

TEST_CASE("space types") {
    CHECK(SpaceType::unit().total_dim() == 1);
    CHECK(SpaceType({2, 3}).total_dim() == 6);
    CHECK(SpaceType({4}) != SpaceType({2, 2}));
    CHECK(SpaceType({2}).concat(SpaceType({3})) == SpaceType({2, 3}));
    CHECK(SpaceType({2, 3}).doubled() == SpaceType({4, 9}));
    CHECK_THROWS_AS(SpaceType({0}), std::invalid_argument);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(LinearMap<GR>(SpaceType({2}), SpaceType({2}), std::vector<GR>(3)),
                    std::invalid_argument);
    auto f = LinearMap<GR>::identity(SpaceType({2}));
    auto s = LinearMap<GR>::basis_state(3, 0);
    CHECK_THROWS_AS(compose_seq(f, s), TypeMismatch);
    CHECK_THROWS_AS(f + s, TypeMismatch);
}

TEST_CASE("sequential composition vs oracle") {
    auto t = SpaceType({2});
    auto f = from_ints(t, t, {{1, 2}, {0, -1}, {3, 0}, {-2, 5}});
    auto g = from_ints(t, t, {{0, 1}, {4, 0}, {1, 1}, {2, -3}});
    CHECK(approx_equal(compose_seq(g, f), matmul_oracle(g, f), 0.0));
    // identity is neutral
    auto id = LinearMap<GR>::identity(t);
    CHECK(approx_equal(compose_seq(id, f), f, 0.0));
    CHECK(approx_equal(compose_seq(f, id), f, 0.0));
}

TEST_CASE("kronecker oracle: id2 (x) X") {
    auto t = SpaceType({2});
    auto id = LinearMap<GR>::identity(t);
    auto X = from_ints(t, t, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
    auto k = compose_par(id, X);
    CHECK(k.domain() == SpaceType({2, 2}));
    // swaps within each block: 00<->01, 10<->11
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            bool hit = (r == 0 && c == 1) || (r == 1 && c == 0) || (r == 2 && c == 3) ||
                       (r == 3 && c == 2);
            CHECK(k.at(r, c) == (hit ? GR(1) : GR(0)));
        }
}

TEST_CASE("adjoint characterization over basis pairs") {
    auto t = SpaceType({3});
    ProbeGen<GR> gen(11);
    auto f = gen.random_process(t, t);
    auto fd = adjoint(f);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            auto ej = LinearMap<GR>::basis_state(3, j);
            auto ek = LinearMap<GR>::basis_state(3, k);
            // <f† ej, ek> = <ej, f ek>
            CHECK(inner(compose_seq(fd, ej), ek) == inner(ej, compose_seq(f, ek)));
        }
}

TEST_CASE("adjoint example") {
    auto t = SpaceType({2});
    auto f = from_ints(t, t, {{0, 0}, {1, 0}, {0, 0}, {0, 0}});
    auto fd = adjoint(f);
    CHECK(fd.at(0, 0) == GR(0));
    CHECK(fd.at(1, 0) == GR(1));
    CHECK(fd.at(0, 1) == GR(0));
    CHECK(fd.at(1, 1) == GR(0));
}

TEST_CASE("transpose/conjugate/adjoint interplay") {
    ProbeGen<GR> gen(5);
    auto t = SpaceType({2});
    auto f = gen.random_process(t, SpaceType({3}));
    CHECK(approx_equal(adjoint(f), transpose(conjugate(f)), 0.0));
    CHECK(approx_equal(adjoint(f), conjugate(transpose(f)), 0.0));
    CHECK(approx_equal(transpose(transpose(f)), f, 0.0));
    CHECK(approx_equal(conjugate(conjugate(f)), f, 0.0));
    // real entries: transpose == adjoint
    auto real = from_ints(t, t, {{1, 0}, {2, 0}, {-3, 0}, {4, 0}});
    CHECK(approx_equal(transpose(real), adjoint(real), 0.0));
}

TEST_CASE("interchange law") {
    ProbeGen<GR> gen(7);
    auto t2 = SpaceType({2}), t3 = SpaceType({3});
    for (int k = 0; k < 10; ++k) {
        auto f1 = gen.random_process(t2, t2);
        auto f2 = gen.random_process(t2, t2);
        auto g1 = gen.random_process(t3, t3);
        auto g2 = gen.random_process(t3, t3);
        // (f2 . f1) (x) (g2 . g1) = (f2 (x) g2) . (f1 (x) g1)
        auto lhs = compose_par(compose_seq(f2, f1), compose_seq(g2, g1));
        auto rhs = compose_seq(compose_par(f2, g2), compose_par(f1, g1));
        CHECK(approx_equal(lhs, rhs, 0.0));
    }
}

TEST_CASE("backend agreement") {
    ProbeGen<GR> gen(13);
    auto t = SpaceType({3});
    auto f = gen.random_process(t, t);
    auto g = gen.random_process(t, t);
    auto lift = [](const LinearMap<GR>& m) {
        std::vector<C> e;
        for (const auto& s : m.entries()) e.push_back(to_complex(s));
        return LinearMap<C>(m.domain(), m.codomain(), std::move(e));
    };
    auto exact = compose_seq(g, f);
    auto fl = compose_seq(lift(g), lift(f));
    for (std::size_t k = 0; k < exact.entries().size(); ++k)
        CHECK(std::abs(to_complex(exact.entries()[k]) - fl.entries()[k]) < 1e-9);
}

TEST_CASE("inner form and render") {
    auto a = LinearMap<GR>::state(SpaceType({2}), {GR(0, 1, 1, 1), GR(1)});  // (i, 1)
    auto b = LinearMap<GR>::state(SpaceType({2}), {GR(1), GR(0)});
    CHECK(inner(a, b) == GR(0, 1, -1, 1));  // conj(i)*1
    CHECK(inner(a, a) == GR(2));
    CHECK(render(b) == "[1\n 0]");
}
