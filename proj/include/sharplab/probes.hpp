#pragma once

#include <random>
#include <vector>

#include "sharplab/linear_map.hpp"
#include "sharplab/theories.hpp"

namespace sharplab {

/// Seeded pseudo-random probe source. std::mt19937_64 with a fixed draw
/// order, so identical seeds give identical probe streams across runs.
/// Float mode draws Gaussian entries (states normalized); exact mode draws
/// small-rational entries and leaves states unnormalized.
template <class S>
class ProbeGen {
  public:
    explicit ProbeGen(std::uint64_t seed) : rng_(seed) {}

    S random_entry() {
        if constexpr (ScalarTraits<S>::exact) {
            auto num = [&] { return (long)(rng_() % 7) - 3; };
            auto den = [&] { return (long)(rng_() % 3) + 1; };
            long rn = num(), in_ = num();
            return GaussianRational(rn, den(), in_, den());
        } else {
            std::normal_distribution<double> g;
            return {g(rng_), g(rng_)};
        }
    }

    /// Nonzero state; Hermitian-normalized in float mode.
    LinearMap<S> random_state(const SpaceType& type) {
        while (true) {
            std::vector<S> e(type.total_dim());
            for (auto& x : e) x = random_entry();
            auto psi = LinearMap<S>::state(type, std::move(e));
            if (psi.is_zero(0)) continue;
            if constexpr (!ScalarTraits<S>::exact) {
                double n = std::sqrt(std::abs(to_c(inner(psi, psi))));
                psi = S(1.0 / n) * psi;
            }
            return psi;
        }
    }

    LinearMap<S> random_process(const SpaceType& dom, const SpaceType& cod) {
        std::vector<S> e(dom.total_dim() * cod.total_dim());
        for (auto& x : e) x = random_entry();
        return LinearMap<S>(dom, cod, std::move(e));
    }

    /// Unit-modulus scalar: exact mode uses the Gaussian-rational units.
    S random_phase() {
        if constexpr (ScalarTraits<S>::exact) {
            switch (rng_() % 4) {
                case 0: return GaussianRational(1L);
                case 1: return GaussianRational(-1L);
                case 2: return GaussianRational::i();
                default: return -GaussianRational::i();
            }
        } else {
            std::uniform_real_distribution<double> u(0, 2 * 3.141592653589793);
            double th = u(rng_);
            return {std::cos(th), std::sin(th)};
        }
    }

    std::uint64_t raw() { return rng_(); }

  private:
    std::mt19937_64 rng_;
};

/// Deterministic exactly-normalized states: Pythagorean amplitude pairs
/// embedded in the first two coordinates, plus the basis states. These stay
/// rational, so the normalization-conditioned axioms are exercised on the
/// exact backend too.
template <class S>
std::vector<LinearMap<S>> normalized_rational_states(const SpaceType& type) {
    using T = ScalarTraits<S>;
    std::vector<LinearMap<S>> out;
    const std::size_t n = type.total_dim();
    for (std::size_t j = 0; j < n; ++j) {
        auto e = LinearMap<S>::zero(SpaceType::unit(), type);
        e.at(j, 0) = T::one();
        out.push_back(e);
    }
    if (n < 2) return out;
    auto pyth = [&](long a, long b, long c, bool imag_second) {
        auto psi = LinearMap<S>::zero(SpaceType::unit(), type);
        if constexpr (T::exact) {
            psi.at(0, 0) = GaussianRational(mpq_class(a, c));
            psi.at(1, 0) = imag_second ? GaussianRational(mpq_class(0), mpq_class(b, c))
                                       : GaussianRational(mpq_class(b, c));
        } else {
            psi.at(0, 0) = {double(a) / c, 0.0};
            psi.at(1, 0) = imag_second ? S{0.0, double(b) / c} : S{double(b) / c, 0.0};
        }
        out.push_back(psi);
    };
    pyth(3, 4, 5, false);
    pyth(4, 3, 5, false);
    pyth(3, 4, 5, true);
    pyth(5, 12, 13, false);
    return out;
}

}  // namespace sharplab
