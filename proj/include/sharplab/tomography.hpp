#pragma once

#include <stdexcept>
#include <vector>

#include "sharplab/linear_map.hpp"
#include "sharplab/numeric.hpp"
#include "sharplab/theories.hpp"

namespace sharplab {

/// One tomography probe: an unnormalized state together with its exact
/// squared norm (1 or a small integer), so all statistics stay rational on
/// the exact backend.
template <class S>
struct ProbeState {
    LinearMap<S> vec;
    S norm_sq;
};

/// Informationally complete probe family: per wire of dimension d, the d^2
/// states {e_j} u {e_j+e_k} u {e_j + i e_k}; local mode takes per-wire
/// products. Completeness of the doubled family is rank-checked at build
/// time.
template <class S>
struct ProbeFamily {
    SpaceType dims;
    bool local = true;
    std::vector<ProbeState<S>> states;
};

namespace detail {

template <class S>
std::vector<ProbeState<S>> single_wire_probes(std::size_t d) {
    using T = ScalarTraits<S>;
    std::vector<ProbeState<S>> out;
    auto type = SpaceType::wire(d);
    for (std::size_t j = 0; j < d; ++j)
        out.push_back({LinearMap<S>::basis_state(d, j), T::one()});
    const S two = T::one() + T::one();
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            auto plus = LinearMap<S>::zero(SpaceType::unit(), type);
            plus.at(j, 0) = T::one();
            plus.at(k, 0) = T::one();
            out.push_back({plus, two});
            auto plus_i = LinearMap<S>::zero(SpaceType::unit(), type);
            plus_i.at(j, 0) = T::one();
            plus_i.at(k, 0) = T::imaginary_unit();
            out.push_back({plus_i, two});
        }
    return out;
}

}  // namespace detail

template <class S>
ProbeFamily<S> probe_family(const SpaceType& dims, bool local = true) {
    if (dims.is_unit()) {
        // Unit wire: the single trivial state 1.
        return {dims, local, {{LinearMap<S>::scalar(ScalarTraits<S>::one()), ScalarTraits<S>::one()}}};
    }
    std::vector<ProbeState<S>> acc = {{LinearMap<S>::scalar(ScalarTraits<S>::one()), ScalarTraits<S>::one()}};
    for (auto d : dims.dims()) {
        auto wire = detail::single_wire_probes<S>(d);
        std::vector<ProbeState<S>> next;
        next.reserve(acc.size() * wire.size());
        for (const auto& a : acc)
            for (const auto& w : wire)
                next.push_back({compose_par(a.vec, w.vec), a.norm_sq * w.norm_sq});
        acc = std::move(next);
    }

    // Internal completeness check: the doubled states must span the full
    // doubled state space.
    const std::size_t t = dims.total_dim();
    std::vector<std::vector<S>> rows;
    rows.reserve(acc.size());
    for (const auto& p : acc) rows.push_back(double_map(p.vec).entries());
    if (matrix_rank(rows) != t * t)
        throw std::logic_error("probe family is not informationally complete for " + dims.str());

    return {dims, local, std::move(acc)};
}

/// Raw wire dimensions of a doubled type (each wire is a perfect square).
inline SpaceType sqrt_dims(const SpaceType& doubled) {
    std::vector<std::size_t> out;
    for (auto d : doubled.dims()) {
        std::size_t r = 0;
        while (r * r < d) ++r;
        if (r * r != d) throw std::invalid_argument("not a doubled type: " + doubled.str());
        out.push_back(r);
    }
    return SpaceType(std::move(out));
}

/// Probe-statistic equality of doubled maps: every scalar
/// effect . f . state agrees within tol over the product families. For
/// informationally complete families this coincides with matrix equality.
template <class S>
bool equal_by_tomography(const LinearMap<S>& f, const LinearMap<S>& g,
                         const ProbeFamily<S>& dom_family, const ProbeFamily<S>& cod_family,
                         double tol = kDefaultTol) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        throw TypeMismatch(f.domain(), g.domain());
    for (const auto& in : dom_family.states) {
        auto fs = compose_seq(f, double_map(in.vec));
        auto gs = compose_seq(g, double_map(in.vec));
        for (const auto& out : cod_family.states) {
            auto eff = adjoint(double_map(out.vec));
            auto a = compose_seq(eff, fs).scalar_value();
            auto b = compose_seq(eff, gs).scalar_value();
            if (!ScalarTraits<S>::eq(a, b, tol)) return false;
        }
    }
    return true;
}

template <class S>
bool equal_by_tomography(const LinearMap<S>& f, const LinearMap<S>& g, double tol = kDefaultTol) {
    auto dom_fam = probe_family<S>(sqrt_dims(f.domain()));
    auto cod_fam = probe_family<S>(sqrt_dims(f.codomain()));
    return equal_by_tomography(f, g, dom_fam, cod_fam, tol);
}

/// The same check with a dimension-2 ancilla wire adjoined as context, so
/// the verdict also covers probes of the form effect (x) effect' over
/// f (x) id.
template <class S>
bool equal_by_tomography_with_ancilla(const LinearMap<S>& f, const LinearMap<S>& g,
                                      double tol = kDefaultTol) {
    auto anc = LinearMap<S>::identity(SpaceType::wire(4));  // doubled qubit wire
    auto fa = compose_par(f, anc);
    auto ga = compose_par(g, anc);
    return equal_by_tomography(fa, ga, tol);
}

}  // namespace sharplab
