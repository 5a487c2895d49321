#pragma once

#include <stdexcept>
#include <vector>

#include "sharplab/linear_map.hpp"
#include "sharplab/numeric.hpp"

namespace sharplab {

// Doubled wire layout: each wire of dimension d becomes one wire of
// dimension d*d whose index is c*d + k with c the conjugate-copy index and
// k the plain-copy index (conjugate factor most significant). Multi-wire
// maps keep the conjugate and copy factors of each wire adjacent, so the
// doubling of a parallel composite is the parallel composite of the
// doublings. interleave_permutation converts from the naive block layout
// conj(f) (x) f, whose wires are ordered [all conjugate wires, all copies].

template <class S>
LinearMap<S> interleave_permutation(const SpaceType& t) {
    const auto& dims = t.dims();
    const std::size_t total = t.total_dim();
    auto p = LinearMap<S>::zero(t.concat(t), t.doubled());
    for (std::size_t c = 0; c < total; ++c)
        for (std::size_t k = 0; k < total; ++k) {
            // Decompose c and k per wire, re-pack interleaved.
            std::size_t inter = 0, cr = c, kr = k;
            std::vector<std::size_t> cw(dims.size()), kw(dims.size());
            for (std::size_t w = dims.size(); w-- > 0;) {
                cw[w] = cr % dims[w];
                cr /= dims[w];
                kw[w] = kr % dims[w];
                kr /= dims[w];
            }
            for (std::size_t w = 0; w < dims.size(); ++w)
                inter = inter * (dims[w] * dims[w]) + (cw[w] * dims[w] + kw[w]);
            p.at(inter, c * total + k) = ScalarTraits<S>::one();
        }
    return p;
}

/// The double of f: conj(f) (x) f, rewired into the per-wire layout above.
template <class S>
LinearMap<S> double_map(const LinearMap<S>& f) {
    auto raw = compose_par(conjugate(f), f);
    auto p_cod = interleave_permutation<S>(f.codomain());
    auto p_dom = interleave_permutation<S>(f.domain());
    return compose_seq(compose_seq(p_cod, raw), transpose(p_dom));
}

/// Undo the interleaving: recover the block form conj-wires-then-copy-wires.
template <class S>
LinearMap<S> undouble_layout(const LinearMap<S>& m, const SpaceType& dom, const SpaceType& cod) {
    if (m.domain() != dom.doubled() || m.codomain() != cod.doubled())
        throw TypeMismatch(dom.doubled(), m.domain());
    auto p_cod = interleave_permutation<S>(cod);
    auto p_dom = interleave_permutation<S>(dom);
    return compose_seq(compose_seq(transpose(p_cod), m), p_dom);
}

/// Born rule: evaluate the doubled effect of phi against the doubled state
/// psi; equals |<phi, psi>|^2, a nonnegative real.
template <class S>
S born_probability(const LinearMap<S>& phi, const LinearMap<S>& psi) {
    if (!phi.is_state() || !psi.is_state() || phi.codomain() != psi.codomain())
        throw TypeMismatch(phi.codomain(), psi.codomain());
    auto effect = adjoint(double_map(phi));
    return compose_seq(effect, double_map(psi)).scalar_value();
}

/// Doubling quotients global phases: f and g are phase-equal iff their
/// doubles coincide.
template <class S>
bool equal_up_to_global_phase(const LinearMap<S>& f, const LinearMap<S>& g,
                              double tol = kDefaultTol) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
    return approx_equal(double_map(f), double_map(g), tol);
}

/// Sum of already-doubled maps, collapsed to one matrix (an element of the
/// mixed theory).
template <class S>
LinearMap<S> sum_maps(const std::vector<LinearMap<S>>& terms) {
    if (terms.empty()) throw std::invalid_argument("sum_maps needs at least one term");
    auto acc = terms[0];
    for (std::size_t k = 1; k < terms.size(); ++k) acc = acc + terms[k];
    return acc;
}

struct WeightsNotConvex : std::runtime_error {
    WeightsNotConvex() : std::runtime_error("mixture weights must be probabilities summing to 1") {}
};

/// Convex mixture sum_i p_i * double(psi_i). Weights must be probabilities
/// summing to 1 (exactly on the exact backend); states normalized, equal type.
template <class S>
LinearMap<S> mix(const std::vector<S>& weights, const std::vector<LinearMap<S>>& states,
                 double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    if (weights.empty() || weights.size() != states.size())
        throw std::invalid_argument("mix: weights and states must be nonempty and matched");
    S total = T::zero();
    for (const auto& w : weights) {
        if (!is_probability(w, tol)) throw WeightsNotConvex();
        total += w;
    }
    if (!T::eq(total, T::one(), tol)) throw WeightsNotConvex();
    for (std::size_t k = 1; k < states.size(); ++k)
        if (states[k].codomain() != states[0].codomain())
            throw TypeMismatch(states[0].codomain(), states[k].codomain());
    std::vector<LinearMap<S>> terms;
    terms.reserve(states.size());
    for (std::size_t k = 0; k < states.size(); ++k)
        terms.push_back(weights[k] * double_map(states[k]));
    return sum_maps(terms);
}

template <class S>
struct PurityResult {
    bool pure = false;
    /// When pure: double(representative) = scale * m with scale a positive
    /// real (exact backend reports the uncorrected squared scale; float
    /// backend normalizes so scale = 1).
    LinearMap<S> representative;
    S scale = ScalarTraits<S>::one();
};

/// Decide whether a map on doubled spaces is the double of a single map:
/// reshuffle into the (conjugate-block vs copy-block) bipartite matrix,
/// test rank <= 1, and confirm the conjugate-copy structure by rebuilding.
/// Float rank cut: second singular value <= 1e-7 * first.
template <class S>
PurityResult<S> is_pure(const LinearMap<S>& m, const SpaceType& dom, const SpaceType& cod,
                        double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    PurityResult<S> res;
    res.representative = LinearMap<S>::zero(dom, cod);

    if (m.is_zero(tol)) {  // 0 = conj(0) (x) 0
        res.pure = true;
        return res;
    }

    auto block = undouble_layout(m, dom, cod);
    const std::size_t dc = cod.total_dim(), dd = dom.total_dim();
    // R[(co,ci)][(ko,ki)] = block[(co,ko)][(ci,ki)]; pure iff R is the
    // rank-1 outer product vec(conj f) vec(f)^T.
    const std::size_t n = dc * dd;
    std::vector<std::vector<S>> r(n, std::vector<S>(n, T::zero()));
    for (std::size_t co = 0; co < dc; ++co)
        for (std::size_t ko = 0; ko < dc; ++ko)
            for (std::size_t ci = 0; ci < dd; ++ci)
                for (std::size_t ki = 0; ki < dd; ++ki)
                    r[co * dd + ci][ko * dd + ki] = block.at(co * dc + ko, ci * dd + ki);

    if constexpr (T::exact) {
        if (matrix_rank(r) > 1) return res;
    } else {
        auto rm = LinearMap<S>::zero(SpaceType{n}, SpaceType{n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rm.at(i, j) = r[i][j];
        auto sv = singular_values(rm);
        if (sv.size() >= 2 && sv[1] > 1e-7 * sv[0]) return res;
    }

    // Row with the largest diagonal entry |f_i|^2 recovers conj(f_i) vec(f).
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (T::abs_sq(r[i][i]) > T::abs_sq(r[best][best])) best = i;
    if (T::is_zero(r[best][best], tol)) return res;  // rank 1 but not of double form

    auto rep = LinearMap<S>::zero(dom, cod);
    for (std::size_t ko = 0; ko < dc; ++ko)
        for (std::size_t ki = 0; ki < dd; ++ki) rep.at(ko, ki) = r[best][ko * dd + ki];

    if constexpr (T::exact) {
        // double(rep) = |f_best|^2 * m exactly, or m was not a double.
        S scale = r[best][best];
        if (!approx_equal(double_map(rep), scale * m, 0)) return res;
        res.pure = true;
        res.representative = rep;
        res.scale = scale;
    } else {
        double norm = std::sqrt(std::abs(to_c(r[best][best])));
        auto scaled = S(1.0 / norm) * rep;
        if (!approx_equal(double_map(scaled), m, std::max(tol, 1e-6 * std::abs(to_c(r[best][best])))))
            return res;
        res.pure = true;
        res.representative = scaled;
    }
    return res;
}

}  // namespace sharplab
