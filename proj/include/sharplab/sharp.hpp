#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sharplab/linear_map.hpp"
#include "sharplab/probes.hpp"
#include "sharplab/report.hpp"
#include "sharplab/theories.hpp"
#include "sharplab/tomography.hpp"

namespace sharplab {

/// A candidate test structure: a map from doubled-theory states to effects
/// on the same type, together with its action on processes. The scalar
/// action is the 1x1 case of the process action.
template <class S>
struct SharpCandidate {
    std::string name;
    std::function<LinearMap<S>(const LinearMap<S>&)> state_sharp;    // state -> effect
    std::function<LinearMap<S>(const LinearMap<S>&)> process_sharp;  // reverses dom/cod

    S scalar_sharp(const S& s) const {
        return process_sharp(LinearMap<S>::scalar(s)).scalar_value();
    }
};

template <class S>
SharpCandidate<S> hermitian_candidate() {
    return {"hermitian", [](const LinearMap<S>& m) { return adjoint(m); },
            [](const LinearMap<S>& m) { return adjoint(m); }};
}

template <class S>
SharpCandidate<S> transpose_candidate() {
    return {"transpose", [](const LinearMap<S>& m) { return transpose(m); },
            [](const LinearMap<S>& m) { return transpose(m); }};
}

/// Basis state e_j viewed as a state of an arbitrary composite type.
template <class S>
LinearMap<S> basis_in(const SpaceType& type, std::size_t j) {
    auto m = LinearMap<S>::zero(SpaceType::unit(), type);
    m.at(j, 0) = ScalarTraits<S>::one();
    return m;
}

/// Probe material for the axiom and lemma checks, all living in the doubled
/// theory: pure doubled states D(psi), doubled processes D(f), mixed
/// complex-coefficient sums of doubles (the extended states of section 6),
/// and physical convex mixtures. The raw pure states are kept so
/// phase-insensitive comparisons can re-double them.
template <class S>
struct ProbeSet {
    SpaceType raw_dims;
    double tol = kDefaultTol;
    std::vector<LinearMap<S>> raw_states;        // CLM states (pure material)
    std::vector<LinearMap<S>> raw_normalized;    // exactly normalized CLM states
    std::vector<LinearMap<S>> doubled_procs;     // doubled processes
    std::vector<LinearMap<S>> mixed_states;      // arbitrary-sum doubled vectors
    std::vector<LinearMap<S>> convex_mixtures;   // nonnegative mixtures of doubles
};

/// Deterministic d^2 family + `samples` seeded random probes.
template <class S>
ProbeSet<S> make_probe_set(const SpaceType& dims, std::uint64_t seed, std::size_t samples,
                           double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    ProbeSet<S> ps;
    ps.raw_dims = dims;
    ps.tol = tol;
    auto fam = probe_family<S>(dims);
    for (const auto& p : fam.states)
        if (!p.vec.is_scalar()) ps.raw_states.push_back(p.vec);
    ps.raw_normalized = normalized_rational_states<S>(dims);

    ProbeGen<S> gen(seed);
    auto dd = dims.doubled();
    S half;
    if constexpr (T::exact)
        half = GaussianRational(mpq_class(1, 2));
    else
        half = S(0.5, 0.0);
    for (std::size_t k = 0; k < samples; ++k) {
        ps.raw_states.push_back(gen.random_state(dims));
        ps.doubled_procs.push_back(double_map(gen.random_process(dims, dims)));
        ps.mixed_states.push_back(gen.random_state(dd));
        if (k + 1 < ps.raw_states.size()) {
            auto a = ps.raw_states[k], b = ps.raw_states[k + 1];
            ps.convex_mixtures.push_back(half * double_map(a) + half * double_map(b));
        }
    }
    // The paper's untestable mixed vector D(e0) + i D(e1), when it fits.
    if (dims.total_dim() >= 2) {
        auto d0 = double_map(basis_in<S>(dims, 0));
        auto d1 = double_map(basis_in<S>(dims, 1));
        ps.mixed_states.push_back(d0 + T::imaginary_unit() * d1);
    }
    // Scaled doubles are mixed-theory states too.
    for (std::size_t k = 0; k < std::min<std::size_t>(8, ps.raw_states.size()); ++k)
        ps.mixed_states.push_back(double_map(ps.raw_states[k]));
    if (ps.convex_mixtures.empty())
        ps.convex_mixtures.push_back(double_map(ps.raw_states[0]));
    return ps;
}

enum class Axiom { Composability, Transformability, Probabilities, Testability, Sharpness };

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Composability: return "composability";
        case Axiom::Transformability: return "transformability";
        case Axiom::Probabilities: return "probabilities";
        case Axiom::Testability: return "testability";
        default: return "sharpness";
    }
}

inline const char* axiom_anchor(Axiom a) {
    switch (a) {
        case Axiom::Composability: return "Axiom 1: Composability of tests";
        case Axiom::Transformability: return "Axiom 2: Transformability of tests";
        case Axiom::Probabilities: return "Axiom 3: Tests produce probabilities";
        case Axiom::Testability: return "Axiom 4: Testability of all states";
        default: return "Axiom 5: Sharpness of tests";
    }
}

namespace detail {

template <class S>
std::string witness_scalar(const char* label, const S& s) {
    return std::string(label) + " = " + ScalarTraits<S>::str(s);
}

template <class S>
bool maps_eq(const LinearMap<S>& a, const LinearMap<S>& b, double tol) {
    return approx_equal(a, b, tol);
}

// Candidate-relative normalization: psi_sharp . psi == 1.
template <class S>
bool candidate_normalized(const SharpCandidate<S>& c, const LinearMap<S>& doubled_state,
                          double tol) {
    auto s = compose_seq(c.state_sharp(doubled_state), doubled_state).scalar_value();
    return ScalarTraits<S>::eq(s, ScalarTraits<S>::one(), tol);
}

}  // namespace detail

/// Run one of the five axioms for a candidate over a probe set. Failures
/// are verdicts with witnesses, never exceptions.
template <class S>
CheckReport check_axiom(const SharpCandidate<S>& c, Axiom axiom, const ProbeSet<S>& ps) {
    using T = ScalarTraits<S>;
    CheckReport rep;
    rep.check_id = c.name + "/" + axiom_name(axiom);
    rep.paper_anchor = axiom_anchor(axiom);
    const double tol = ps.tol;

    switch (axiom) {
        case Axiom::Composability: {
            // (psi (x) phi)^sharp = psi^sharp (x) phi^sharp
            for (std::size_t i = 0; i < ps.raw_states.size(); ++i) {
                const auto& psi = ps.raw_states[i];
                const auto& phi = ps.raw_states[(i * 7 + 3) % ps.raw_states.size()];
                auto dpsi = double_map(psi), dphi = double_map(phi);
                auto lhs = c.state_sharp(compose_par(dpsi, dphi));
                auto rhs = compose_par(c.state_sharp(dpsi), c.state_sharp(dphi));
                ++rep.probes;
                if (!detail::maps_eq(lhs, rhs, tol))
                    rep.fail("probe pair index " + std::to_string(i));
            }
            for (const auto& m : ps.mixed_states) {
                auto lhs = c.state_sharp(compose_par(m, m));
                auto rhs = compose_par(c.state_sharp(m), c.state_sharp(m));
                ++rep.probes;
                if (!detail::maps_eq(lhs, rhs, tol)) rep.fail("mixed-state probe");
            }
            break;
        }
        case Axiom::Transformability: {
            // (f . psi)^sharp = psi^sharp . f^sharp, including mixed states.
            std::vector<const LinearMap<S>*> states;
            for (const auto& s : ps.raw_states) states.push_back(&s);
            for (std::size_t i = 0; i < ps.doubled_procs.size(); ++i) {
                const auto& f = ps.doubled_procs[i];
                auto apply = [&](const LinearMap<S>& dstate) {
                    auto lhs = c.state_sharp(compose_seq(f, dstate));
                    auto rhs = compose_seq(c.state_sharp(dstate), c.process_sharp(f));
                    ++rep.probes;
                    if (!detail::maps_eq(lhs, rhs, tol))
                        rep.fail("process probe index " + std::to_string(i));
                };
                apply(double_map(*states[i % states.size()]));
                apply(ps.mixed_states[i % ps.mixed_states.size()]);
            }
            break;
        }
        case Axiom::Probabilities: {
            // On candidate-normalized pairs, psi^sharp . phi is a probability.
            std::vector<LinearMap<S>> pool = ps.raw_normalized;
            for (const auto& s : ps.raw_states) pool.push_back(s);
            std::vector<LinearMap<S>> doubles, effects;
            std::vector<bool> normed;
            for (const auto& p : pool) {
                doubles.push_back(double_map(p));
                effects.push_back(c.state_sharp(doubles.back()));
                normed.push_back(detail::candidate_normalized(c, doubles.back(), tol));
            }
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (!normed[i]) continue;
                for (std::size_t j = 0; j < pool.size(); j += 3) {
                    if (!normed[j]) continue;
                    auto s = compose_seq(effects[i], doubles[j]).scalar_value();
                    ++rep.probes;
                    if (!is_probability(s, tol)) rep.fail(detail::witness_scalar("psi_sharp.phi", s));
                }
            }
            break;
        }
        case Axiom::Testability: {
            // forall chi != 0: s = chi^sharp . chi is real and > 0; then
            // r^2 := 1/s witnesses r^sharp r chi^sharp chi = 1.
            auto probe = [&](const LinearMap<S>& chi, const std::string& label) {
                if (chi.is_zero(tol)) return;
                auto s = compose_seq(c.state_sharp(chi), chi).scalar_value();
                ++rep.probes;
                bool ok = T::is_real(s, tol);
                if constexpr (T::exact)
                    ok = ok && T::real(s) > 0;
                else
                    ok = ok && T::real(s) > tol;
                if (!ok) rep.fail(label + ", " + detail::witness_scalar("chi_sharp.chi", s));
            };
            for (const auto& psi : ps.raw_states) probe(double_map(psi), "pure double");
            for (std::size_t k = 0; k < ps.mixed_states.size(); ++k)
                probe(ps.mixed_states[k], "mixed state " + std::to_string(k));
            break;
        }
        case Axiom::Sharpness: {
            // On candidate-normalized pairs: psi^sharp . phi = 1 iff the
            // underlying states are equal up to global phase.
            std::vector<LinearMap<S>> pool = ps.raw_normalized;
            if constexpr (!T::exact)
                for (const auto& s : ps.raw_states) pool.push_back(s);
            ProbeGen<S> phase_gen(0x5eed);
            std::vector<std::pair<LinearMap<S>, LinearMap<S>>> pairs;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                pairs.push_back({pool[i], pool[(i * 5 + 1) % pool.size()]});
                pairs.push_back({pool[i], phase_gen.random_phase() * pool[i]});
            }
            for (const auto& [psi, phi] : pairs) {
                auto dpsi = double_map(psi), dphi = double_map(phi);
                if (!detail::candidate_normalized(c, dpsi, tol) ||
                    !detail::candidate_normalized(c, dphi, tol))
                    continue;
                auto s = compose_seq(c.state_sharp(dpsi), dphi).scalar_value();
                bool is_one = T::eq(s, T::one(), tol);
                bool phase_eq = equal_up_to_global_phase(psi, phi, tol);
                ++rep.probes;
                if (is_one != phase_eq)
                    rep.fail(detail::witness_scalar("psi_sharp.phi", s) +
                             (phase_eq ? ", states phase-equal" : ", states distinct"));
            }
            break;
        }
    }
    return rep;
}

enum class Lemma {
    Certainty,
    ScalarIdentity,
    StateInvolution,
    EffectInvolution,
    ProcessInvolution,
    DaggerSeq,
    DaggerPar,
    ConstraintC1,
    ConstraintC2,
};

inline const char* lemma_name(Lemma l) {
    switch (l) {
        case Lemma::Certainty: return "certainty";
        case Lemma::ScalarIdentity: return "scalar_identity";
        case Lemma::StateInvolution: return "state_involution";
        case Lemma::EffectInvolution: return "effect_involution";
        case Lemma::ProcessInvolution: return "process_involution";
        case Lemma::DaggerSeq: return "dagger_seq";
        case Lemma::DaggerPar: return "dagger_par";
        case Lemma::ConstraintC1: return "constraint_C1";
        default: return "constraint_C2";
    }
}

inline const char* lemma_anchor(Lemma l) {
    switch (l) {
        case Lemma::Certainty: return "Lemma 1: sharp(1) = 1";
        case Lemma::ScalarIdentity: return "Lemma 4: sharp(r) = r";
        case Lemma::StateInvolution: return "Lemma 2: involutive on normalised states";
        case Lemma::EffectInvolution: return "Lemma 3: involutive on tests";
        case Lemma::ProcessInvolution: return "Theorem: the test structure is involutive";
        case Lemma::DaggerSeq: return "Theorem (dagger): sharp(g.f) = sharp(f).sharp(g)";
        case Lemma::DaggerPar: return "Theorem (dagger): sharp(f(x)g) = sharp(f)(x)sharp(g)";
        case Lemma::ConstraintC1: return "Theorem (dagger) proof: constraint C1";
        default: return "Theorem (dagger) proof: constraint C2";
    }
}

template <class S>
CheckReport verify_lemma(const SharpCandidate<S>& c, Lemma lemma, const ProbeSet<S>& ps) {
    using T = ScalarTraits<S>;
    CheckReport rep;
    rep.check_id = c.name + "/" + lemma_name(lemma);
    rep.paper_anchor = lemma_anchor(lemma);
    const double tol = ps.tol;

    auto all_doubled_states = [&] {
        std::vector<LinearMap<S>> out;
        for (const auto& s : ps.raw_states) out.push_back(double_map(s));
        for (const auto& m : ps.mixed_states) out.push_back(m);
        return out;
    };

    switch (lemma) {
        case Lemma::Certainty: {
            auto s = c.scalar_sharp(T::one());
            ++rep.probes;
            if (!T::eq(s, T::one(), tol)) rep.fail(detail::witness_scalar("sharp(1)", s));
            break;
        }
        case Lemma::ScalarIdentity: {
            // 50 grid values of r in [0,1].
            for (int k = 0; k <= 50; ++k) {
                S r;
                if constexpr (T::exact)
                    r = GaussianRational(mpq_class(k, 50));
                else
                    r = S(double(k) / 50.0, 0.0);
                auto s = c.scalar_sharp(r);
                ++rep.probes;
                if (!T::eq(s, r, tol))
                    rep.fail("r = " + T::str(r) + ", " + detail::witness_scalar("sharp(r)", s));
            }
            break;
        }
        case Lemma::StateInvolution: {
            for (const auto& st : all_doubled_states()) {
                auto back = c.process_sharp(c.state_sharp(st));
                ++rep.probes;
                if (!detail::maps_eq(back, st, tol)) rep.fail("state probe");
            }
            break;
        }
        case Lemma::EffectInvolution: {
            for (const auto& st : all_doubled_states()) {
                auto eff = c.state_sharp(st);
                auto back = c.process_sharp(c.process_sharp(eff));
                ++rep.probes;
                if (!detail::maps_eq(back, eff, tol)) rep.fail("effect probe");
            }
            break;
        }
        case Lemma::ProcessInvolution: {
            for (const auto& f : ps.doubled_procs) {
                auto back = c.process_sharp(c.process_sharp(f));
                ++rep.probes;
                if (!detail::maps_eq(back, f, tol)) rep.fail("process probe");
            }
            break;
        }
        case Lemma::DaggerSeq: {
            for (std::size_t i = 0; i + 1 < ps.doubled_procs.size(); i += 2) {
                const auto& f = ps.doubled_procs[i];
                const auto& g = ps.doubled_procs[i + 1];
                auto lhs = c.process_sharp(compose_seq(g, f));
                auto rhs = compose_seq(c.process_sharp(f), c.process_sharp(g));
                ++rep.probes;
                if (!detail::maps_eq(lhs, rhs, tol)) rep.fail("pair index " + std::to_string(i));
            }
            break;
        }
        case Lemma::DaggerPar: {
            for (std::size_t i = 0; i + 1 < ps.doubled_procs.size(); i += 2) {
                const auto& f = ps.doubled_procs[i];
                const auto& g = ps.doubled_procs[i + 1];
                auto lhs = c.process_sharp(compose_par(f, g));
                auto rhs = compose_par(c.process_sharp(f), c.process_sharp(g));
                ++rep.probes;
                if (!detail::maps_eq(lhs, rhs, tol)) rep.fail("pair index " + std::to_string(i));
            }
            break;
        }
        case Lemma::ConstraintC1: {
            // Two routes through composability+transformability on
            // (f.psi) (x) (g.phi) agree.
            for (std::size_t i = 0; i + 1 < ps.doubled_procs.size(); i += 2) {
                const auto& f = ps.doubled_procs[i];
                const auto& g = ps.doubled_procs[i + 1];
                auto dpsi = double_map(ps.raw_states[i % ps.raw_states.size()]);
                auto dphi = double_map(ps.raw_states[(i + 1) % ps.raw_states.size()]);
                auto whole = c.state_sharp(
                    compose_seq(compose_par(f, g), compose_par(dpsi, dphi)));
                auto via_tensor = compose_seq(
                    compose_par(c.state_sharp(dpsi), c.state_sharp(dphi)),
                    c.process_sharp(compose_par(f, g)));
                auto via_parts = compose_par(
                    compose_seq(c.state_sharp(dpsi), c.process_sharp(f)),
                    compose_seq(c.state_sharp(dphi), c.process_sharp(g)));
                ++rep.probes;
                if (!detail::maps_eq(whole, via_tensor, tol) ||
                    !detail::maps_eq(whole, via_parts, tol))
                    rep.fail("tuple index " + std::to_string(i));
            }
            break;
        }
        case Lemma::ConstraintC2: {
            // Two routes through transformability on g.f.psi agree.
            for (std::size_t i = 0; i + 1 < ps.doubled_procs.size(); i += 2) {
                const auto& f = ps.doubled_procs[i];
                const auto& g = ps.doubled_procs[i + 1];
                auto dpsi = double_map(ps.raw_states[i % ps.raw_states.size()]);
                auto whole = c.state_sharp(compose_seq(g, compose_seq(f, dpsi)));
                auto via_whole_proc =
                    compose_seq(c.state_sharp(dpsi), c.process_sharp(compose_seq(g, f)));
                auto via_nested = compose_seq(
                    compose_seq(c.state_sharp(dpsi), c.process_sharp(f)), c.process_sharp(g));
                ++rep.probes;
                if (!detail::maps_eq(whole, via_whole_proc, tol) ||
                    !detail::maps_eq(whole, via_nested, tol))
                    rep.fail("tuple index " + std::to_string(i));
            }
            break;
        }
    }
    return rep;
}

/// The paper's transpose counterexample, run with psi = e0, phi = e1 on a
/// wire of dimension d >= 2: each self-test gives 1, the cross test 0, and
/// the sum state chi = D(psi) + i D(phi) tests to exactly 0. Exact backend
/// only makes the zero literal; any backend reproduces it.
template <class S>
struct TransposeCounterexample {
    S self_psi, self_phi, cross, chi_transpose, chi_hermitian;
    CheckReport report;
};

template <class S>
TransposeCounterexample<S> transpose_counterexample(std::size_t d = 2) {
    using T = ScalarTraits<S>;
    TransposeCounterexample<S> out;
    auto type = SpaceType::wire(d);
    auto dpsi = double_map(basis_in<S>(type, 0));
    auto dphi = double_map(basis_in<S>(type, 1));
    auto tr = transpose_candidate<S>();
    auto herm = hermitian_candidate<S>();

    out.self_psi = compose_seq(tr.state_sharp(dpsi), dpsi).scalar_value();
    out.self_phi = compose_seq(tr.state_sharp(dphi), dphi).scalar_value();
    out.cross = compose_seq(tr.state_sharp(dpsi), dphi).scalar_value();
    auto chi = dpsi + T::imaginary_unit() * dphi;
    out.chi_transpose = compose_seq(tr.state_sharp(chi), chi).scalar_value();
    out.chi_hermitian = compose_seq(herm.state_sharp(chi), chi).scalar_value();

    auto& rep = out.report;
    rep.check_id = "transpose/counterexample";
    rep.paper_anchor = "Thm (transpose): 1+0+0+i^2 = 0 violates testability";
    rep.probes = 4;
    const S two = T::one() + T::one();
    if (!T::eq(out.self_psi, T::one(), kDefaultTol)) rep.fail(detail::witness_scalar("self_psi", out.self_psi));
    if (!T::eq(out.self_phi, T::one(), kDefaultTol)) rep.fail(detail::witness_scalar("self_phi", out.self_phi));
    if (!T::is_zero(out.cross, kDefaultTol)) rep.fail(detail::witness_scalar("cross", out.cross));
    if (!T::is_zero(out.chi_transpose, kDefaultTol))
        rep.fail(detail::witness_scalar("chi_transpose", out.chi_transpose));
    if (!T::eq(out.chi_hermitian, two, kDefaultTol))
        rep.fail(detail::witness_scalar("chi_hermitian", out.chi_hermitian));
    return out;
}

/// psi^sharp . phi in the doubled theory.
template <class S>
S inner_product(const SharpCandidate<S>& c, const LinearMap<S>& dpsi, const LinearMap<S>& dphi) {
    if (dpsi.codomain() != dphi.codomain()) throw TypeMismatch(dpsi.codomain(), dphi.codomain());
    return compose_seq(c.state_sharp(dpsi), dphi).scalar_value();
}

/// Symmetry, linearity (over sums and nonnegative scalars), positivity and
/// definiteness of the candidate's induced inner product.
template <class S>
std::vector<CheckReport> verify_inner_product(const SharpCandidate<S>& c, const ProbeSet<S>& ps) {
    using T = ScalarTraits<S>;
    const double tol = ps.tol;
    CheckReport sym, lin, pos;
    sym.check_id = c.name + "/inner_product/symmetry";
    sym.paper_anchor = "Thm (Hermitian adjoint) proof: Symmetry";
    lin.check_id = c.name + "/inner_product/linearity";
    lin.paper_anchor = "Thm (Hermitian adjoint) proof: Linearity";
    pos.check_id = c.name + "/inner_product/positivity";
    pos.paper_anchor = "Thm (Hermitian adjoint) proof: Positivity";

    // Physical states only: pure doubles and convex mixtures. Symmetry is a
    // statement about probabilities, which general complex-coefficient sums
    // are not.
    std::vector<LinearMap<S>> states;
    for (const auto& s : ps.raw_states) states.push_back(double_map(s));
    for (const auto& m : ps.convex_mixtures) states.push_back(m);

    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& a = states[i];
        const auto& b = states[(i * 3 + 1) % states.size()];
        // Symmetry: doubled scalars, so plain (not conjugate) symmetry.
        ++sym.probes;
        if (!T::eq(inner_product(c, a, b), inner_product(c, b, a), tol))
            sym.fail("pair index " + std::to_string(i));
        // Linearity in the second argument over sums and nonnegative scalars.
        const S two = T::one() + T::one();
        S half;
        if constexpr (T::exact)
            half = GaussianRational(mpq_class(1, 2));
        else
            half = S(0.5, 0.0);
        auto combo = (two * b) + (half * a);
        auto direct = inner_product(c, a, combo);
        auto split = two * inner_product(c, a, b) + half * inner_product(c, a, a);
        ++lin.probes;
        if (!T::eq(direct, split, 10 * tol)) lin.fail("pair index " + std::to_string(i));
        // Positivity: <chi, chi> >= 0, zero only at chi = 0.
        auto self = inner_product(c, a, a);
        ++pos.probes;
        if (!T::is_real(self, tol) || T::real(self) < (T::exact ? 0 : -tol))
            pos.fail(detail::witness_scalar("<chi,chi>", self));
        if (T::is_zero(self, tol) && !a.is_zero(tol))
            pos.fail("definiteness: <chi,chi> = 0 for nonzero chi");
    }
    // Definiteness at the zero state itself.
    auto zero = LinearMap<S>::zero(SpaceType::unit(), ps.raw_dims.doubled());
    ++pos.probes;
    if (!T::is_zero(inner_product(c, zero, zero), tol)) pos.fail("<0,0> != 0");
    return {sym, lin, pos};
}

struct DegenerateMixture : std::runtime_error {
    DegenerateMixture() : std::runtime_error("mixture needs at least two distinct states") {}
};

/// Demonstrate the additive no-test theorem on a concrete mixture: the
/// sharp of a branch state is not a test for the mixture, while the unique
/// admissible unit effect (the doubled identity) assigns 1 to the mixture
/// and to every branch, violating sharpness.
template <class S>
struct MixtureWitness {
    S branch_sharp_on_mixture;    // e.g. 1/2 for the maximally mixed qubit
    S identity_on_mixture;        // 1
    std::vector<S> identity_on_branches;  // all 1
    CheckReport report;
};

template <class S>
MixtureWitness<S> mixture_untestability(const std::vector<S>& weights,
                                        const std::vector<LinearMap<S>>& states,
                                        double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    bool distinct = false;
    for (std::size_t i = 0; i < states.size() && !distinct; ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (!equal_up_to_global_phase(states[i], states[j], tol)) {
                distinct = true;
                break;
            }
    if (!distinct) throw DegenerateMixture();

    MixtureWitness<S> out;
    auto rho = mix(weights, states, tol);
    auto herm = hermitian_candidate<S>();

    out.branch_sharp_on_mixture =
        compose_seq(herm.state_sharp(double_map(states[0])), rho).scalar_value();

    // Doubled-identity effect: the only doubled-positive effect dominated by
    // itself that gives 1 on every normalized state.
    const auto& type = states[0].codomain();
    auto id_eff = transpose(double_map(basis_in<S>(type, 0)));
    {
        std::vector<LinearMap<S>> rows;
        for (std::size_t j = 0; j < type.total_dim(); ++j)
            rows.push_back(transpose(double_map(basis_in<S>(type, j))));
        id_eff = sum_maps(rows);
    }
    out.identity_on_mixture = compose_seq(id_eff, rho).scalar_value();
    for (const auto& st : states)
        out.identity_on_branches.push_back(compose_seq(id_eff, double_map(st)).scalar_value());

    auto& rep = out.report;
    rep.check_id = "mclm/testability";
    rep.paper_anchor = "Thm (additive): additive process theories do not have test structures";
    rep.expected = "FAIL";
    rep.probes = 2 + states.size();
    // The check "is there a sharp test for the mixture" fails: the obvious
    // candidate is not a unit test, and the unit effect is not sharp.
    bool branch_is_test = T::eq(out.branch_sharp_on_mixture, T::one(), tol);
    bool identity_unit = T::eq(out.identity_on_mixture, T::one(), tol);
    bool identity_sharp = true;  // sharp would mean 1 on exactly one phase-class
    std::size_t units = 0;
    for (const auto& s : out.identity_on_branches)
        if (T::eq(s, T::one(), tol)) ++units;
    if (units > 1) identity_sharp = false;
    if (!branch_is_test && identity_unit && !identity_sharp)
        rep.fail("branch sharp gives " + T::str(out.branch_sharp_on_mixture) +
                 " on the mixture; doubled-identity effect gives 1 on the mixture and on " +
                 std::to_string(units) + " distinct branches (sharpness violated)");
    return out;
}

}  // namespace sharplab
