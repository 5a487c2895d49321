#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "sharplab/scalar.hpp"
#include "sharplab/space_type.hpp"

namespace sharplab {

/// Dense linear map between typed composite spaces. Rows index the
/// codomain, columns the domain, row-major storage. A state has unit
/// domain, an effect unit codomain, a scalar both.
///
/// Basis convention: computational basis, composite indices with the
/// leftmost wire most significant.
template <class S>
class LinearMap {
  public:
    using Traits = ScalarTraits<S>;

    LinearMap() : dom_(SpaceType::unit()), cod_(SpaceType::unit()), entries_(1, Traits::zero()) {}

    LinearMap(SpaceType domain, SpaceType codomain, std::vector<S> entries)
        : dom_(std::move(domain)), cod_(std::move(codomain)), entries_(std::move(entries)) {
        if (entries_.size() != rows() * cols())
            throw std::invalid_argument("entry count does not match " + cod_.str() + "x" + dom_.str());
    }

    static LinearMap zero(SpaceType domain, SpaceType codomain) {
        std::vector<S> e(domain.total_dim() * codomain.total_dim(), Traits::zero());
        return LinearMap(std::move(domain), std::move(codomain), std::move(e));
    }

    static LinearMap identity(SpaceType type) {
        auto m = zero(type, type);
        for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, k) = Traits::one();
        return m;
    }

    static LinearMap scalar(const S& s) {
        return LinearMap(SpaceType::unit(), SpaceType::unit(), {s});
    }

    /// Basis state e_j on a single wire of dimension d.
    static LinearMap basis_state(std::size_t d, std::size_t j) {
        auto m = zero(SpaceType::unit(), SpaceType::wire(d));
        m.at(j, 0) = Traits::one();
        return m;
    }

    static LinearMap state(SpaceType type, std::vector<S> amplitudes) {
        return LinearMap(SpaceType::unit(), std::move(type), std::move(amplitudes));
    }

    const SpaceType& domain() const { return dom_; }
    const SpaceType& codomain() const { return cod_; }
    std::size_t rows() const { return cod_.total_dim(); }
    std::size_t cols() const { return dom_.total_dim(); }

    const S& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
    S& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
    const std::vector<S>& entries() const { return entries_; }

    bool is_state() const { return dom_.is_unit(); }
    bool is_effect() const { return cod_.is_unit(); }
    bool is_scalar() const { return dom_.is_unit() && cod_.is_unit(); }

    /// The unique entry of a scalar-typed map.
    const S& scalar_value() const {
        if (!is_scalar()) throw std::logic_error("scalar_value on non-scalar map");
        return entries_[0];
    }

    bool is_zero(double tol = kDefaultTol) const {
        for (const auto& e : entries_)
            if (!Traits::is_zero(e, tol)) return false;
        return true;
    }

    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
        if (a.dom_ != b.dom_ || a.cod_ != b.cod_)
            throw TypeMismatch(a.dom_.concat(a.cod_), b.dom_.concat(b.cod_));
        std::vector<S> e(a.entries_.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries_[k] + b.entries_[k];
        return LinearMap(a.dom_, a.cod_, std::move(e));
    }

    friend LinearMap operator*(const S& s, const LinearMap& m) {
        std::vector<S> e(m.entries_.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = s * m.entries_[k];
        return LinearMap(m.dom_, m.cod_, std::move(e));
    }

  private:
    SpaceType dom_, cod_;
    std::vector<S> entries_;
};

/// g . f (apply f first). Wire types must match exactly.
template <class S>
LinearMap<S> compose_seq(const LinearMap<S>& g, const LinearMap<S>& f) {
    if (f.codomain() != g.domain()) throw TypeMismatch(g.domain(), f.codomain());
    auto out = LinearMap<S>::zero(f.domain(), g.codomain());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t k = 0; k < g.cols(); ++k) {
            if (ScalarTraits<S>::is_zero(g.at(r, k), 0)) continue;
            for (std::size_t c = 0; c < f.cols(); ++c)
                out.at(r, c) += g.at(r, k) * f.at(k, c);
        }
    return out;
}

/// h (x) i: Kronecker product; domain/codomain are wire-list concatenations.
template <class S>
LinearMap<S> compose_par(const LinearMap<S>& h, const LinearMap<S>& i) {
    auto dom = h.domain().concat(i.domain());
    auto cod = h.codomain().concat(i.codomain());
    auto out = LinearMap<S>::zero(dom, cod);
    const std::size_t ir = i.rows(), ic = i.cols();
    for (std::size_t r1 = 0; r1 < h.rows(); ++r1)
        for (std::size_t c1 = 0; c1 < h.cols(); ++c1)
            for (std::size_t r2 = 0; r2 < ir; ++r2)
                for (std::size_t c2 = 0; c2 < ic; ++c2)
                    out.at(r1 * ir + r2, c1 * ic + c2) = h.at(r1, c1) * i.at(r2, c2);
    return out;
}

template <class S>
LinearMap<S> conjugate(const LinearMap<S>& f) {
    std::vector<S> e(f.entries().size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = ScalarTraits<S>::conj(f.entries()[k]);
    return LinearMap<S>(f.domain(), f.codomain(), std::move(e));
}

template <class S>
LinearMap<S> transpose(const LinearMap<S>& f) {
    auto out = LinearMap<S>::zero(f.codomain(), f.domain());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) out.at(c, r) = f.at(r, c);
    return out;
}

/// Conjugate-transpose: <adjoint(f) psi, phi> = <psi, f phi>.
template <class S>
LinearMap<S> adjoint(const LinearMap<S>& f) {
    return transpose(conjugate(f));
}

/// SpaceTypes equal and max entrywise |difference| <= tol. The exact
/// backend ignores tol and compares exactly.
template <class S>
bool approx_equal(const LinearMap<S>& f, const LinearMap<S>& g, double tol = kDefaultTol) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
    for (std::size_t k = 0; k < f.entries().size(); ++k)
        if (!ScalarTraits<S>::eq(f.entries()[k], g.entries()[k], tol)) return false;
    return true;
}

/// Standard sesquilinear form <a,b> = sum conj(a_k) b_k on states of equal type.
template <class S>
S inner(const LinearMap<S>& a, const LinearMap<S>& b) {
    if (!a.is_state() || !b.is_state() || a.codomain() != b.codomain())
        throw TypeMismatch(a.codomain(), b.codomain());
    S acc = ScalarTraits<S>::zero();
    for (std::size_t k = 0; k < a.rows(); ++k)
        acc += ScalarTraits<S>::conj(a.at(k, 0)) * b.at(k, 0);
    return acc;
}

template <class S>
std::string render(const LinearMap<S>& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : " ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += ScalarTraits<S>::str(m.at(r, c));
            if (c + 1 < m.cols()) out += ", ";
        }
        out += r + 1 < m.rows() ? "\n" : "]";
    }
    return out;
}

}  // namespace sharplab
