#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sharplab {

/// Element of Q[i]: exact complex number with rational real and imaginary
/// parts. All arithmetic is closed and exact; there is no square root.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) {}
    GaussianRational(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(long rn, long rd, long in_, long id_) : re(rn, rd), im(in_, id_) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as an exact rational.
    mpq_class norm_sq() const { return re * re + im * im; }

    GaussianRational reciprocal() const {
        mpq_class n = norm_sq();
        if (n == 0) throw std::domain_error("reciprocal of zero scalar");
        return {re / n, -im / n};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.reciprocal();
    }

    std::string str() const {
        std::ostringstream os;
        os << re.get_str();
        if (im != 0) {
            mpq_class a = abs(im);
            os << (sgn(im) < 0 ? " - " : " + ") << a.get_str() << " i";
        }
        return os.str();
    }
};

/// Parse "a/b" or "a" into an exact rational. Throws on malformed input.
inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Backend traits: the one arithmetic contract both scalar types satisfy.
// exact = true means equality comparisons ignore tolerances.

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    using real_type = mpq_class;
    static constexpr bool exact = true;

    static GaussianRational zero() { return GaussianRational(0L); }
    static GaussianRational one() { return GaussianRational(1L); }
    static GaussianRational imaginary_unit() { return GaussianRational::i(); }
    static GaussianRational conj(const GaussianRational& s) { return s.conj(); }
    static GaussianRational from_real(double) = delete;  // no silent float entry
    static real_type real(const GaussianRational& s) { return s.re; }
    static real_type imag(const GaussianRational& s) { return s.im; }
    static real_type abs_sq(const GaussianRational& s) { return s.norm_sq(); }
    static bool eq(const GaussianRational& a, const GaussianRational& b, double /*tol*/) {
        return a == b;
    }
    static bool is_zero(const GaussianRational& s, double /*tol*/) { return s.re == 0 && s.im == 0; }
    static bool is_real(const GaussianRational& s, double /*tol*/) { return s.im == 0; }
    static double to_double_real(const GaussianRational& s) { return s.re.get_d(); }
    static std::string str(const GaussianRational& s) { return s.str(); }
    static const char* backend_name() { return "exact"; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    using real_type = double;
    static constexpr bool exact = false;

    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> imaginary_unit() { return {0.0, 1.0}; }
    static std::complex<double> conj(const std::complex<double>& s) { return std::conj(s); }
    static double real(const std::complex<double>& s) { return s.real(); }
    static double imag(const std::complex<double>& s) { return s.imag(); }
    static double abs_sq(const std::complex<double>& s) { return std::norm(s); }
    static bool eq(const std::complex<double>& a, const std::complex<double>& b, double tol) {
        return std::abs(a - b) <= tol;
    }
    static bool is_zero(const std::complex<double>& s, double tol) { return std::abs(s) <= tol; }
    static bool is_real(const std::complex<double>& s, double tol) { return std::abs(s.imag()) <= tol; }
    static double to_double_real(const std::complex<double>& s) { return s.real(); }
    static std::string str(const std::complex<double>& s) {
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << s.real();
        if (s.imag() != 0.0) os << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << " i";
        return os.str();
    }
    static const char* backend_name() { return "float"; }
};

/// Default comparison tolerance for the float backend; exact mode ignores it.
inline constexpr double kDefaultTol = 1e-9;

/// im = 0 and 0 <= re <= 1, within backend tolerance.
template <class S>
bool is_probability(const S& s, double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    if (!T::is_real(s, tol)) return false;
    auto r = T::real(s);
    if constexpr (T::exact) {
        return r >= 0 && r <= 1;
    } else {
        return r >= -tol && r <= 1.0 + tol;
    }
}

inline std::complex<double> to_complex(const GaussianRational& s) {
    return {s.re.get_d(), s.im.get_d()};
}

}  // namespace sharplab
