#ifndef HARPER_MONOMIAL_HPP
#define HARPER_MONOMIAL_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "harper/rational.hpp"

namespace harper {

using Complex = std::complex<double>;

inline Complex unit_phase(const Rational& turns) {
    const double a = 2.0 * std::numbers::pi * turns.mod1().to_double();
    return {std::cos(a), std::sin(a)};
}

// A point of the n-torus. Coordinates are turns in [0,1), kept exact when the
// point is rational (stabilizer and cocycle work needs exact roots of unity).
class TorusPoint {
public:
    TorusPoint() = default;

    static TorusPoint turns(std::vector<Rational> t) {
        TorusPoint p;
        p.exact_ = true;
        for (auto& x : t) p.rat_.push_back(x.mod1());
        for (auto& x : p.rat_) p.flt_.push_back(x.to_double());
        return p;
    }
    static TorusPoint turns(std::vector<double> t) {
        TorusPoint p;
        p.exact_ = false;
        for (double x : t) {
            double y = std::fmod(x, 1.0);
            if (y < 0) y += 1.0;
            p.flt_.push_back(y);
        }
        return p;
    }
    static TorusPoint radians(const std::vector<double>& a) {
        std::vector<double> t;
        t.reserve(a.size());
        for (double x : a) t.push_back(x / (2.0 * std::numbers::pi));
        return turns(t);
    }

    int rank() const { return int(flt_.size()); }
    bool exact() const { return exact_; }
    const std::vector<Rational>& turns_exact() const {
        if (!exact_) throw std::logic_error("TorusPoint: not an exact point");
        return rat_;
    }
    const std::vector<double>& turns_d() const { return flt_; }

private:
    bool exact_ = false;
    std::vector<Rational> rat_;
    std::vector<double> flt_;
};

// Unit-modulus monomial e^{2 pi i phase} * x^exponent on T^n. These are the
// weights, gauge-potential values and cocycle values; all of their arithmetic
// is exact.
struct UnitaryMonomial {
    Rational phase;                 // turns, kept reduced mod 1
    std::vector<long long> exponent;

    UnitaryMonomial() = default;
    UnitaryMonomial(Rational ph, std::vector<long long> e)
        : phase(ph.mod1()), exponent(std::move(e)) {}

    static UnitaryMonomial one(int rank) {
        return UnitaryMonomial(Rational(0), std::vector<long long>(rank, 0));
    }
    static UnitaryMonomial generator(int rank, int axis) {
        std::vector<long long> e(rank, 0);
        e.at(axis) = 1;
        return UnitaryMonomial(Rational(0), std::move(e));
    }

    int rank() const { return int(exponent.size()); }
    bool is_one() const {
        if (!phase.mod1().is_zero()) return false;
        for (long long e : exponent)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const UnitaryMonomial& a, const UnitaryMonomial& b) {
        return a.phase.mod1() == b.phase.mod1() && a.exponent == b.exponent;
    }
};

inline void check_rank(const UnitaryMonomial& a, const UnitaryMonomial& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("UnitaryMonomial: rank mismatch");
}

inline UnitaryMonomial mono_mul(const UnitaryMonomial& a, const UnitaryMonomial& b) {
    check_rank(a, b);
    UnitaryMonomial r;
    r.phase = (a.phase + b.phase).mod1();
    r.exponent = a.exponent;
    for (int i = 0; i < b.rank(); ++i) r.exponent[i] += b.exponent[i];
    return r;
}

inline UnitaryMonomial mono_adjoint(const UnitaryMonomial& a) {
    UnitaryMonomial r;
    r.phase = (-a.phase).mod1();
    r.exponent = a.exponent;
    for (auto& e : r.exponent) e = -e;
    return r;
}

// Exact evaluation at a rational point: the result is a root of unity given
// in turns.
inline Rational mono_eval_turns(const UnitaryMonomial& a, const std::vector<Rational>& t) {
    if (int(t.size()) != a.rank())
        throw std::invalid_argument("mono_eval: rank mismatch");
    Rational s = a.phase;
    for (int i = 0; i < a.rank(); ++i) s += Rational(a.exponent[i]) * t[i];
    return s.mod1();
}

inline Complex mono_eval(const UnitaryMonomial& a, const TorusPoint& t) {
    if (t.rank() != a.rank())
        throw std::invalid_argument("mono_eval: rank mismatch");
    if (t.exact()) return unit_phase(mono_eval_turns(a, t.turns_exact()));
    double s = a.phase.to_double();
    const auto& x = t.turns_d();
    for (int i = 0; i < a.rank(); ++i) s += double(a.exponent[i]) * x[i];
    const double ang = 2.0 * std::numbers::pi * s;
    return {std::cos(ang), std::sin(ang)};
}

// Finite Laurent sum over T^n: exponent vector -> complex coefficient.
// Canonical form keeps the map sorted (std::map) and free of zero terms.
class TorusPolynomial {
public:
    using TermMap = std::map<std::vector<long long>, Complex>;

    explicit TorusPolynomial(int rank = 0) : rank_(rank) {}

    static TorusPolynomial zero(int rank) { return TorusPolynomial(rank); }
    static TorusPolynomial one(int rank) {
        TorusPolynomial p(rank);
        p.add_term(std::vector<long long>(rank, 0), 1.0);
        return p;
    }
    static TorusPolynomial from_mono(const UnitaryMonomial& m, Complex c = 1.0) {
        TorusPolynomial p(m.rank());
        p.add_term(m.exponent, c * unit_phase(m.phase));
        return p;
    }

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const UnitaryMonomial& m, Complex c = 1.0) {
        add_term(m.exponent, c * unit_phase(m.phase));
    }
    void add_term(const std::vector<long long>& e, Complex c) {
        if (int(e.size()) != rank_)
            throw std::invalid_argument("TorusPolynomial: exponent rank mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (std::abs(c) > kDropTol) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (std::abs(it->second) <= kDropTol) terms_.erase(it);
        }
    }

    TorusPolynomial operator+(const TorusPolynomial& o) const {
        TorusPolynomial r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    TorusPolynomial operator-(const TorusPolynomial& o) const {
        TorusPolynomial r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    TorusPolynomial operator*(const TorusPolynomial& o) const {
        TorusPolynomial r(rank_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) {
                std::vector<long long> e = e1;
                for (int i = 0; i < rank_; ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    TorusPolynomial operator*(Complex c) const {
        TorusPolynomial r(rank_);
        for (auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }

    TorusPolynomial adjoint() const {
        TorusPolynomial r(rank_);
        for (auto& [e, c] : terms_) {
            std::vector<long long> me = e;
            for (auto& x : me) x = -x;
            r.add_term(me, std::conj(c));
        }
        return r;
    }

    bool approx_equal(const TorusPolynomial& o, double tol = 1e-12) const {
        TorusPolynomial d = *this - o;
        for (auto& [e, c] : d.terms_)
            if (std::abs(c) > tol) return false;
        return true;
    }

    static constexpr double kDropTol = 1e-14;

private:
    int rank_;
    TermMap terms_;
};

inline Complex poly_eval(const TorusPolynomial& p, const TorusPoint& t) {
    if (t.rank() != p.rank())
        throw std::invalid_argument("poly_eval: rank mismatch");
    Complex s = 0.0;
    const auto& x = t.turns_d();
    for (auto& [e, c] : p.terms()) {
        double ph = 0.0;
        for (int i = 0; i < p.rank(); ++i) ph += double(e[i]) * x[i];
        const double ang = 2.0 * std::numbers::pi * ph;
        s += c * Complex(std::cos(ang), std::sin(ang));
    }
    return s;
}

} // namespace harper

#endif
