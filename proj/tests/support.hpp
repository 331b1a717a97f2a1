#pragma once

// Test-side helpers: seeded generators and a naive polynomial model used as
// an independent oracle for series arithmetic.

#include <map>
#include <random>
#include <vector>

#include <lft/connection.hpp>
#include <lft/linalg.hpp>
#include <lft/series.hpp>
#include <lft/transform.hpp>

namespace lft::testing
{

inline rational q(long num, long den = 1)
{
    rational out(num);
    out /= den;
    return out;
}

class generator
{
public:
    explicit generator(unsigned seed) : m_rng(seed) {}

    long uniform(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(m_rng);
    }
    bool chance(double p)
    {
        return std::bernoulli_distribution(p)(m_rng);
    }
    rational small_rational(long mag = 5, long maxden = 4)
    {
        return q(uniform(-mag, mag), uniform(1, maxden));
    }
    rational nonzero_rational(long mag = 5, long maxden = 4)
    {
        long p = 0;
        while (p == 0) {
            p = uniform(-mag, mag);
        }
        return q(p, uniform(1, maxden));
    }
    // Random series sum_{e=low}^{prec-1} c_e X^e with some zero coefficients.
    trunc_series series(long low, long prec, bool unit_leading = true)
    {
        std::vector<coeff> c;
        for (long e = low; e < prec; ++e) {
            if (e == low && unit_leading) {
                c.emplace_back(nonzero_rational());
            } else {
                c.emplace_back(chance(0.2) ? rational(0) : small_rational());
            }
        }
        return trunc_series::from_coeffs(low, std::move(c), prec);
    }

private:
    std::mt19937 m_rng;
};

// Dense Laurent polynomial over Q, exponent -> coefficient, with no notion of
// precision. Truncation is applied explicitly by the caller.
using naive_poly = std::map<long, rational>;

inline naive_poly naive_from(const trunc_series &s)
{
    naive_poly p;
    for (long e = s.low(); e < s.end(); ++e) {
        const coeff c = s.at(e);
        if (!c.is_zero()) {
            p[e] = c.rational_value();
        }
    }
    return p;
}

inline naive_poly naive_mul(const naive_poly &a, const naive_poly &b, long cutoff)
{
    naive_poly out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            if (ea + eb < cutoff) {
                out[ea + eb] += ca * cb;
            }
        }
    }
    return out;
}

inline naive_poly naive_add(naive_poly a, const naive_poly &b)
{
    for (const auto &[e, c] : b) {
        a[e] += c;
    }
    return a;
}

// 1/g for g with nonzero lowest term, expanded by undetermined coefficients
// up to (but excluding) exponent cutoff.
inline naive_poly naive_inverse(const naive_poly &g, long cutoff)
{
    const long v = g.begin()->first;
    const rational g0 = g.begin()->second;
    naive_poly h;
    for (long k = -v; k < cutoff; ++k) {
        rational acc = k == -v ? rational(1) : rational(0);
        for (const auto &[e, c] : g) {
            if (e == v) {
                continue;
            }
            auto it = h.find(k - (e - v));
            if (it != h.end()) {
                acc -= c * it->second;
            }
        }
        h[k] = acc / g0;
    }
    return h;
}

// f(g) by expanding each power of g separately, all truncated at cutoff.
inline naive_poly naive_compose(const naive_poly &f, const naive_poly &g, long cutoff)
{
    naive_poly out;
    const long margin = 64;
    for (const auto &[k, c] : f) {
        naive_poly power{{0, rational(1)}};
        if (k >= 0) {
            for (long i = 0; i < k; ++i) {
                power = naive_mul(power, g, cutoff + margin);
            }
        } else {
            const naive_poly inv = naive_inverse(g, cutoff + margin);
            for (long i = 0; i < -k; ++i) {
                power = naive_mul(power, inv, cutoff + margin);
            }
        }
        for (const auto &[e, x] : power) {
            if (e < cutoff) {
                out[e] += c * x;
            }
        }
    }
    return out;
}

inline bool naive_equal_below(const naive_poly &a, const naive_poly &b, long cutoff)
{
    auto get = [](const naive_poly &p, long e) {
        auto it = p.find(e);
        return it == p.end() ? rational(0) : it->second;
    };
    long lo = cutoff;
    if (!a.empty()) {
        lo = std::min(lo, a.begin()->first);
    }
    if (!b.empty()) {
        lo = std::min(lo, b.begin()->first);
    }
    for (long e = lo; e < cutoff; ++e) {
        if (get(a, e) != get(b, e)) {
            return false;
        }
    }
    return true;
}

struct instance
{
    connection_piece piece;
    coeff branch;
};

// A piece whose branch equation has a rational root: the branch is drawn
// first and a_0 is set to match. Genuine instances keep the eigenvalue 0.
inline instance rational_instance(generator &g, transform_kind kind, long r, long s, bool genuine = false,
                                  long blocks = 1)
{
    const long n = kind == transform_kind::zero_to_inf ? r + s : (kind == transform_kind::inf_to_zero ? r - s : s - r);
    const rational w0 = g.nonzero_rational(3, 2);
    rational target = pow(w0, n);
    // a_0 = (s/r) alpha_{-s}; the target is a_0 or -a_0.
    const rational a0 = kind == transform_kind::zero_to_inf ? target : -target;
    std::vector<coeff> c;
    c.emplace_back(a0 * q(r, s));
    for (long j = -s + 1; j < 0; ++j) {
        c.emplace_back(g.chance(0.25) ? rational(0) : g.small_rational());
    }
    instance inst;
    inst.piece.at = kind == transform_kind::zero_to_inf ? point::zero : point::infinity;
    inst.piece.ram = r;
    inst.piece.alpha = trunc_series::from_coeffs(-s, std::move(c));
    for (long k = 0; k < blocks; ++k) {
        inst.piece.regular.push_back({genuine ? coeff() : coeff(g.small_rational(3, 5)), g.uniform(1, 2)});
    }
    inst.branch = coeff(w0);
    return inst;
}

// The Z'^s part contributed by the B_i terms of prod (Z' L^-1 (A + B_i) L):
// Q = sum_i D_0^(i-1) E_i D_0^(r-i), built from the shapes alone. D_0 has
// subdiagonal ones and -1/a_0 at row r+1 of the last column; E_i carries
// -(r+i)/(r a_0) at the top right corner.
inline matrix inf_correction(long r, long s, const coeff &a0)
{
    const auto n = static_cast<std::size_t>(s);
    matrix d0(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        d0(i, i - 1) = coeff(1);
    }
    d0(static_cast<std::size_t>(r), n - 1) += -a0.inverse();
    auto power = [&](long k) {
        matrix m = matrix::identity(n);
        for (long j = 0; j < k; ++j) {
            m = m * d0;
        }
        return m;
    };
    matrix out(n, n);
    for (long i = 1; i <= r; ++i) {
        matrix e(n, n);
        e(0, n - 1) = coeff(q(-(r + i), r)) / a0;
        out += power(i - 1) * e * power(r - i);
    }
    return out;
}

} // namespace lft::testing
