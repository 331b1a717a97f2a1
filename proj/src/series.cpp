#include <lft/error.hpp>
#include <lft/series.hpp>

#include <algorithm>
#include <sstream>

namespace lft
{

long exp_add(long a, long b) noexcept
{
    if (a >= kExact || b >= kExact) {
        return kExact;
    }
    return a + b;
}

long exp_mul(long a, long b) noexcept
{
    if (a >= kExact || b >= kExact) {
        return kExact;
    }
    return a * b;
}

trunc_series trunc_series::zero(long prec, long denom)
{
    if (denom < 1) {
        throw error(error_code::invalid_argument, "series denominator must be positive");
    }
    trunc_series s;
    s.m_denom = denom;
    s.m_prec = std::min(prec, kExact);
    s.m_low = s.m_prec;
    return s;
}

trunc_series trunc_series::constant(const coeff &c, long prec)
{
    return monomial(c, 0, prec, 1);
}

trunc_series trunc_series::monomial(const coeff &c, long exponent, long prec, long denom)
{
    return from_coeffs(exponent, {c}, prec, denom);
}

trunc_series trunc_series::from_coeffs(long start, std::vector<coeff> coeffs, long prec, long denom)
{
    trunc_series s = zero(prec, denom);
    if (start >= s.m_prec) {
        return s;
    }
    const auto keep = std::min<long>(static_cast<long>(coeffs.size()), s.m_prec - start);
    coeffs.resize(static_cast<std::size_t>(std::max(0L, keep)));
    s.m_low = start;
    s.m_coeffs = std::move(coeffs);
    s.normalize();
    return s;
}

void trunc_series::normalize()
{
    std::size_t lead = 0;
    while (lead < m_coeffs.size() && m_coeffs[lead].is_zero()) {
        ++lead;
    }
    if (lead == m_coeffs.size()) {
        m_coeffs.clear();
        m_low = m_prec;
        return;
    }
    m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<long>(lead));
    m_low += static_cast<long>(lead);
    if (is_exact()) {
        while (m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    } else {
        m_coeffs.resize(static_cast<std::size_t>(m_prec - m_low));
    }
}

coeff trunc_series::at(long exponent) const
{
    if (exponent >= m_prec) {
        throw error(error_code::precision_exhausted,
                    "coefficient " + std::to_string(exponent) + " requested past precision " + std::to_string(m_prec));
    }
    if (exponent < m_low || exponent >= end()) {
        return coeff();
    }
    return m_coeffs[static_cast<std::size_t>(exponent - m_low)];
}

const coeff &trunc_series::leading() const
{
    if (m_coeffs.empty()) {
        throw error(error_code::invalid_argument, "zero series has no leading coefficient");
    }
    return m_coeffs.front();
}

trunc_series trunc_series::truncated(long prec) const
{
    if (prec >= m_prec) {
        return *this;
    }
    trunc_series s = *this;
    s.m_prec = prec;
    if (s.m_low >= prec) {
        s.m_coeffs.clear();
        s.m_low = prec;
        return s;
    }
    if (s.end() > prec) {
        s.m_coeffs.resize(static_cast<std::size_t>(prec - s.m_low));
    }
    s.normalize();
    return s;
}

trunc_series trunc_series::rescaled(long factor) const
{
    if (factor < 1) {
        throw error(error_code::invalid_argument, "rescale factor must be positive");
    }
    if (factor == 1) {
        return *this;
    }
    trunc_series s = zero(exp_mul(m_prec, factor), m_denom * factor);
    if (is_zero()) {
        return s;
    }
    std::vector<coeff> c(static_cast<std::size_t>((static_cast<long>(m_coeffs.size()) - 1) * factor + 1));
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        c[i * static_cast<std::size_t>(factor)] = m_coeffs[i];
    }
    return from_coeffs(m_low * factor, std::move(c), s.m_prec, s.m_denom);
}

trunc_series trunc_series::reduced(long factor) const
{
    if (factor < 1 || m_denom % factor != 0) {
        throw error(error_code::invalid_argument, "cannot reduce denominator by " + std::to_string(factor));
    }
    if (factor == 1) {
        return *this;
    }
    std::vector<coeff> c;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        const long e = m_low + static_cast<long>(i);
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        if (e % factor != 0) {
            throw error(error_code::invalid_argument, "exponents are not divisible by " + std::to_string(factor));
        }
    }
    // Round the precision down to the last exponent that stays integral.
    long prec = m_prec;
    if (!is_exact()) {
        prec = prec >= 0 ? (prec + factor - 1) / factor : -((-prec) / factor);
    }
    if (is_zero()) {
        return zero(prec, m_denom / factor);
    }
    for (long e = m_low; e < end(); e += factor) {
        c.push_back(m_coeffs[static_cast<std::size_t>(e - m_low)]);
    }
    return from_coeffs(m_low / factor, std::move(c), prec, m_denom / factor);
}

trunc_series trunc_series::shifted(long k) const
{
    trunc_series s = *this;
    s.m_prec = exp_add(m_prec, k);
    s.m_low = is_zero() ? s.m_prec : m_low + k;
    return s;
}

trunc_series trunc_series::scaled(const coeff &c) const
{
    trunc_series s = *this;
    for (auto &x : s.m_coeffs) {
        x *= c;
    }
    s.normalize();
    return s;
}

trunc_series trunc_series::operator-() const
{
    trunc_series s = *this;
    for (auto &x : s.m_coeffs) {
        x = -x;
    }
    return s;
}

bool operator==(const trunc_series &lhs, const trunc_series &rhs)
{
    return lhs.m_denom == rhs.m_denom && lhs.m_prec == rhs.m_prec && lhs.m_low == rhs.m_low
           && lhs.m_coeffs == rhs.m_coeffs;
}

std::string trunc_series::to_string(const std::string &var) const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        const long e = m_low + static_cast<long>(i);
        out << "(" << m_coeffs[i].to_string() << ")";
        if (e != 0) {
            out << "*" << var << "^" << e;
            if (m_denom != 1) {
                out << "/" << m_denom;
            }
        }
    }
    if (first) {
        out << "0";
    }
    if (!is_exact()) {
        out << " + O(" << var << "^" << m_prec;
        if (m_denom != 1) {
            out << "/" << m_denom;
        }
        out << ")";
    }
    return out.str();
}

trunc_series arith(const trunc_series &lhs, const trunc_series &rhs, series_op op)
{
    if (lhs.denom() != rhs.denom()) {
        throw error(error_code::denominator_mismatch,
                    "series denominators " + std::to_string(lhs.denom()) + " and " + std::to_string(rhs.denom())
                        + " differ");
    }
    const long denom = lhs.denom();
    if (op == series_op::add) {
        const long prec = std::min(lhs.prec(), rhs.prec());
        if (lhs.is_zero() && rhs.is_zero()) {
            return trunc_series::zero(prec, denom);
        }
        long start = std::min(lhs.low(), rhs.low());
        long stop = std::max(lhs.is_zero() ? start : lhs.end(), rhs.is_zero() ? start : rhs.end());
        stop = std::min(stop, prec);
        if (start >= stop) {
            return trunc_series::zero(prec, denom);
        }
        std::vector<coeff> c(static_cast<std::size_t>(stop - start));
        for (long e = std::max(start, lhs.low()); e < std::min(stop, lhs.end()); ++e) {
            c[static_cast<std::size_t>(e - start)] += lhs.coeffs()[static_cast<std::size_t>(e - lhs.low())];
        }
        for (long e = std::max(start, rhs.low()); e < std::min(stop, rhs.end()); ++e) {
            c[static_cast<std::size_t>(e - start)] += rhs.coeffs()[static_cast<std::size_t>(e - rhs.low())];
        }
        return trunc_series::from_coeffs(start, std::move(c), prec, denom);
    }

    const long prec = std::min(exp_add(lhs.prec(), rhs.low()), exp_add(rhs.prec(), lhs.low()));
    if (lhs.is_zero() || rhs.is_zero()) {
        return trunc_series::zero(prec, denom);
    }
    const long start = lhs.low() + rhs.low();
    const long stop = std::min(prec, lhs.end() + rhs.end() - 1);
    if (start >= stop) {
        return trunc_series::zero(prec, denom);
    }
    std::vector<coeff> c(static_cast<std::size_t>(stop - start));
    const auto &a = lhs.coeffs();
    const auto &b = rhs.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && static_cast<long>(i + j) < stop - start; ++j) {
            if (!b[j].is_zero()) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return trunc_series::from_coeffs(start, std::move(c), prec, denom);
}

trunc_series invert_unit(const trunc_series &s)
{
    if (s.is_zero()) {
        throw error(error_code::non_unit, "cannot invert the zero series");
    }
    const coeff inv = s.leading().inverse();
    if (s.is_exact()) {
        if (s.coeffs().size() != 1) {
            throw error(error_code::precision_exhausted, "inverse of an exact non-monomial series needs a precision");
        }
        return trunc_series::monomial(inv, -s.low(), kExact, s.denom());
    }
    const long rel = s.prec() - s.low();
    const auto &c = s.coeffs();
    std::vector<coeff> v(static_cast<std::size_t>(rel));
    v[0] = inv;
    for (long k = 1; k < rel; ++k) {
        coeff acc;
        for (long j = 1; j <= k && j < static_cast<long>(c.size()); ++j) {
            acc += c[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(k - j)];
        }
        v[static_cast<std::size_t>(k)] = -(acc * inv);
    }
    return trunc_series::from_coeffs(-s.low(), std::move(v), -s.low() + rel, s.denom());
}

trunc_series differentiate(const trunc_series &s)
{
    const long n = s.denom();
    const long prec = s.is_exact() ? kExact : s.prec() - n;
    if (s.is_zero()) {
        return trunc_series::zero(prec, n);
    }
    std::vector<coeff> c(s.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const long e = s.low() + static_cast<long>(i);
        c[i] = s.coeffs()[i] * coeff(ratio(e, n));
    }
    return trunc_series::from_coeffs(s.low() - n, std::move(c), prec, n);
}

trunc_series pow_series(const trunc_series &s, long e)
{
    if (e < 0) {
        return pow_series(invert_unit(s), -e);
    }
    trunc_series result = trunc_series::monomial(coeff(1), 0, kExact, s.denom());
    if (e == 0) {
        return result;
    }
    trunc_series base = s;
    while (true) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        base = base * base;
    }
    return result;
}

trunc_series compose(const trunc_series &f, const trunc_series &g)
{
    if (f.denom() != 1) {
        throw error(error_code::invalid_argument, "outer series of a composition must have integral exponents");
    }
    if (g.is_zero() || g.low() <= 0) {
        throw error(error_code::invalid_argument, "inner series of a composition must have positive order");
    }
    const long bound = f.is_exact() ? kExact : exp_mul(f.prec(), g.low());
    if (f.is_zero()) {
        return trunc_series::zero(bound, g.denom());
    }
    // Horner on the nonnegative part, then the factor g^low.
    const auto &c = f.coeffs();
    trunc_series acc = trunc_series::monomial(c.back(), 0, kExact, g.denom());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * g + trunc_series::monomial(c[i], 0, kExact, g.denom());
    }
    if (f.low() != 0) {
        acc = acc * pow_series(g, f.low());
    }
    return acc.truncated(bound);
}

trunc_series scale_argument(const trunc_series &f, const coeff &c)
{
    if (f.denom() != 1) {
        throw error(error_code::invalid_argument, "argument scaling needs integral exponents");
    }
    if (f.is_zero()) {
        return f;
    }
    std::vector<coeff> out(f.coeffs().size());
    coeff p = c.pow(f.low());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.coeffs()[i] * p;
        p *= c;
    }
    return trunc_series::from_coeffs(f.low(), std::move(out), f.prec(), 1);
}

trunc_series solve_branch(const trunc_series &u, long n, const coeff &w0, std::optional<long> prec)
{
    if (n < 1) {
        throw error(error_code::invalid_argument, "branch degree must be positive");
    }
    if (u.denom() != 1 || u.is_zero() || u.low() != 0) {
        throw error(error_code::invalid_argument, "branch equation needs a unit series with integral exponents");
    }
    if (w0.pow(n) != u.leading()) {
        throw error(error_code::invalid_branch,
                    "branch " + w0.to_string() + " is not a root of degree " + std::to_string(n) + " of "
                        + u.leading().to_string());
    }
    long p = u.prec();
    if (prec) {
        p = std::min(p, *prec);
    }
    if (p >= kExact) {
        throw error(error_code::precision_exhausted, "branch solution of an exact series needs a precision");
    }
    if (p <= 0) {
        return trunc_series::zero(p, 1);
    }
    const coeff inv = (coeff(n) * w0.pow(n - 1)).inverse();
    const auto P = static_cast<std::size_t>(p);
    const auto J = static_cast<std::size_t>(std::max<long>(n, p - 1));
    std::vector<coeff> u_c(P);
    for (std::size_t i = 0; i < P; ++i) {
        u_c[i] = u.at(static_cast<long>(i));
    }
    std::vector<coeff> w0_pow(J + 1);
    w0_pow[0] = coeff(1);
    for (std::size_t j = 1; j <= J; ++j) {
        w0_pow[j] = w0_pow[j - 1] * w0;
    }
    // pw[j][m] is the coefficient of Y^m in w^j.
    std::vector<std::vector<coeff>> pw(J + 1, std::vector<coeff>(P));
    for (std::size_t j = 0; j <= J; ++j) {
        pw[j][0] = w0_pow[j];
    }
    std::vector<coeff> w(P);
    w[0] = w0;
    for (std::size_t i = 1; i < P; ++i) {
        for (std::size_t j = 1; j <= J; ++j) {
            coeff acc;
            for (std::size_t k = 1; k < i; ++k) {
                if (!w[k].is_zero()) {
                    acc += w[k] * pw[j - 1][i - k];
                }
            }
            acc += w0 * pw[j - 1][i];
            pw[j][i] = acc;
        }
        coeff residual = pw[static_cast<std::size_t>(n)][i];
        for (std::size_t j = 1; j <= i; ++j) {
            if (!u_c[j].is_zero()) {
                residual -= u_c[j] * pw[j][i - j];
            }
        }
        w[i] = -(residual * inv);
        if (!w[i].is_zero()) {
            for (std::size_t j = 1; j <= J; ++j) {
                pw[j][i] += coeff(static_cast<long>(j)) * w0_pow[j - 1] * w[i];
            }
        }
    }
    return trunc_series::from_coeffs(0, std::move(w), p, 1);
}

} // namespace lft
