#include <lft/coeff.hpp>
#include <lft/error.hpp>

#include <numeric>
#include <sstream>

namespace lft
{

namespace
{

// Exact division of monic integer polynomials (constant term first).
std::vector<integer> divide_monic(std::vector<integer> num, const std::vector<integer> &den)
{
    const auto dn = den.size() - 1;
    std::vector<integer> quot(num.size() - dn);
    for (auto k = quot.size(); k-- > 0;) {
        const integer c = num[k + dn];
        quot[k] = c;
        for (std::size_t i = 0; i <= dn; ++i) {
            num[k + i] -= c * den[i];
        }
    }
    return quot;
}

// Gaussian elimination over Q; returns the solution of m * y = rhs if m is
// invertible.
std::optional<std::vector<rational>> solve_rational(std::vector<std::vector<rational>> m, std::vector<rational> rhs)
{
    const auto n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const rational inv = 1 / m[col][col];
        for (std::size_t j = col; j < n; ++j) {
            m[col][j] *= inv;
        }
        rhs[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) {
                continue;
            }
            const rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) {
                m[i][j] -= f * m[col][j];
            }
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

std::vector<integer> cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw error(error_code::invalid_argument, "cyclotomic order must be positive");
    }
    std::vector<integer> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divide_monic(std::move(p), cyclotomic_polynomial(d));
        }
    }
    return p;
}

extension_ring::extension_ring(int order, int radical_degree, rational radicand)
    : m_order(order), m_radical_degree(radical_degree), m_radicand(std::move(radicand))
{
    if (order < 1 || radical_degree < 1) {
        throw error(error_code::invalid_argument, "extension ring needs N >= 1 and m >= 1");
    }
    if (m_radicand == 0) {
        throw error(error_code::invalid_argument, "radicand must be nonzero");
    }
    m_cyclotomic = cyclotomic_polynomial(order);
    m_phi = static_cast<int>(m_cyclotomic.size()) - 1;
}

bool extension_ring::same_as(const extension_ring &other) const noexcept
{
    return m_order == other.m_order && m_radical_degree == other.m_radical_degree && m_radicand == other.m_radicand;
}

std::vector<rational> extension_ring::multiply(const std::vector<rational> &lhs, const std::vector<rational> &rhs) const
{
    const auto phi = static_cast<std::size_t>(m_phi);
    const auto m = static_cast<std::size_t>(m_radical_degree);
    const auto wide = 2 * phi - 1;
    std::vector<rational> tmp(m * wide);
    for (std::size_t a = 0; a < lhs.size(); ++a) {
        if (lhs[a] == 0) {
            continue;
        }
        const auto ia = a % phi, ja = a / phi;
        for (std::size_t b = 0; b < rhs.size(); ++b) {
            if (rhs[b] == 0) {
                continue;
            }
            const auto ib = b % phi, jb = b / phi;
            auto j = ja + jb;
            rational t = lhs[a] * rhs[b];
            if (j >= m) {
                j -= m;
                t *= m_radicand;
            }
            tmp[j * wide + ia + ib] += t;
        }
    }
    std::vector<rational> out(m * phi);
    for (std::size_t j = 0; j < m; ++j) {
        rational *row = &tmp[j * wide];
        // zeta^phi = -sum_{l<phi} c_l zeta^l
        for (auto k = wide; k-- > phi;) {
            if (row[k] == 0) {
                continue;
            }
            const rational t = row[k];
            row[k] = 0;
            for (std::size_t l = 0; l < phi; ++l) {
                if (m_cyclotomic[l] != 0) {
                    row[k - phi + l] -= t * rational(m_cyclotomic[l]);
                }
            }
        }
        for (std::size_t i = 0; i < phi; ++i) {
            out[j * phi + i] = row[i];
        }
    }
    return out;
}

std::optional<std::vector<rational>> extension_ring::inverse(const std::vector<rational> &value) const
{
    const auto n = static_cast<std::size_t>(dim());
    std::vector<std::vector<rational>> mat(n, std::vector<rational>(n));
    std::vector<rational> basis(n);
    for (std::size_t k = 0; k < n; ++k) {
        basis.assign(n, 0);
        basis[k] = 1;
        const auto col = multiply(value, basis);
        for (std::size_t i = 0; i < n; ++i) {
            mat[i][k] = col[i];
        }
    }
    std::vector<rational> one(n);
    one[0] = 1;
    return solve_rational(std::move(mat), std::move(one));
}

std::vector<rational> extension_ring::zeta() const
{
    std::vector<rational> v(static_cast<std::size_t>(dim()));
    if (m_phi == 1) {
        // N = 1 or 2: zeta is the rational root of the linear cyclotomic polynomial.
        v[0] = rational(-m_cyclotomic[0]);
    } else {
        v[1] = 1;
    }
    return v;
}

std::vector<rational> extension_ring::radical() const
{
    std::vector<rational> v(static_cast<std::size_t>(dim()));
    if (m_radical_degree == 1) {
        v[0] = m_radicand;
    } else {
        v[static_cast<std::size_t>(m_phi)] = 1;
    }
    return v;
}

ring_ptr common_ring(const ring_ptr &a, const ring_ptr &b)
{
    if (!a) {
        return b;
    }
    if (!b || a == b) {
        return a;
    }
    if (!a->same_as(*b)) {
        throw error(error_code::ring_mismatch, "coefficients belong to different extension rings");
    }
    return a;
}

coeff::coeff(ring_ptr ring, std::vector<rational> components) : m_ring(std::move(ring)), m_v(std::move(components))
{
    if (!m_ring) {
        if (m_v.size() != 1) {
            throw error(error_code::invalid_argument, "rational coefficient needs exactly one component");
        }
        m_q = m_v[0];
        m_v.clear();
    } else if (m_v.size() != static_cast<std::size_t>(m_ring->dim())) {
        throw error(error_code::invalid_argument, "component count does not match ring dimension");
    }
}

std::vector<rational> coeff::promoted(const ring_ptr &ring) const
{
    if (m_ring) {
        return m_v;
    }
    std::vector<rational> v(static_cast<std::size_t>(ring->dim()));
    v[0] = m_q;
    return v;
}

void coeff::adopt_ring(const ring_ptr &ring)
{
    if (!ring || m_ring) {
        return;
    }
    m_v = promoted(ring);
    m_ring = ring;
    m_q = 0;
}

bool coeff::is_zero() const
{
    if (!m_ring) {
        return m_q == 0;
    }
    for (const auto &c : m_v) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool coeff::is_rational() const
{
    if (!m_ring) {
        return true;
    }
    for (std::size_t i = 1; i < m_v.size(); ++i) {
        if (m_v[i] != 0) {
            return false;
        }
    }
    return true;
}

rational coeff::rational_value() const
{
    if (!is_rational()) {
        throw error(error_code::invalid_argument, "coefficient " + to_string() + " is not rational");
    }
    return rational_part();
}

rational coeff::rational_part() const
{
    return m_ring ? m_v[0] : m_q;
}

coeff coeff::with_rational_part(const rational &q) const
{
    coeff out(*this);
    if (out.m_ring) {
        out.m_v[0] = q;
    } else {
        out.m_q = q;
    }
    return out;
}

std::vector<rational> coeff::components() const
{
    return m_ring ? m_v : std::vector<rational>{m_q};
}

coeff &coeff::operator+=(const coeff &other)
{
    const auto ring = common_ring(m_ring, other.m_ring);
    if (!ring) {
        m_q += other.m_q;
        return *this;
    }
    adopt_ring(ring);
    if (other.m_ring) {
        for (std::size_t i = 0; i < m_v.size(); ++i) {
            m_v[i] += other.m_v[i];
        }
    } else {
        m_v[0] += other.m_q;
    }
    return *this;
}

coeff &coeff::operator-=(const coeff &other)
{
    return *this += -other;
}

coeff &coeff::operator*=(const coeff &other)
{
    const auto ring = common_ring(m_ring, other.m_ring);
    if (!ring) {
        m_q *= other.m_q;
        return *this;
    }
    if (!other.m_ring) {
        for (auto &c : m_v) {
            c *= other.m_q;
        }
        return *this;
    }
    if (!m_ring) {
        const rational q = m_q;
        *this = other;
        for (auto &c : m_v) {
            c *= q;
        }
        return *this;
    }
    m_v = ring->multiply(m_v, other.m_v);
    return *this;
}

coeff coeff::operator-() const
{
    coeff out(*this);
    if (out.m_ring) {
        for (auto &c : out.m_v) {
            c = -c;
        }
    } else {
        out.m_q = -out.m_q;
    }
    return out;
}

std::optional<coeff> coeff::try_inverse() const
{
    if (!m_ring) {
        if (m_q == 0) {
            return std::nullopt;
        }
        return coeff(rational(1 / m_q));
    }
    if (is_rational()) {
        if (m_v[0] == 0) {
            return std::nullopt;
        }
        coeff out(m_ring, std::vector<rational>(m_v.size()));
        out.m_v[0] = 1 / m_v[0];
        return out;
    }
    auto inv = m_ring->inverse(m_v);
    if (!inv) {
        return std::nullopt;
    }
    return coeff(m_ring, std::move(*inv));
}

coeff coeff::inverse() const
{
    auto inv = try_inverse();
    if (!inv) {
        throw error(error_code::non_unit, "coefficient " + to_string() + " is not a unit");
    }
    return std::move(*inv);
}

coeff coeff::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    coeff result(1);
    coeff base(*this);
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const coeff &lhs, const coeff &rhs)
{
    if (!lhs.m_ring && !rhs.m_ring) {
        return lhs.m_q == rhs.m_q;
    }
    const auto ring = common_ring(lhs.m_ring, rhs.m_ring);
    return lhs.promoted(ring) == rhs.promoted(ring);
}

std::strong_ordering operator<=>(const coeff &lhs, const coeff &rhs)
{
    const auto ring = common_ring(lhs.m_ring, rhs.m_ring);
    if (!ring) {
        const int c = cmp(lhs.m_q, rhs.m_q);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const auto a = lhs.promoted(ring);
    const auto b = rhs.promoted(ring);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) {
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::string coeff::to_string() const
{
    if (!m_ring) {
        return lft::to_string(m_q);
    }
    const auto phi = static_cast<std::size_t>(m_ring->cyclotomic_degree());
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < m_v.size(); ++k) {
        const rational &c = m_v[k];
        if (c == 0) {
            continue;
        }
        const auto i = k % phi, j = k / phi;
        rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        if (i > 0) {
            mono += i == 1 ? std::string("z") : "z^" + std::to_string(i);
        }
        if (j > 0) {
            if (!mono.empty()) {
                mono += '*';
            }
            mono += j == 1 ? std::string("x") : "x^" + std::to_string(j);
        }
        if (mono.empty()) {
            os << lft::to_string(mag);
        } else if (mag == 1) {
            os << mono;
        } else {
            os << lft::to_string(mag) << '*' << mono;
        }
    }
    return first ? std::string("0") : os.str();
}

} // namespace lft
