#include <lft/error.hpp>
#include <lft/linalg.hpp>

#include <algorithm>

namespace lft
{

coeff dot(const vec &lhs, const vec &rhs)
{
    if (lhs.size() != rhs.size()) {
        throw error(error_code::invalid_argument, "dot product of vectors of different length");
    }
    coeff acc;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!lhs[i].is_zero() && !rhs[i].is_zero()) {
            acc += lhs[i] * rhs[i];
        }
    }
    return acc;
}

bool is_zero(const vec &v)
{
    return std::all_of(v.begin(), v.end(), [](const coeff &c) { return c.is_zero(); });
}

matrix matrix::identity(std::size_t n)
{
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = coeff(1);
    }
    return m;
}

matrix matrix::diagonal(const vec &d)
{
    matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

bool matrix::is_zero() const
{
    return lft::is_zero(m_data);
}

matrix matrix::transposed() const
{
    matrix t(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

matrix matrix::scaled(const coeff &c) const
{
    matrix m = *this;
    for (auto &x : m.m_data) {
        if (!x.is_zero()) {
            x *= c;
        }
    }
    return m;
}

coeff matrix::trace() const
{
    coeff t;
    for (std::size_t i = 0; i < std::min(m_rows, m_cols); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

matrix &matrix::operator+=(const matrix &other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw error(error_code::invalid_argument, "matrix shapes differ");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) {
        if (!other.m_data[i].is_zero()) {
            m_data[i] += other.m_data[i];
        }
    }
    return *this;
}

matrix &matrix::operator-=(const matrix &other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw error(error_code::invalid_argument, "matrix shapes differ");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) {
        if (!other.m_data[i].is_zero()) {
            m_data[i] -= other.m_data[i];
        }
    }
    return *this;
}

matrix operator*(const matrix &lhs, const matrix &rhs)
{
    if (lhs.m_cols != rhs.m_rows) {
        throw error(error_code::invalid_argument, "matrix shapes do not compose");
    }
    matrix out(lhs.m_rows, rhs.m_cols);
    for (std::size_t i = 0; i < lhs.m_rows; ++i) {
        for (std::size_t k = 0; k < lhs.m_cols; ++k) {
            const coeff &a = lhs(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.m_cols; ++j) {
                if (!rhs(k, j).is_zero()) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
    }
    return out;
}

vec operator*(const matrix &m, const vec &v)
{
    if (m.m_cols != v.size()) {
        throw error(error_code::invalid_argument, "matrix and vector shapes differ");
    }
    vec out(m.m_rows);
    for (std::size_t i = 0; i < m.m_rows; ++i) {
        for (std::size_t j = 0; j < m.m_cols; ++j) {
            if (!m(i, j).is_zero() && !v[j].is_zero()) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

vec operator*(const vec &v, const matrix &m)
{
    if (m.m_rows != v.size()) {
        throw error(error_code::invalid_argument, "vector and matrix shapes differ");
    }
    vec out(m.m_cols);
    for (std::size_t i = 0; i < m.m_rows; ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m.m_cols; ++j) {
            if (!m(i, j).is_zero()) {
                out[j] += v[i] * m(i, j);
            }
        }
    }
    return out;
}

namespace
{

struct echelon
{
    matrix m;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; the augmented columns (if any) follow the first
// `cols` columns and are never chosen as pivots.
echelon reduce(matrix m, std::size_t cols)
{
    echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.rows(); ++col) {
        std::optional<coeff> inv;
        std::size_t pick = row;
        bool saw_nonzero = false;
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) {
                continue;
            }
            saw_nonzero = true;
            if ((inv = m(i, col).try_inverse())) {
                pick = i;
                break;
            }
        }
        if (!inv) {
            if (saw_nonzero) {
                throw error(error_code::non_unit, "elimination met a zero divisor pivot");
            }
            continue;
        }
        if (pick != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(pick, j), m(row, j));
            }
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(row, j).is_zero()) {
                m(row, j) *= *inv;
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) {
                continue;
            }
            const coeff f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) {
                    m(i, j) -= f * m(row, j);
                }
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

std::vector<vec> nullspace(const matrix &m)
{
    const auto e = reduce(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        vec v(m.cols());
        v[free] = coeff(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.m(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<vec> solve(const matrix &m, const vec &rhs)
{
    if (rhs.size() != m.rows()) {
        throw error(error_code::invalid_argument, "right-hand side has the wrong length");
    }
    matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = rhs[i];
    }
    const auto e = reduce(std::move(aug), m.cols());
    for (std::size_t i = e.pivots.size(); i < m.rows(); ++i) {
        if (!e.m(i, m.cols()).is_zero()) {
            return std::nullopt;
        }
    }
    vec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        x[e.pivots[r]] = e.m(r, m.cols());
    }
    return x;
}

vec char_poly(const matrix &m)
{
    // Faddeev-LeVerrier.
    const std::size_t n = m.rows();
    vec c(n + 1);
    c[n] = coeff(1);
    matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + matrix::identity(n).scaled(c[n - k + 1]);
        c[n - k] = (m * mk).trace() * coeff(ratio(-1, static_cast<long>(k)));
    }
    return c;
}

vec poly_derivative(const vec &p)
{
    vec d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(p[i] * coeff(static_cast<long>(i)));
    }
    return d;
}

coeff poly_eval(const vec &p, const coeff &x)
{
    coeff acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

series_matrix::series_matrix(std::size_t dim, long prec) : m_dim(dim), m_low(0), m_prec(prec) {}

series_matrix series_matrix::constant(const matrix &m, long prec)
{
    return from_terms(0, {m}, prec);
}

series_matrix series_matrix::from_terms(long low, std::vector<matrix> terms, long prec)
{
    series_matrix s;
    s.m_dim = terms.empty() ? 0 : terms.front().rows();
    s.m_low = low;
    s.m_prec = prec;
    if (static_cast<long>(terms.size()) > prec - low && prec < kExact) {
        terms.resize(static_cast<std::size_t>(std::max(0L, prec - low)));
    }
    s.m_terms = std::move(terms);
    s.trim();
    return s;
}

void series_matrix::trim()
{
    while (!m_terms.empty() && m_terms.back().is_zero() && m_prec >= kExact) {
        m_terms.pop_back();
    }
    std::size_t lead = 0;
    while (lead < m_terms.size() && m_terms[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        m_terms.erase(m_terms.begin(), m_terms.begin() + static_cast<long>(lead));
        m_low += static_cast<long>(lead);
    }
}

matrix series_matrix::coefficient(long e) const
{
    if (e >= m_prec) {
        throw error(error_code::precision_exhausted, "matrix coefficient requested past precision");
    }
    if (e < m_low || e >= end()) {
        return matrix(m_dim, m_dim);
    }
    return m_terms[static_cast<std::size_t>(e - m_low)];
}

trunc_series series_matrix::entry(std::size_t i, std::size_t j) const
{
    std::vector<coeff> c;
    for (const auto &t : m_terms) {
        c.push_back(t(i, j));
    }
    return trunc_series::from_coeffs(m_low, std::move(c), m_prec);
}

void series_matrix::add_to_entry(std::size_t i, std::size_t j, long e, const coeff &c)
{
    if (e >= m_prec) {
        return;
    }
    if (m_terms.empty()) {
        m_low = e;
    }
    if (e < m_low) {
        m_terms.insert(m_terms.begin(), static_cast<std::size_t>(m_low - e), matrix(m_dim, m_dim));
        m_low = e;
    }
    while (end() <= e) {
        m_terms.emplace_back(m_dim, m_dim);
    }
    m_terms[static_cast<std::size_t>(e - m_low)](i, j) += c;
}

series_matrix series_matrix::truncated(long prec) const
{
    if (prec >= m_prec) {
        return *this;
    }
    series_matrix s = *this;
    s.m_prec = prec;
    if (s.end() > prec) {
        s.m_terms.resize(static_cast<std::size_t>(std::max(0L, prec - s.m_low)));
    }
    s.trim();
    return s;
}

series_matrix series_matrix::conjugated_by_powers(const std::vector<long> &shift) const
{
    if (m_prec < kExact) {
        throw error(error_code::invalid_argument, "conjugation by powers needs an exact matrix");
    }
    series_matrix out(m_dim);
    out.m_prec = kExact;
    for (std::size_t k = 0; k < m_terms.size(); ++k) {
        for (std::size_t i = 0; i < m_dim; ++i) {
            for (std::size_t j = 0; j < m_dim; ++j) {
                const coeff &c = m_terms[k](i, j);
                if (!c.is_zero()) {
                    out.add_to_entry(i, j, m_low + static_cast<long>(k) + shift[j] - shift[i], c);
                }
            }
        }
    }
    out.trim();
    return out;
}

series_matrix series_matrix::shifted(long k) const
{
    series_matrix s = *this;
    s.m_low += k;
    s.m_prec = exp_add(s.m_prec, k);
    return s;
}

series_matrix series_matrix::scaled(const coeff &c) const
{
    series_matrix s = *this;
    for (auto &t : s.m_terms) {
        t = t.scaled(c);
    }
    s.trim();
    return s;
}

series_matrix series_matrix::pow(long e) const
{
    if (e < 0) {
        throw error(error_code::invalid_argument, "negative matrix powers are not supported");
    }
    series_matrix result = constant(matrix::identity(m_dim));
    series_matrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

coeff series_matrix::trace_coefficient(long e) const
{
    return coefficient(e).trace();
}

series_matrix operator+(const series_matrix &lhs, const series_matrix &rhs)
{
    const std::size_t dim = std::max(lhs.m_dim, rhs.m_dim);
    series_matrix out(dim, std::min(lhs.m_prec, rhs.m_prec));
    if (lhs.m_terms.empty() && rhs.m_terms.empty()) {
        return out;
    }
    long lo = lhs.m_terms.empty() ? rhs.m_low : (rhs.m_terms.empty() ? lhs.m_low : std::min(lhs.m_low, rhs.m_low));
    long hi = std::min(std::max(lhs.end(), rhs.end()), out.m_prec);
    if (lhs.m_terms.empty()) {
        hi = std::min(rhs.end(), out.m_prec);
    } else if (rhs.m_terms.empty()) {
        hi = std::min(lhs.end(), out.m_prec);
    }
    out.m_low = lo;
    for (long e = lo; e < hi; ++e) {
        matrix t(dim, dim);
        if (e >= lhs.m_low && e < lhs.end()) {
            t += lhs.m_terms[static_cast<std::size_t>(e - lhs.m_low)];
        }
        if (e >= rhs.m_low && e < rhs.end()) {
            t += rhs.m_terms[static_cast<std::size_t>(e - rhs.m_low)];
        }
        out.m_terms.push_back(std::move(t));
    }
    out.trim();
    return out;
}

series_matrix operator-(const series_matrix &lhs, const series_matrix &rhs)
{
    return lhs + rhs.scaled(coeff(-1));
}

series_matrix operator*(const series_matrix &lhs, const series_matrix &rhs)
{
    if (lhs.m_dim != rhs.m_dim) {
        throw error(error_code::invalid_argument, "series matrix sizes differ");
    }
    const std::size_t dim = lhs.m_dim;
    if (lhs.m_terms.empty() || rhs.m_terms.empty()) {
        const long pl = lhs.m_terms.empty() ? lhs.m_prec : lhs.m_low;
        const long pr = rhs.m_terms.empty() ? rhs.m_prec : rhs.m_low;
        series_matrix out(dim, std::min(exp_add(lhs.m_prec, pr), exp_add(rhs.m_prec, pl)));
        return out;
    }
    const long prec = std::min(exp_add(lhs.m_prec, rhs.m_low), exp_add(rhs.m_prec, lhs.m_low));
    const long lo = lhs.m_low + rhs.m_low;
    const long hi = std::min(prec, lhs.end() + rhs.end() - 1);
    std::vector<matrix> terms;
    for (long e = lo; e < hi; ++e) {
        matrix t(dim, dim);
        for (std::size_t i = 0; i < lhs.m_terms.size(); ++i) {
            const long j = e - lo - static_cast<long>(i);
            if (j < 0 || j >= static_cast<long>(rhs.m_terms.size())) {
                continue;
            }
            t += lhs.m_terms[i] * rhs.m_terms[static_cast<std::size_t>(j)];
        }
        terms.push_back(std::move(t));
    }
    series_matrix out = series_matrix::from_terms(lo, std::move(terms), prec);
    out.m_dim = dim;
    return out;
}

bool agree(const series_matrix &lhs, const series_matrix &rhs)
{
    const long prec = std::min(lhs.m_prec, rhs.m_prec);
    long lo = std::min(lhs.m_terms.empty() ? prec : lhs.m_low, rhs.m_terms.empty() ? prec : rhs.m_low);
    long hi = std::max(lhs.m_terms.empty() ? lo : lhs.end(), rhs.m_terms.empty() ? lo : rhs.end());
    hi = std::min(hi, prec);
    for (long e = lo; e < hi; ++e) {
        if (!(lhs.coefficient(e) == rhs.coefficient(e))) {
            return false;
        }
    }
    return true;
}

std::vector<trunc_series> char_poly(const series_matrix &m)
{
    // Faddeev-LeVerrier over the series ring.
    const std::size_t n = m.dim();
    std::vector<trunc_series> c(n + 1);
    c[n] = trunc_series::constant(coeff(1));
    series_matrix mk(n);
    const matrix id = matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        series_matrix diag(n, c[n - k + 1].prec());
        if (!c[n - k + 1].is_zero()) {
            for (long e = c[n - k + 1].low(); e < c[n - k + 1].end(); ++e) {
                const coeff v = c[n - k + 1].at(e);
                if (!v.is_zero()) {
                    for (std::size_t i = 0; i < n; ++i) {
                        diag.add_to_entry(i, i, e, v);
                    }
                }
            }
        }
        mk = m * mk + diag;
        const series_matrix prod = m * mk;
        std::vector<coeff> tr;
        const long lo = prod.low();
        const long hi = prod.prec() < kExact ? prod.prec() : prod.end();
        for (long e = lo; e < hi; ++e) {
            tr.push_back(prod.trace_coefficient(e) * coeff(ratio(-1, static_cast<long>(k))));
        }
        c[n - k] = trunc_series::from_coeffs(lo, std::move(tr), prod.prec());
    }
    return c;
}

trunc_series poly_eval(const std::vector<trunc_series> &p, const trunc_series &x)
{
    trunc_series acc = trunc_series::zero(kExact, x.denom());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

} // namespace lft
