#include <lft/error.hpp>
#include <lft/oracle.hpp>

#include <algorithm>
#include <numeric>

namespace lft
{

bool oracle_report::passed() const
{
    return first_failure() == nullptr;
}

const identity_check *oracle_report::first_failure() const
{
    for (const auto &c : checks) {
        if (!c.passed && !c.skipped) {
            return &c;
        }
    }
    return nullptr;
}

const identity_check *oracle_report::find(const std::string &name) const
{
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

void oracle_report::add(identity_check c)
{
    checks.push_back(std::move(c));
}

namespace
{

using idx = std::size_t;

identity_check make_check(std::string name, bool passed, std::string detail = {}, long mismatch = -1)
{
    identity_check c;
    c.name = std::move(name);
    c.passed = passed;
    c.detail = std::move(detail);
    c.mismatch = mismatch;
    return c;
}

identity_check skipped_check(std::string name, std::string detail)
{
    identity_check c;
    c.name = std::move(name);
    c.skipped = true;
    c.detail = std::move(detail);
    return c;
}

coeff q(long p, long d = 1)
{
    return coeff(ratio(p, d));
}

void require_symbol(long r, long s, const std::vector<coeff> &a)
{
    if (r < 1 || s < 1 || static_cast<long>(a.size()) != s + 1) {
        throw error(error_code::invalid_argument, "symbol needs a_0..a_s with r, s >= 1");
    }
    if (a[0].is_zero()) {
        throw error(error_code::invalid_argument, "a_0 must be nonzero");
    }
}

// Coefficients of the series product sum_{i<=j} m_i v_{j-i} for a matrix
// series and a vector series, both given by coefficient lists.
vec matvec_coefficient(const series_matrix &m, const std::vector<vec> &v, long j)
{
    vec acc(m.dim());
    for (long i = 0; i <= j; ++i) {
        const matrix mi = m.coefficient(i);
        if (mi.is_zero()) {
            continue;
        }
        const vec t = mi * v[static_cast<idx>(j - i)];
        for (idx k = 0; k < acc.size(); ++k) {
            acc[k] += t[k];
        }
    }
    return acc;
}

bool series_equal_upto(const trunc_series &x, const trunc_series &y, long prec)
{
    for (long e = std::min(x.low(), y.low()); e < prec; ++e) {
        if (x.at(e) != y.at(e)) {
            return false;
        }
    }
    return true;
}

} // namespace

gamma_pair build_gamma(long r, long s, const std::vector<coeff> &a)
{
    require_symbol(r, s, a);
    const idx n = static_cast<idx>(r + s);
    series_matrix g(n);
    for (idx i = 0; i + 1 < n; ++i) {
        g.add_to_entry(i, i + 1, 0, coeff(1));
    }
    for (long i = 0; i <= s; ++i) {
        if (!a[static_cast<idx>(i)].is_zero()) {
            g.add_to_entry(n - 1 - static_cast<idx>(i), 0, i, a[static_cast<idx>(i)]);
        }
    }
    return {g, g.coefficient(0)};
}

series_matrix build_gamma_inf_zero(long r, long s, const std::vector<coeff> &a)
{
    require_symbol(r, s, a);
    if (r <= s) {
        throw error(error_code::invalid_argument, "the companion model from infinity to zero needs r > s");
    }
    const idx n = static_cast<idx>(r);
    series_matrix g(n);
    for (idx i = 0; i + 1 < n; ++i) {
        g.add_to_entry(i, i + 1, 0, coeff(1));
    }
    for (long i = 0; i <= s; ++i) {
        if (!a[static_cast<idx>(i)].is_zero()) {
            g.add_to_entry(static_cast<idx>(r - 1 - s + i), 0, i, -a[static_cast<idx>(i)]);
        }
    }
    return g;
}

hensel_result hensel_lift_eigen(const series_matrix &d, const coeff &alpha0, long prec)
{
    if (d.low() < 0) {
        throw error(error_code::invalid_argument, "eigen-lifting needs a power series matrix");
    }
    if (prec > d.prec()) {
        throw error(error_code::precision_exhausted, "matrix is not known to the requested precision");
    }
    const idx n = d.dim();
    const matrix d0 = d.coefficient(0);
    const vec cp = char_poly(d0);
    if (!poly_eval(cp, alpha0).is_zero()) {
        throw error(error_code::invalid_branch, alpha0.to_string() + " is not an eigenvalue of the constant term");
    }
    if (poly_eval(poly_derivative(cp), alpha0).is_zero()) {
        throw error(error_code::invalid_branch, alpha0.to_string() + " is a multiple eigenvalue");
    }
    const matrix m0 = d0 - matrix::identity(n).scaled(alpha0);
    const auto right = nullspace(m0);
    const auto left = nullspace(m0.transposed());
    if (right.size() != 1 || left.size() != 1) {
        throw error(error_code::invalid_branch, "eigenspace of a simple root is not a line");
    }
    const vec &eps = left.front();
    hensel_result res;
    res.u.push_back(right.front());
    const coeff den_inv = dot(eps, res.u[0]).inverse();
    std::vector<coeff> alpha{alpha0};
    for (long j = 1; j < prec; ++j) {
        vec rj(n);
        for (long i = 1; i <= j; ++i) {
            const matrix di = d.coefficient(i);
            if (!di.is_zero()) {
                const vec t = di * res.u[static_cast<idx>(j - i)];
                for (idx k = 0; k < n; ++k) {
                    rj[k] += t[k];
                }
            }
        }
        for (long i = 1; i < j; ++i) {
            if (alpha[static_cast<idx>(i)].is_zero()) {
                continue;
            }
            for (idx k = 0; k < n; ++k) {
                rj[k] -= alpha[static_cast<idx>(i)] * res.u[static_cast<idx>(j - i)][k];
            }
        }
        const coeff aj = dot(eps, rj) * den_inv;
        vec rhs(n);
        for (idx k = 0; k < n; ++k) {
            rhs[k] = aj * res.u[0][k] - rj[k];
        }
        auto uj = solve(m0, rhs);
        if (!uj) {
            throw error(error_code::invalid_branch, "eigen-lifting equation is inconsistent");
        }
        alpha.push_back(aj);
        res.u.push_back(std::move(*uj));
    }
    res.alpha = trunc_series::from_coeffs(0, std::move(alpha), prec);
    return res;
}

zero_inf_matrices build_zero_inf_matrices(long r, long s, const std::vector<coeff> &a)
{
    require_symbol(r, s, a);
    const idx n = static_cast<idx>(r + s);
    zero_inf_matrices m;
    for (long i = 0; i <= s; ++i) {
        matrix ai(n, n);
        for (long col = 1; col <= r; ++col) {
            ai(static_cast<idx>(col + s - i - 1), static_cast<idx>(col - 1)) = a[static_cast<idx>(i)];
        }
        if (i == 0) {
            for (long k = 1; k <= s; ++k) {
                ai(static_cast<idx>(k - 1), static_cast<idx>(r + k - 1)) = coeff(1);
            }
        }
        m.a.push_back(std::move(ai));
    }
    m.b = matrix(n, n);
    for (long i = 1; i <= r + s; ++i) {
        coeff v = q(i, r + s);
        if (i <= r) {
            v += q(r - i, r);
        }
        m.b(static_cast<idx>(i - 1), static_cast<idx>(i - 1)) = v;
    }
    return m;
}

series_matrix zero_inf_connection_matrix(long r, long s, const std::vector<coeff> &a)
{
    require_symbol(r, s, a);
    const long n = r + s;
    // z' d/dz' on the basis iota T^-i e, from
    //   (d/dt o t) T^-i e = (r-i)/r T^-i e - sum_j a_j T^-(s+i-j) e  (i <= r)
    //   t T^-i e = T^-(i-r) e                                         (i > r)
    // together with iota o (d/dt o t) = z' d/dz' o iota and iota o t = -z'^2 d/dz' o iota.
    // Entries are Laurent series in z' = Z'^n, stored by Z'-exponent.
    struct term
    {
        long row, col, zexp;
        coeff value;
    };
    std::vector<term> terms;
    for (long i = 1; i <= n; ++i) {
        if (i <= r) {
            terms.push_back({i, i, 0, q(r - i, r)});
            for (long j = 0; j <= s; ++j) {
                terms.push_back({s + i - j, i, 0, -a[static_cast<idx>(j)]});
            }
        } else {
            terms.push_back({i - r, i, -1, coeff(-1)});
        }
    }
    // Basis Z'^i (x) iota T^-i e and Z' d/dZ' = n z' d/dz'.
    series_matrix out(static_cast<idx>(n));
    for (const auto &t : terms) {
        if (t.value.is_zero()) {
            continue;
        }
        out.add_to_entry(static_cast<idx>(t.row - 1), static_cast<idx>(t.col - 1), t.zexp * n + t.col - t.row,
                         t.value * coeff(n));
    }
    for (long i = 1; i <= n; ++i) {
        out.add_to_entry(static_cast<idx>(i - 1), static_cast<idx>(i - 1), 0, coeff(i));
    }
    return out;
}

inf_matrices build_inf_matrices(long r, long s, const std::vector<coeff> &a)
{
    require_symbol(r, s, a);
    if (s <= r) {
        throw error(error_code::invalid_argument, "the model at infinity needs s > r");
    }
    const idx n = static_cast<idx>(s);
    const coeff inv_a0 = a[0].inverse();
    inf_matrices m;
    m.a = series_matrix(n);
    for (idx p = 1; p < n; ++p) {
        m.a.add_to_entry(p, p - 1, 0, coeff(1));
    }
    for (long p = 1; p <= s; ++p) {
        const coeff v = -(a[static_cast<idx>(s + 1 - p)] * inv_a0);
        if (!v.is_zero()) {
            m.a.add_to_entry(static_cast<idx>(p - 1), n - 1, 0, v);
        }
    }
    // -1/(a_0 z') with z' = Z'^(s-r).
    m.a.add_to_entry(static_cast<idx>(r), n - 1, -(s - r), -inv_a0);

    std::vector<long> shift(n);
    std::iota(shift.begin(), shift.end(), 1L);
    auto conj = [&](const series_matrix &x) { return x.conjugated_by_powers(shift).shifted(1); };

    m.d = conj(m.a);
    m.product = series_matrix::constant(matrix::identity(n));
    for (long i = 1; i <= r; ++i) {
        matrix bi(n, n);
        bi(0, n - 1) = -(q(r + i, r) * inv_a0);
        m.b.push_back(bi);
        m.product = m.product * conj(m.a + series_matrix::constant(bi));
    }
    const series_matrix dr = m.d.pow(r);
    for (long i = 0; i <= s; ++i) {
        matrix ci = m.product.coefficient(i);
        if (i == s) {
            vec diag(n);
            for (long k = 1; k <= s; ++k) {
                diag[static_cast<idx>(k - 1)] = q(k, s - r);
            }
            ci -= matrix::diagonal(diag);
        }
        m.c.push_back(std::move(ci));
        m.c_prime.push_back(dr.coefficient(i));
    }
    m.p = matrix(n, n);
    for (long i = 1; i <= r; ++i) {
        m.p(static_cast<idx>(i - 1), static_cast<idx>(i + s - r - 1)) = -(q(r + i, r) * inv_a0);
    }
    return m;
}

trunc_series oracle_b_series(transform_kind kind, long r, long s, const std::vector<coeff> &a, const coeff &branch,
                             long prec)
{
    switch (kind) {
    case transform_kind::zero_to_inf: {
        const auto lift = hensel_lift_eigen(build_gamma(r, s, a).gamma, branch, prec);
        return pow_series(lift.alpha, r);
    }
    case transform_kind::inf_to_zero: {
        const auto lift = hensel_lift_eigen(build_gamma_inf_zero(r, s, a), branch, prec);
        return -pow_series(lift.alpha, r);
    }
    case transform_kind::inf_to_inf: {
        const auto lift = hensel_lift_eigen(build_inf_matrices(r, s, a).d, branch.inverse(), prec);
        return pow_series(lift.alpha, r);
    }
    }
    throw error(error_code::invalid_argument, "bad transform kind");
}

bool shift_system_solvable(const std::vector<matrix> &a, const matrix &last, const std::vector<coeff> &alpha)
{
    const idx s = alpha.size() - 1;
    if (a.size() < s) {
        throw error(error_code::invalid_argument, "shift system needs A_0..A_(s-1)");
    }
    const idx n = last.rows();
    matrix big((s + 1) * n, (s + 1) * n);
    auto place = [&](idx brow, idx bcol, const matrix &m, const coeff &shift) {
        for (idx i = 0; i < n; ++i) {
            for (idx j = 0; j < n; ++j) {
                big(brow * n + i, bcol * n + j) = m(i, j);
            }
            big(brow * n + i, bcol * n + i) -= shift;
        }
    };
    for (idx k = 0; k <= s; ++k) {
        for (idx m = 0; m <= k; ++m) {
            const idx i = k - m;
            if (k == s && m == 0) {
                place(k, m, last, alpha[s]);
            } else {
                place(k, m, a[i], alpha[i]);
            }
        }
    }
    for (const auto &v : nullspace(big)) {
        for (idx i = 0; i < n; ++i) {
            if (!v[i].is_zero()) {
                return true;
            }
        }
    }
    return false;
}

oracle_report shift_identity_check_theorem1(long r, long s, const rational &a0)
{
    if (r < 1 || s < 1 || a0 == 0) {
        throw error(error_code::invalid_argument, "shift identity needs r, s >= 1 and a_0 != 0");
    }
    const long n = r + s;
    const backend ring = backend::extension(static_cast<int>(n), static_cast<int>(n), a0);
    const coeff mu = ring.zeta();
    const coeff x = ring.radical();
    const coeff mu_inv = mu.inverse();
    const coeff x_inv = x.inverse();
    std::vector<coeff> a(static_cast<idx>(s + 1));
    a[0] = coeff(a0);
    const auto mats = build_zero_inf_matrices(r, s, a);
    const long d = std::gcd(r, s);

    std::vector<vec> e(static_cast<idx>(n + 1)), eps(static_cast<idx>(n + 1));
    for (long j = 1; j <= n; ++j) {
        for (long i = 1; i <= n; ++i) {
            e[static_cast<idx>(j)].push_back(mu.pow(i * j) * x.pow(i));
            eps[static_cast<idx>(j)].push_back(mu_inv.pow(i * j) * x_inv.pow(i));
        }
    }
    oracle_report rep;
    bool ortho = true;
    bool eigen = true;
    bool shift = true;
    std::string where;
    const matrix shifted_b = mats.b - matrix::identity(static_cast<idx>(n)).scaled(q(2 * r + s, 2 * r + 2 * s));
    for (long k = 1; k <= n && ortho; ++k) {
        for (long l = 1; l <= n; ++l) {
            if (dot(eps[static_cast<idx>(k)], e[static_cast<idx>(l)]) != (k == l ? coeff(n) : coeff())) {
                ortho = false;
                break;
            }
        }
    }
    for (long j = 1; j <= n; ++j) {
        const coeff lambda = mu.pow(r * j) * x.pow(r);
        vec expect_right = e[static_cast<idx>(j)];
        vec expect_left = eps[static_cast<idx>(j)];
        for (auto &c : expect_right) {
            c *= lambda;
        }
        for (auto &c : expect_left) {
            c *= lambda;
        }
        if (mats.a[0] * e[static_cast<idx>(j)] != expect_right || eps[static_cast<idx>(j)] * mats.a[0] != expect_left) {
            eigen = false;
        }
    }
    long pairs = 0;
    for (long k = 1; k <= n; ++k) {
        for (long l = 1; l <= n; ++l) {
            if (((l - k) * d) % n != 0) {
                continue;
            }
            ++pairs;
            if (!dot(eps[static_cast<idx>(k)], shifted_b * e[static_cast<idx>(l)]).is_zero() && shift) {
                shift = false;
                where = "pair (" + std::to_string(k) + ", " + std::to_string(l) + ")";
            }
        }
    }
    rep.add(make_check("orthogonality", ortho));
    rep.add(make_check("a0_eigenvectors", eigen));
    rep.add(make_check("shift_constant", shift, shift ? std::to_string(pairs) + " pairs" : where));
    return rep;
}

oracle_report shift_identity_check_theorem3(long r, long s, const rational &a0)
{
    if (r < 1 || s < 2 * r || a0 == 0) {
        throw error(error_code::invalid_argument, "shift identity at infinity needs s >= 2r and a_0 != 0");
    }
    std::vector<coeff> a(static_cast<idx>(s + 1));
    a[0] = coeff(a0);
    const auto m = build_inf_matrices(r, s, a);
    return shift_identity_check_theorem3(r, s, a0, m.c[static_cast<idx>(s)], m.c_prime[static_cast<idx>(s)]);
}

oracle_report shift_identity_check_theorem3(long r, long s, const rational &a0, const matrix &c_s,
                                            const matrix &c_prime_s)
{
    if (r < 1 || s < 2 * r || a0 == 0) {
        throw error(error_code::invalid_argument, "shift identity at infinity needs s >= 2r and a_0 != 0");
    }
    const long n = s - r;
    const backend ring = backend::extension(static_cast<int>(n), static_cast<int>(n), -a0);
    const coeff eta = ring.zeta();
    const coeff y = ring.radical();
    const coeff eta_inv = eta.inverse();
    const coeff y_inv = y.inverse();
    std::vector<coeff> a(static_cast<idx>(s + 1));
    a[0] = coeff(a0);
    const auto m = build_inf_matrices(r, s, a);
    const long d = std::gcd(r, s);

    std::vector<vec> e(static_cast<idx>(n + 1)), eps(static_cast<idx>(n + 1));
    for (long j = 1; j <= n; ++j) {
        for (long i = 1; i <= s; ++i) {
            e[static_cast<idx>(j)].push_back(i <= r ? coeff() : eta.pow(i * j) * y.pow(i));
            eps[static_cast<idx>(j)].push_back(eta_inv.pow(i * j) * y_inv.pow(i));
        }
    }
    oracle_report rep;
    bool ortho = true;
    bool eigen = true;
    bool shift = true;
    std::string where;
    for (long k = 1; k <= n && ortho; ++k) {
        for (long l = 1; l <= n; ++l) {
            if (dot(eps[static_cast<idx>(k)], e[static_cast<idx>(l)]) != (k == l ? coeff(n) : coeff())) {
                ortho = false;
                break;
            }
        }
    }
    for (long j = 1; j <= n; ++j) {
        const coeff lambda = eta_inv.pow(r * j) * y_inv.pow(r);
        vec expect_right = e[static_cast<idx>(j)];
        vec expect_left = eps[static_cast<idx>(j)];
        for (auto &c : expect_right) {
            c *= lambda;
        }
        for (auto &c : expect_left) {
            c *= lambda;
        }
        if (m.c[0] * e[static_cast<idx>(j)] != expect_right || eps[static_cast<idx>(j)] * m.c[0] != expect_left) {
            eigen = false;
        }
    }
    const matrix target = c_prime_s - c_s - matrix::identity(static_cast<idx>(s)).scaled(q(s - 2 * r, 2 * s - 2 * r));
    long pairs = 0;
    for (long k = 1; k <= n; ++k) {
        for (long l = 1; l <= n; ++l) {
            if (((l - k) * d) % n != 0) {
                continue;
            }
            ++pairs;
            if (!dot(eps[static_cast<idx>(k)], target * e[static_cast<idx>(l)]).is_zero() && shift) {
                shift = false;
                where = "pair (" + std::to_string(k) + ", " + std::to_string(l) + ")";
            }
        }
    }
    rep.add(make_check("orthogonality", ortho));
    rep.add(make_check("c0_eigenvectors", eigen));
    rep.add(make_check("shift_constant", shift, shift ? std::to_string(pairs) + " pairs" : where));
    return rep;
}

namespace
{

struct lifted
{
    trunc_series b;
    coeff expected_eigenvalue;
    long size;
};

// Compares the transform output against oracle-derived data: b_0..b_(s-1)
// from the output's exponential factor (up to the Galois action when the
// backend can express it) and the eigenvalue multiset modulo integers.
void compare_output(oracle_report &rep, const connection_piece &output, point expected_point, long n, long s,
                    const std::vector<lifted> &blocks, const backend &b)
{
    const bool shape = output.at == expected_point && output.ram == n && output.pole_order() == s;
    rep.add(make_check("bookkeeping", shape,
                       shape ? "" : "expected " + std::string(point_name(expected_point)) + " ram " + std::to_string(n)
                                        + " pole order " + std::to_string(s)));
    if (!shape || blocks.empty()) {
        rep.add(skipped_check("b_coefficients", "output shape does not match"));
        return;
    }
    const trunc_series polar = polar_part(output.alpha);
    std::vector<coeff> ob(static_cast<idx>(s));
    for (long i = 0; i < s; ++i) {
        ob[static_cast<idx>(i)] = polar.at(i - s) * q(s - i, n);
    }
    const trunc_series &bb = blocks.front().b;
    auto mismatch_for = [&](const coeff &eps) -> long {
        for (long i = 0; i < s; ++i) {
            if (ob[static_cast<idx>(i)] != bb.at(i) * eps.pow(i - s)) {
                return i;
            }
        }
        return -1;
    };
    long first = mismatch_for(coeff(1));
    std::string detail;
    if (first >= 0) {
        if (auto eps = b.primitive_root_of_unity(static_cast<int>(n))) {
            for (long k = 1; k < n; ++k) {
                if (mismatch_for(eps->pow(k)) < 0) {
                    first = -1;
                    detail = "Galois conjugate by a root of unity of order " + std::to_string(n);
                    break;
                }
            }
        }
    }
    if (first >= 0) {
        detail = "expected " + bb.at(first).to_string() + ", output gives " + ob[static_cast<idx>(first)].to_string();
    }
    rep.add(make_check("b_coefficients", first < 0, detail, first));

    auto reduce = [](std::vector<regular_block> v) {
        for (auto &blk : v) {
            blk.c = blk.c.with_rational_part(fractional_part(blk.c.rational_part()));
        }
        std::sort(v.begin(), v.end(), [](const regular_block &x, const regular_block &y) {
            if (auto c = x.c <=> y.c; c != 0) {
                return c < 0;
            }
            return x.size < y.size;
        });
        return v;
    };
    std::vector<regular_block> expected;
    for (const auto &blk : blocks) {
        expected.push_back({blk.expected_eigenvalue, blk.size});
    }
    const bool eig = reduce(expected) == reduce(output.regular);
    rep.add(make_check("eigenvalues", eig, eig ? "" : "eigenvalue multiset differs modulo integers"));
}

std::vector<coeff> series_coeffs(const trunc_series &s, long prec)
{
    std::vector<coeff> out;
    for (long i = 0; i < prec; ++i) {
        out.push_back(s.at(i));
    }
    return out;
}

void hensel_checks(oracle_report &rep, const series_matrix &d, const hensel_result &lift, long prec,
                   const std::vector<trunc_series> &expected_char)
{
    bool residual = true;
    long bad = -1;
    for (long j = 0; j < prec && residual; ++j) {
        vec v = matvec_coefficient(d, lift.u, j);
        for (long i = 0; i <= j; ++i) {
            const coeff ai = lift.alpha.at(i);
            for (idx k = 0; k < v.size(); ++k) {
                v[k] -= ai * lift.u[static_cast<idx>(j - i)][k];
            }
        }
        if (!is_zero(v)) {
            residual = false;
            bad = j;
        }
    }
    rep.add(make_check("hensel_residual", residual && !is_zero(lift.u[0]), "", bad));

    const auto cp = char_poly(d.truncated(prec));
    bool same = cp.size() == expected_char.size();
    for (idx k = 0; same && k < cp.size(); ++k) {
        same = series_equal_upto(cp[k], expected_char[k], prec);
    }
    rep.add(make_check("char_poly", same));
    const trunc_series value = poly_eval(cp, lift.alpha);
    rep.add(make_check("char_poly_root", value.is_zero() || value.low() >= prec));
}

std::vector<coeff> block_values(const connection_piece &input)
{
    std::vector<coeff> cs;
    for (const auto &blk : input.regular) {
        cs.push_back(blk.c);
    }
    if (cs.empty()) {
        cs.push_back(coeff());
    }
    return cs;
}

void composition_check(oracle_report &rep, const connection_piece &input, const connection_piece &output,
                       transform_kind back, long prec, const backend &b, const std::string &name)
{
    if (!b.root_of_minus_one(static_cast<int>(input.ram))) {
        rep.add(skipped_check(name, "backend has no root of -1 of degree " + std::to_string(input.ram)));
        return;
    }
    try {
        const auto again = transform_piece(output, back, std::max(prec, output.pole_order() + 1), std::nullopt, b);
        const auto expect = canonicalize(pullback_negation(input, b), b);
        const bool ok = again.output == expect;
        rep.add(make_check(name, ok, ok ? "" : "second transform differs from the pullback along t -> -t"));
    } catch (const error &e) {
        if (e.code() == error_code::missing_root) {
            rep.add(skipped_check(name, e.what()));
        } else {
            rep.add(make_check(name, false, e.what()));
        }
    }
}

} // namespace

oracle_report verify_theorem1(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b)
{
    const transform_kind kind = transform_kind::zero_to_inf;
    const long n = branch_degree(input, kind);
    const long r = input.ram;
    const long s = input.pole_order();
    if (prec < s + 1) {
        throw error(error_code::invalid_argument, "precision is below the floor " + std::to_string(s + 1));
    }
    const coeff w0 = resolve_branch(input, kind, branch, b);
    const trunc_series alpha = polar_part(input.alpha);
    oracle_report rep;
    std::vector<lifted> blocks;
    const auto cs = block_values(input);
    for (idx k = 0; k < cs.size(); ++k) {
        const auto a = symbol_coefficients(alpha, r, cs[k]);
        const auto g = build_gamma(r, s, a);
        const auto mats = build_zero_inf_matrices(r, s, a);
        if (k == 0) {
            matrix block(static_cast<idx>(n), static_cast<idx>(n));
            for (idx i = 0; i < static_cast<idx>(s); ++i) {
                block(i, static_cast<idx>(r) + i) = coeff(1);
            }
            for (idx i = 0; i < static_cast<idx>(r); ++i) {
                block(static_cast<idx>(s) + i, i) = a[0];
            }
            rep.add(make_check("a0_block_form", mats.a[0] == block));

            const vec cp0 = char_poly(g.gamma0);
            vec expect0(static_cast<idx>(n + 1));
            expect0[static_cast<idx>(n)] = coeff(1);
            expect0[0] = -a[0];
            rep.add(make_check("gamma0_char_poly", cp0 == expect0));

            std::vector<matrix> terms(mats.a.begin(), mats.a.end());
            const bool power = agree(series_matrix::from_terms(0, terms), g.gamma.pow(r));
            rep.add(make_check("gamma_power", power));

            series_matrix form = series_matrix::constant(mats.b.scaled(coeff(n)));
            for (long i = 0; i <= s; ++i) {
                form = form - series_matrix::from_terms(i - s, {mats.a[static_cast<idx>(i)].scaled(coeff(n))});
            }
            rep.add(make_check("connection_matrix", agree(form, zero_inf_connection_matrix(r, s, a))));
        }

        const auto lift = hensel_lift_eigen(g.gamma, w0, prec);
        std::vector<trunc_series> expected(static_cast<idx>(n + 1), trunc_series());
        expected[static_cast<idx>(n)] = trunc_series::constant(coeff(1));
        for (long i = 0; i <= s; ++i) {
            expected[static_cast<idx>(i)] = trunc_series::monomial(-a[static_cast<idx>(i)], i);
        }
        oracle_report sub;
        hensel_checks(sub, g.gamma, lift, prec, expected);
        for (auto &c : sub.checks) {
            if (k == 0 || !c.passed) {
                rep.add(std::move(c));
            }
        }
        const trunc_series bser = pow_series(lift.alpha, r);
        std::vector<coeff> shifted_alpha = series_coeffs(bser, s + 1);
        shifted_alpha[static_cast<idx>(s)] -= q(2 * r + s, 2 * r + 2 * s);
        const matrix last = mats.a[static_cast<idx>(s)] - mats.b;
        const bool solvable = shift_system_solvable(mats.a, last, shifted_alpha);
        if (k == 0 || !solvable) {
            rep.add(make_check("shift_system", solvable));
        }
        blocks.push_back({bser, coeff(-n) * bser.at(s) + q(s, 2), input.regular.empty() ? 1 : input.regular[k].size});
    }
    rep.b = series_coeffs(blocks.front().b, prec);
    compare_output(rep, output, point::infinity, n, s, blocks, b);
    return rep;
}

oracle_report verify_theorem2(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b)
{
    const transform_kind kind = transform_kind::inf_to_zero;
    const long n = branch_degree(input, kind);
    const long r = input.ram;
    const long s = input.pole_order();
    if (prec < s + 1) {
        throw error(error_code::invalid_argument, "precision is below the floor " + std::to_string(s + 1));
    }
    const coeff y0 = resolve_branch(input, kind, branch, b);
    const trunc_series alpha = polar_part(input.alpha);
    oracle_report rep;
    std::vector<lifted> blocks;
    const auto cs = block_values(input);
    for (idx k = 0; k < cs.size(); ++k) {
        const auto a = symbol_coefficients(alpha, r, cs[k]);
        const series_matrix g = build_gamma_inf_zero(r, s, a);
        const auto lift = hensel_lift_eigen(g, y0, prec);
        std::vector<trunc_series> expected(static_cast<idx>(r + 1), trunc_series());
        expected[static_cast<idx>(r)] = trunc_series::constant(coeff(1));
        for (long i = 0; i <= s; ++i) {
            expected[static_cast<idx>(s - i)] = trunc_series::monomial(a[static_cast<idx>(i)], i);
        }
        oracle_report sub;
        hensel_checks(sub, g, lift, prec, expected);
        for (auto &c : sub.checks) {
            if (k == 0 || !c.passed) {
                rep.add(std::move(c));
            }
        }
        const trunc_series bser = -pow_series(lift.alpha, r);
        blocks.push_back({bser, coeff(-n) * bser.at(s) + q(s, 2), input.regular.empty() ? 1 : input.regular[k].size});
    }
    rep.b = series_coeffs(blocks.front().b, prec);
    compare_output(rep, output, point::zero, n, s, blocks, b);
    if (rep.passed()) {
        composition_check(rep, input, output, transform_kind::zero_to_inf, prec, b, "composition");
    }
    return rep;
}

oracle_report verify_theorem3(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b)
{
    const transform_kind kind = transform_kind::inf_to_inf;
    const long n = branch_degree(input, kind);
    const long r = input.ram;
    const long s = input.pole_order();
    if (prec < s + 1) {
        throw error(error_code::invalid_argument, "precision is below the floor " + std::to_string(s + 1));
    }
    const coeff w0 = resolve_branch(input, kind, branch, b);
    const trunc_series alpha = polar_part(input.alpha);
    oracle_report rep;
    std::vector<lifted> blocks;
    const auto cs = block_values(input);
    for (idx k = 0; k < cs.size(); ++k) {
        const auto a = symbol_coefficients(alpha, r, cs[k]);
        const auto m = build_inf_matrices(r, s, a);
        const coeff inv_a0 = a[0].inverse();
        if (k == 0) {
            bool low_match = true;
            long bad = -1;
            for (long i = 0; i < s; ++i) {
                if (!(m.c[static_cast<idx>(i)] == m.c_prime[static_cast<idx>(i)])) {
                    low_match = false;
                    bad = i;
                    break;
                }
            }
            rep.add(make_check("c_equals_c_prime", low_match, "", bad));
            vec diag(static_cast<idx>(s));
            for (long i = 1; i <= s; ++i) {
                diag[static_cast<idx>(i - 1)] = q(i, s - r);
            }
            if (s >= 2 * r) {
                rep.add(make_check("c_prime_minus_c", m.c_prime[static_cast<idx>(s)] - m.c[static_cast<idx>(s)]
                                                          == matrix::diagonal(diag) - m.p));
            } else {
                // The (r+1, s) entry of D_0 feeds extra terms into C_s.
                rep.add(skipped_check("c_prime_minus_c", "holds for s >= 2r only"));
            }
            const vec cp0 = char_poly(m.d.coefficient(0));
            vec expect0(static_cast<idx>(s + 1));
            expect0[static_cast<idx>(s)] = coeff(1);
            expect0[static_cast<idx>(r)] += inv_a0;
            rep.add(make_check("d0_char_poly", cp0 == expect0));
        }
        const auto lift = hensel_lift_eigen(m.d, w0.inverse(), prec);
        std::vector<trunc_series> expected(static_cast<idx>(s + 1), trunc_series());
        expected[static_cast<idx>(s)] = trunc_series::constant(coeff(1));
        for (long i = 1; i <= s; ++i) {
            expected[static_cast<idx>(s - i)] = trunc_series::monomial(a[static_cast<idx>(i)] * inv_a0, i);
        }
        expected[static_cast<idx>(r)] = expected[static_cast<idx>(r)] + trunc_series::constant(inv_a0);
        oracle_report sub;
        hensel_checks(sub, m.d, lift, prec, expected);
        for (auto &c : sub.checks) {
            if (k == 0 || !c.passed) {
                rep.add(std::move(c));
            }
        }
        const trunc_series bser = pow_series(lift.alpha, r);
        if (s >= 2 * r) {
            std::vector<coeff> shifted_alpha = series_coeffs(bser, s + 1);
            shifted_alpha[static_cast<idx>(s)] -= q(s - 2 * r, 2 * s - 2 * r);
            const bool solvable = shift_system_solvable(m.c, m.c[static_cast<idx>(s)], shifted_alpha);
            if (k == 0 || !solvable) {
                rep.add(make_check("shift_system", solvable));
            }
        }
        blocks.push_back({bser, coeff(-n) * bser.at(s) + q(s, 2), input.regular.empty() ? 1 : input.regular[k].size});
    }
    rep.b = series_coeffs(blocks.front().b, prec);
    compare_output(rep, output, point::infinity, n, s, blocks, b);
    if (s < 2 * r && rep.passed()) {
        // Reduction: the output has pole order at least twice its
        // ramification, so its own transform carries the shift check.
        composition_check(rep, input, output, transform_kind::inf_to_inf, prec, b, "composition");
        try {
            const auto again = transform_piece(output, kind, std::max(prec, s + 1), std::nullopt, b);
            const auto inner = verify_theorem3(output, again.output, std::max(prec, s + 1), std::nullopt, b);
            const identity_check *c = inner.find("shift_system");
            identity_check copy = c ? *c : skipped_check("shift_system", "not reached");
            copy.detail = "via the transform of the output";
            if (!inner.passed() && copy.passed) {
                copy.passed = false;
                copy.detail = "reduced instance failed " + inner.first_failure()->name;
            }
            rep.add(std::move(copy));
        } catch (const error &e) {
            if (e.code() == error_code::missing_root) {
                rep.add(skipped_check("shift_system", e.what()));
            } else {
                rep.add(make_check("shift_system", false, e.what()));
            }
        }
    }
    return rep;
}

oracle_report verify_piece(transform_kind kind, const connection_piece &input, const connection_piece &output,
                           long prec, const std::optional<coeff> &branch, const backend &b)
{
    switch (kind) {
    case transform_kind::zero_to_inf:
        return verify_theorem1(input, output, prec, branch, b);
    case transform_kind::inf_to_zero:
        return verify_theorem2(input, output, prec, branch, b);
    case transform_kind::inf_to_inf:
        return verify_theorem3(input, output, prec, branch, b);
    }
    throw error(error_code::invalid_argument, "bad transform kind");
}

} // namespace lft
