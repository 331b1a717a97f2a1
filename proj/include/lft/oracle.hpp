#pragma once

#include <optional>
#include <string>
#include <vector>

#include <lft/linalg.hpp>
#include <lft/transform.hpp>

namespace lft
{

struct identity_check
{
    std::string name;
    bool passed = false;
    bool skipped = false;
    // Coefficient index of the first mismatch, -1 when not applicable.
    long mismatch = -1;
    std::string detail;
};

struct oracle_report
{
    std::vector<identity_check> checks;
    // b_0.. recovered by eigen-lifting (first regular block).
    std::vector<coeff> b;

    bool passed() const;
    const identity_check *first_failure() const;
    const identity_check *find(const std::string &name) const;
    void add(identity_check c);
};

struct gamma_pair
{
    series_matrix gamma;
    matrix gamma0;
};

// (r+s)x(r+s) companion-type matrix in Z' with superdiagonal ones and first
// column (0, ..., 0, a_s Z'^s, ..., a_0).
gamma_pair build_gamma(long r, long s, const std::vector<coeff> &a);

// r x r companion matrix in T' whose characteristic polynomial is
// lambda^r + sum a_i T'^i lambda^(s-i); used for the transform from infinity
// to zero.
series_matrix build_gamma_inf_zero(long r, long s, const std::vector<coeff> &a);

struct hensel_result
{
    trunc_series alpha;
    // Coefficient vectors u_0, u_1, ... of the eigenvector.
    std::vector<vec> u;
};

// Lifts a simple root alpha0 of char(D_0) to an eigenvalue series of D.
hensel_result hensel_lift_eigen(const series_matrix &d, const coeff &alpha0, long prec);

struct zero_inf_matrices
{
    std::vector<matrix> a;
    matrix b;
};

// A_0..A_s and B of the transform from zero to infinity.
zero_inf_matrices build_zero_inf_matrices(long r, long s, const std::vector<coeff> &a);

// The connection matrix of the transform in the basis Z'^i (x) T^-i e,
// derived from the action of d/dt o t and t on T^-i e.
series_matrix zero_inf_connection_matrix(long r, long s, const std::vector<coeff> &a);

struct inf_matrices
{
    series_matrix a;             // A, with the 1/z' entry as a Laurent term
    std::vector<matrix> b;       // B_1..B_r
    series_matrix d;             // Z' L^-1 A L
    series_matrix product;       // prod_i Z' L^-1 (A + B_i) L
    std::vector<matrix> c;       // C_0..C_s
    std::vector<matrix> c_prime; // C'_0..C'_s
    matrix p;
};

inf_matrices build_inf_matrices(long r, long s, const std::vector<coeff> &a);

// Series b(Y) of the transformed symbol obtained by eigen-lifting, with the
// given user-facing branch (as accepted by transform_piece).
trunc_series oracle_b_series(transform_kind kind, long r, long s, const std::vector<coeff> &a, const coeff &branch,
                             long prec);

// The system sum_{i<=k} (A_i - alpha_i) v_{k-i} = 0 (k < s) together with
// sum_{i<s} (A_i - alpha_i) v_{s-i} + (last - alpha_s) v_0 = 0 has a solution
// with v_0 != 0.
bool shift_system_solvable(const std::vector<matrix> &a, const matrix &last, const std::vector<coeff> &alpha);

oracle_report shift_identity_check_theorem1(long r, long s, const rational &a0);
oracle_report shift_identity_check_theorem3(long r, long s, const rational &a0);
// Same check against caller-supplied C and C' (for negative controls).
oracle_report shift_identity_check_theorem3(long r, long s, const rational &a0, const matrix &c_s,
                                            const matrix &c_prime_s);

oracle_report verify_theorem1(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b);
oracle_report verify_theorem2(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b);
oracle_report verify_theorem3(const connection_piece &input, const connection_piece &output, long prec,
                              const std::optional<coeff> &branch, const backend &b);

oracle_report verify_piece(transform_kind kind, const connection_piece &input, const connection_piece &output,
                           long prec, const std::optional<coeff> &branch, const backend &b);

} // namespace lft
