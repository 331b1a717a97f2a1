#include <lft/error.hpp>
#include <lft/rational.hpp>

#include <cctype>

namespace lft
{

std::string_view error_code_name(error_code code) noexcept
{
    switch (code) {
        case error_code::invalid_argument:
            return "invalid_argument";
        case error_code::denominator_mismatch:
            return "denominator_mismatch";
        case error_code::non_unit:
            return "non_unit";
        case error_code::precision_exhausted:
            return "precision_exhausted";
        case error_code::invalid_branch:
            return "invalid_branch";
        case error_code::missing_root:
            return "missing_root";
        case error_code::regular_piece:
            return "regular_piece";
        case error_code::unsupported_case:
            return "unsupported_case";
        case error_code::ring_mismatch:
            return "ring_mismatch";
        case error_code::parse_error:
            return "parse_error";
        case error_code::validation_error:
            return "validation_error";
    }
    return "unknown";
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw error(error_code::parse_error, "malformed rational '" + std::string(text) + "'");
    }
    integer n(std::string(num), 10);
    integer d(std::string(den), 10);
    if (d == 0) {
        throw error(error_code::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    rational q(negative ? integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const rational &q)
{
    return q.get_str();
}

integer floor(const rational &q)
{
    integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

rational fractional_part(const rational &q)
{
    return q - rational(floor(q));
}

std::optional<rational> exact_root(const rational &q, unsigned long n)
{
    if (n == 0) {
        return std::nullopt;
    }
    if (n == 1 || q == 0) {
        return q;
    }
    const bool negative = q < 0;
    if (negative && n % 2 == 0) {
        return std::nullopt;
    }
    integer num = abs(q.get_num());
    integer den = q.get_den();
    integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0 || mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) {
        return std::nullopt;
    }
    rational r(negative ? integer(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

rational pow(const rational &q, long e)
{
    if (e < 0) {
        if (q == 0) {
            throw error(error_code::non_unit, "negative power of zero");
        }
        rational inv = 1 / q;
        return pow(inv, -e);
    }
    rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_num_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    rational r(num.get_num(), den.get_num());
    r.canonicalize();
    return r;
}

rational ratio(long num, long den)
{
    if (den == 0) {
        throw error(error_code::invalid_argument, "zero denominator");
    }
    rational out(num);
    out /= den;
    return out;
}

} // namespace lft
