#include <lft/backend.hpp>
#include <lft/error.hpp>

#include <cctype>
#include <numeric>

namespace lft
{

backend backend::rational_field()
{
    return backend{};
}

backend backend::extension(int order, int radical_degree, const rational &radicand)
{
    backend b;
    b.m_ring = std::make_shared<const extension_ring>(order, radical_degree, radicand);
    return b;
}

namespace
{

int parse_positive_int(std::string_view s, std::string_view what)
{
    if (s.empty() || s.size() > 6) {
        throw error(error_code::parse_error, "bad " + std::string(what) + " in backend spec");
    }
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw error(error_code::parse_error, "bad " + std::string(what) + " in backend spec");
        }
        v = v * 10 + (c - '0');
    }
    if (v < 1) {
        throw error(error_code::parse_error, std::string(what) + " must be positive");
    }
    return v;
}

} // namespace

backend backend::parse(std::string_view spec)
{
    if (spec == "rational") {
        return rational_field();
    }
    if (spec.starts_with("cyclotomic:")) {
        return extension(parse_positive_int(spec.substr(11), "order"), 1, 1);
    }
    if (spec.starts_with("ext:")) {
        auto body = spec.substr(4);
        const auto c1 = body.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
        if (c2 == std::string_view::npos) {
            throw error(error_code::parse_error, "expected ext:N,m,a");
        }
        return extension(parse_positive_int(body.substr(0, c1), "order"),
                         parse_positive_int(body.substr(c1 + 1, c2 - c1 - 1), "radical degree"),
                         parse_rational(body.substr(c2 + 1)));
    }
    throw error(error_code::parse_error, "unknown backend '" + std::string(spec) + "'");
}

std::string backend::spec() const
{
    if (!m_ring) {
        return "rational";
    }
    if (m_ring->radical_degree() == 1 && m_ring->radicand() == 1) {
        return "cyclotomic:" + std::to_string(m_ring->order());
    }
    return "ext:" + std::to_string(m_ring->order()) + "," + std::to_string(m_ring->radical_degree()) + ","
           + to_string(m_ring->radicand());
}

bool backend::same_as(const backend &other) const noexcept
{
    if (!m_ring || !other.m_ring) {
        return !m_ring && !other.m_ring;
    }
    return m_ring->same_as(*other.m_ring);
}

bool backend::contains(const coeff &c) const
{
    if (!c.ring()) {
        return true;
    }
    return m_ring && m_ring->same_as(*c.ring());
}

coeff backend::zeta() const
{
    if (!m_ring) {
        return coeff(1);
    }
    return coeff(m_ring, m_ring->zeta());
}

coeff backend::radical() const
{
    if (!m_ring) {
        return coeff(1);
    }
    return coeff(m_ring, m_ring->radical());
}

namespace
{

// Recursive-descent parser for polynomial expressions in z and x:
//   expr := [+|-] term {(+|-) term}
//   term := power {(*|/) power}
//   power := primary [^ digits]
//   primary := digits | z | x | ( expr )
class element_parser
{
public:
    element_parser(std::string_view text, const backend &b) : m_text(text), m_backend(b) {}

    coeff parse()
    {
        skip_ws();
        if (at_end()) {
            fail("empty expression");
        }
        coeff value = parse_expr();
        skip_ws();
        if (!at_end()) {
            fail(std::string("unexpected character '") + peek() + "'");
        }
        return value;
    }

private:
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return m_text[m_pos];
    }
    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw error(error_code::parse_error, "in coefficient '" + std::string(m_text) + "': " + what);
    }

    coeff parse_expr()
    {
        bool negative = false;
        if (!accept('+')) {
            negative = accept('-');
        }
        coeff total = parse_term();
        if (negative) {
            total = -total;
        }
        while (true) {
            if (accept('+')) {
                total += parse_term();
            } else if (accept('-')) {
                total -= parse_term();
            } else {
                return total;
            }
        }
    }

    coeff parse_term()
    {
        coeff term = parse_power();
        while (true) {
            if (accept('*')) {
                term *= parse_power();
            } else if (accept('/')) {
                const coeff d = parse_power();
                const auto inv = d.try_inverse();
                if (!inv) {
                    fail("division by " + d.to_string() + ", which is not a unit");
                }
                term *= *inv;
            } else {
                return term;
            }
        }
    }

    coeff parse_power()
    {
        coeff base = parse_primary();
        if (accept('^')) {
            skip_ws();
            const auto start = m_pos;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++m_pos;
            }
            if (start == m_pos || m_pos - start > 6) {
                fail("bad exponent");
            }
            base = base.pow(std::stol(std::string(m_text.substr(start, m_pos - start))));
        }
        return base;
    }

    coeff parse_primary()
    {
        skip_ws();
        if (at_end()) {
            fail("unexpected end");
        }
        const char c = peek();
        if (c == 'z' || c == 'x') {
            ++m_pos;
            if (m_backend.is_rational()) {
                fail("generator '" + std::string(1, c) + "' needs an extension backend");
            }
            return c == 'z' ? m_backend.zeta() : m_backend.radical();
        }
        if (c == '(') {
            ++m_pos;
            coeff inner = parse_expr();
            if (!accept(')')) {
                fail("missing ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto start = m_pos;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++m_pos;
            }
            return coeff(parse_rational(m_text.substr(start, m_pos - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view m_text;
    const backend &m_backend;
    std::size_t m_pos = 0;
};

} // namespace

coeff backend::parse_element(std::string_view text) const
{
    return element_parser(text, *this).parse();
}

std::optional<coeff> backend::primitive_root_of_unity(int order) const
{
    if (order < 1) {
        return std::nullopt;
    }
    if (order == 1) {
        return coeff(1);
    }
    if (order == 2) {
        return coeff(-1);
    }
    if (!m_ring) {
        return std::nullopt;
    }
    const int n = m_ring->order();
    if (n % order == 0) {
        return zeta().pow(n / order);
    }
    // For odd N, -zeta has order 2N.
    if (n % 2 == 1 && (2 * n) % order == 0) {
        return (-zeta()).pow(2 * n / order);
    }
    return std::nullopt;
}

std::optional<coeff> backend::root_of_minus_one(int r) const
{
    if (r < 1) {
        return std::nullopt;
    }
    if (r % 2 == 1) {
        return coeff(-1);
    }
    return primitive_root_of_unity(2 * r);
}

std::optional<coeff> backend::nth_root(const coeff &value, int n) const
{
    if (n < 1 || !contains(value)) {
        return std::nullopt;
    }
    if (n == 1) {
        return value;
    }
    if (!value.is_rational()) {
        return std::nullopt;
    }
    const rational v = value.rational_value();
    if (v == 0) {
        return coeff(0);
    }
    if (auto q = exact_root(v, static_cast<unsigned long>(n))) {
        return coeff(*q);
    }
    if (!m_ring) {
        return std::nullopt;
    }
    // Candidates omega * x^k * q with omega a root of unity in the ring and
    // x^(k n) rational.
    const int m = m_ring->radical_degree();
    const int big = 2 * m_ring->order();
    std::vector<coeff> units;
    const coeff z = zeta();
    for (int i = 0; i < big; ++i) {
        const coeff w = (i % 2 == 0 ? coeff(1) : coeff(-1)) * z.pow(i / 2);
        bool seen = false;
        for (const auto &u : units) {
            if (u == w) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            units.push_back(w);
        }
    }
    const coeff x = radical();
    for (int k = 0; k < m; ++k) {
        if ((static_cast<long>(k) * n) % m != 0) {
            continue;
        }
        const coeff xk = x.pow(k);
        const coeff xkn = xk.pow(n);
        for (const auto &omega : units) {
            const coeff base = omega.pow(n) * xkn;
            if (!base.is_rational() || base.rational_value() == 0) {
                continue;
            }
            if (auto q = exact_root(v / base.rational_value(), static_cast<unsigned long>(n))) {
                return omega * xk * coeff(*q);
            }
        }
    }
    return std::nullopt;
}

} // namespace lft
