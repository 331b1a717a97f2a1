#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <lft/coeff.hpp>

namespace lft
{

// The coefficient domain a computation runs in: plain rationals, or an
// extension_ring with generators z (primitive N-th root of unity) and x
// (x^m = a).
class backend
{
public:
    static backend rational_field();
    static backend extension(int order, int radical_degree, const rational &radicand);
    // "rational", "cyclotomic:N" or "ext:N,m,a".
    static backend parse(std::string_view spec);

    bool is_rational() const noexcept
    {
        return !m_ring;
    }
    const ring_ptr &ring() const noexcept
    {
        return m_ring;
    }
    std::string spec() const;

    bool same_as(const backend &other) const noexcept;
    // True if the element lives in Q or in this backend's ring.
    bool contains(const coeff &c) const;

    coeff zeta() const;
    coeff radical() const;

    // Polynomial expression in z and x with rational coefficients,
    // e.g. "3/2*z^2*x - x + 1".
    coeff parse_element(std::string_view text) const;

    // A primitive root of unity of the given order, when the backend has one.
    std::optional<coeff> primitive_root_of_unity(int order) const;
    // Some zeta with zeta^r = -1.
    std::optional<coeff> root_of_minus_one(int r) const;
    // A distinguished n-th root of value, searched among unit multiples
    // (roots of unity times powers of the radical) of rationals.
    std::optional<coeff> nth_root(const coeff &value, int n) const;

private:
    ring_ptr m_ring;
};

} // namespace lft
