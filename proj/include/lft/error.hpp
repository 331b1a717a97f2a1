#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lft
{

enum class error_code {
    invalid_argument,
    denominator_mismatch,
    non_unit,
    precision_exhausted,
    invalid_branch,
    missing_root,
    regular_piece,
    unsupported_case,
    ring_mismatch,
    parse_error,
    validation_error,
};

std::string_view error_code_name(error_code code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto structured error objects and exit codes.
class error : public std::runtime_error
{
public:
    error(error_code code, const std::string &message) : std::runtime_error(message), m_code(code) {}

    error_code code() const noexcept
    {
        return m_code;
    }

private:
    error_code m_code;
};

} // namespace lft
