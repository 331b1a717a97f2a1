#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <lft/transform.hpp>

namespace lft
{

struct job_spec
{
    // transform, verify, info or canon.
    std::string command;
    std::optional<transform_kind> kind;
    std::string input_path;
    // Inline document used instead of reading input_path.
    std::optional<std::string> input_text;
    // verify only: a previously computed transform to check.
    std::optional<std::string> against_path;
    long precision = 0;
    std::optional<std::string> backend_spec;
    std::optional<std::string> branch;
    std::optional<std::string> output_path;
};

enum exit_status : int { exit_ok = 0, exit_invalid = 1, exit_verification_failed = 2 };

// Runs the job, writing the result document to the output path (or `out`)
// and structured error objects to `err`. Returns the process exit code.
int run(const job_spec &job, std::ostream &out, std::ostream &err);

} // namespace lft
