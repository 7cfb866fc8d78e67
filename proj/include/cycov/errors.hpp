#pragma once

#include <stdexcept>
#include <string>

namespace cycov {

// Every rejection the library can produce. The CLI prints the enumerator
// name, so the names are part of the output contract.
enum class errc {
    non_prime_degree,
    duplicate_branch_points,
    zero_exponent,
    ramified_at_infinity,
    too_few_branch_points,

    length_mismatch,
    modulus_mismatch,
    zero_vector,
    entry_out_of_range,
    empty_vector,
    not_degree_zero,

    trivial_cover,

    invalid_profile,
    divisibility_failure,
    internal_inconsistency,

    not_isomorphic,
    orientation_mismatch,
    equal_positions,
    index_out_of_range,
    degree_not_divisible,
    not_squarefree,
    constant_factor,

    division_by_zero,
    inexact_division,
    invalid_rational,

    invalid_curve_file,
    invalid_equation_text,
    invalid_equation_json,
    io_error,

    invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cycov
