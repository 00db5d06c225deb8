#pragma once

#include <stdexcept>
#include <string>

namespace cdim {

enum class errc {
    indeterminate_valuation,
    negative_valuation,
    insufficient_precision,
    zero_scale,
    domain_error,
    arity_mismatch,
    invalid_arity,
    zero_polynomial,
    not_groebner,
    not_homogeneous,
    non_polynomial_range,
    zero_hilbert,
    budget_exceeded,
    not_square,
    full_rank,
    empty_input,
    unsupported_map,
    precision_gap,
    inconclusive,
    parse_error,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace cdim
