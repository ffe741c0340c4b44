#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saci {

/// Failure conditions surfaced by the toolkit. Each maps to one contract
/// violation; callers can branch on the code instead of parsing messages.
enum class Errc {
    non_positive_span,
    too_short,
    size_mismatch,
    zero_variance,
    lag_out_of_range,
    crossed_book,
    empty_side,
    missing_category,
    no_candidates,
    missing_term_frame,
    zero_actual,
    empty_overlap,
    spec_invalid,
    parse_error,
    config_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace saci
