#include "saci/errors.hpp"

namespace saci {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::non_positive_span: return "NonPositiveSpan";
        case Errc::too_short: return "TooShort";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::zero_variance: return "ZeroVariance";
        case Errc::lag_out_of_range: return "LagOutOfRange";
        case Errc::crossed_book: return "CrossedBook";
        case Errc::empty_side: return "EmptySide";
        case Errc::missing_category: return "MissingCategory";
        case Errc::no_candidates: return "NoCandidates";
        case Errc::missing_term_frame: return "MissingTermFrame";
        case Errc::zero_actual: return "ZeroActual";
        case Errc::empty_overlap: return "EmptyOverlap";
        case Errc::spec_invalid: return "SpecInvalid";
        case Errc::parse_error: return "ParseError";
        case Errc::config_error: return "ConfigError";
    }
    return "Error";
}

}  // namespace saci
