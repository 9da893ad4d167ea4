#pragma once

#include "deltaw/weights.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaw {

/// Parse failure with the 0-based offset into the source text.
class WeightParseError : public std::runtime_error {
public:
    WeightParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar:  expr := term ("," term)*;  term := frac ("^" count)?;
/// frac := int | int "/" int.  Entries expand left to right and must lie in
/// (0,1]; counts must be positive.  Spaces around tokens are ignored.
WeightVector parse_weight_expr(const std::string& text);

/// Canonical run-length form, e.g. (1,1,1/2,1/2,1/2,1/2) -> "1^2,1/2^4".
/// parse_weight_expr(format_weight_expr(w)) == w.
std::string format_weight_expr(const WeightVector& w);

}  // namespace deltaw
