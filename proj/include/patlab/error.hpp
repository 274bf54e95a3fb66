#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or text; line is 1-based.
struct ParseError : Error {
    ParseError(std::string origin, std::size_t line, const std::string& what)
        : Error(origin + ":" + std::to_string(line) + ": " + what),
          origin(std::move(origin)),
          line(line) {}

    std::string origin;
    std::size_t line;
};

/// Pattern or item id referring outside the dataset's universe.
struct UniverseMismatchError : Error {
    using Error::Error;
};

/// conf(X -> Y) requested with freq(X) = 0.
struct UndefinedConfidenceError : Error {
    using Error::Error;
};

/// Witness handed to a backward mapping does not have the required shape.
struct WitnessStructureError : Error {
    using Error::Error;
};

}  // namespace patlab
