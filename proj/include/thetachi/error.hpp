#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetachi {

enum class ErrorKind {
    invalid_argument,   // violated precondition on inputs
    limit_undefined,    // q -> 1 limit has a pole or a zero
    irrational_residue, // Gamma product does not reduce to a rational
    invalid_genus,      // spectral parameters give genus <= 0
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::limit_undefined: return "limit undefined";
    case ErrorKind::irrational_residue: return "irrational residue";
    case ErrorKind::invalid_genus: return "invalid genus";
    }
    return "unknown";
}

/// Library-wide exception. what() is "<kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace thetachi
