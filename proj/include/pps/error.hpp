#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pps {

enum class ErrorCode {
    EmptyInput,
    EmptyRecord,
    InvalidResidue,
    InvalidSignal,
    PeriodOutOfRange,
    UnsupportedClosedForm,
    WindowTooLarge,
    InvalidEdit,
    InvalidConfig,
    Io,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised for a residue outside {A,C,G,T} under the strict policy.
class InvalidResidueError : public Error {
public:
    InvalidResidueError(std::size_t position, char residue);

    std::size_t position() const noexcept { return position_; }
    char residue() const noexcept { return residue_; }

private:
    std::size_t position_;
    char residue_;
};

}  // namespace pps
