#ifndef FEWSPHERE_ERROR_HPP
#define FEWSPHERE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fewsphere {

enum class ErrorCode {
    InvalidInput,          // a value type invariant was violated
    EvenLength,
    TooShort,
    NotAffinelySpanning,
    InvalidConfiguration,
    ZeroInput,
    InconsistentSystem,
    ToleranceExhausted,
    NotFullDimensional,
    NonSimplicial,
    InteriorPoint,
    NotMaxOddCycle,
    InternalInconsistency,
    CrossCheckFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fewsphere

#endif
