#pragma once

#include <stdexcept>
#include <string>

namespace verblogic {

// Base for every error raised by the library. `code()` is a stable
// machine-readable identifier (used by the HTTP API).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define VERBLOGIC_DEFINE_ERROR(Name, Code)                                  \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& message) : Error(Code, message) {} \
    };

// taxonomy
VERBLOGIC_DEFINE_ERROR(CycleError, "cycle")
VERBLOGIC_DEFINE_ERROR(SelfLoopError, "self_loop")
VERBLOGIC_DEFINE_ERROR(NoPathError, "no_path")

// statement
VERBLOGIC_DEFINE_ERROR(EmptyFrameError, "empty_frame")

// engine
VERBLOGIC_DEFINE_ERROR(NegatedFactError, "negated_fact")
VERBLOGIC_DEFINE_ERROR(PositiveFactError, "positive_fact")

// fuzzy
VERBLOGIC_DEFINE_ERROR(RangeError, "range")
VERBLOGIC_DEFINE_ERROR(NoIsomorphismError, "no_isomorphism")
VERBLOGIC_DEFINE_ERROR(FrameMismatchError, "frame_mismatch")

// dialogue
VERBLOGIC_DEFINE_ERROR(FullySpecificError, "fully_specific")
VERBLOGIC_DEFINE_ERROR(AmbiguousSlotError, "ambiguous_slot")
VERBLOGIC_DEFINE_ERROR(AxisEmptyError, "axis_empty")

#undef VERBLOGIC_DEFINE_ERROR

}  // namespace verblogic
