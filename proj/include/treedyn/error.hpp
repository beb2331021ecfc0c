#pragma once

#include <stdexcept>
#include <string>

namespace treedyn {

enum class errc {
    parse,
    bad_parameter,
    bad_index,
    duplicate_edge,
    cyclic,
    disconnected,
    too_large,
    size_mismatch,
    guard_exceeded,
    not_periodic,
    illegal_set,
    not_a_fixed_point,
    not_pure,
    not_in_e25,
    bound_violated,
    construction_failed,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse: return "Parse";
        case errc::bad_parameter: return "BadParameter";
        case errc::bad_index: return "BadIndex";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::cyclic: return "Cyclic";
        case errc::disconnected: return "Disconnected";
        case errc::too_large: return "TooLarge";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::guard_exceeded: return "GuardExceeded";
        case errc::not_periodic: return "NotPeriodic";
        case errc::illegal_set: return "IllegalSet";
        case errc::not_a_fixed_point: return "NotAFixedPoint";
        case errc::not_pure: return "NotPure";
        case errc::not_in_e25: return "NotInE25";
        case errc::bound_violated: return "BoundViolated";
        case errc::construction_failed: return "ConstructionFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace treedyn
