#pragma once

#include <stdexcept>
#include <string>

namespace georoute {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// geometry
struct CoincidentPoints : Error {
    using Error::Error;
};
struct NonPositiveStep : Error {
    using Error::Error;
};
struct InvalidStretch : Error {
    using Error::Error;
};
struct InsideAggregate : Error {
    using Error::Error;
};

// cover
struct EmptyWorld : Error {
    using Error::Error;
};
struct DegenerateScale : Error {
    using Error::Error;
};
struct OutsideWorld : Error {
    using Error::Error;
};

// routing / analysis
struct DegenerateAngle : Error {
    using Error::Error;
};
struct RoutingHole : Error {
    using Error::Error;
};
struct StepLimitExceeded : Error {
    using Error::Error;
};

}  // namespace georoute
