#pragma once

#include <stdexcept>
#include <string>

namespace ecosched {

/// Bad run configuration: unparsable file, invalid field, missing referenced path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad trace input: coverage gaps, node conflicts, malformed CSV.
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested rate is above what the resource can deliver at p_max.
class InfeasibleRateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Internal simulator state broke an invariant. Carries a state dump for diagnosis.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ecosched

#define ECOSCHED_REQUIRE(cond, msg)                                            \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::ecosched::InvariantError(std::string("invariant failed: ") \
                                             + (msg));                         \
    } while (0)
