#pragma once

#include <stdexcept>
#include <string>

namespace eulerweft {

// Enumeration over a kernel (or spin space) would visit more elements than
// the configured cap allows.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct InvalidChoice : std::invalid_argument {
    explicit InvalidChoice(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidCircuit : std::invalid_argument {
    explicit InvalidCircuit(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidTolerance : std::invalid_argument {
    explicit InvalidTolerance(const std::string& what) : std::invalid_argument(what) {}
};

struct NonPositiveLambda : std::invalid_argument {
    explicit NonPositiveLambda(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUniformCoupling : std::invalid_argument {
    explicit NonUniformCoupling(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulerweft
