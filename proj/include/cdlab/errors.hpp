#pragma once

#include <stdexcept>
#include <string>

namespace cdlab {

struct singular_system : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_problem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_diffusion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct incomparable_configs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numerical_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cdlab
