#ifndef HYPERLIN_ERRORS_HPP
#define HYPERLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperlin {

struct light_cone_error : std::domain_error {
    explicit light_cone_error(const std::string& what) : std::domain_error(what) {}
};

struct spec_mismatch_error : std::invalid_argument {
    explicit spec_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

struct dimension_mismatch_error : std::invalid_argument {
    explicit dimension_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

struct not_self_adjoint_error : std::invalid_argument {
    explicit not_self_adjoint_error(const std::string& what) : std::invalid_argument(what) {}
};

struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

struct grid_mismatch_error : std::invalid_argument {
    explicit grid_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

struct unsupported_order_error : std::invalid_argument {
    explicit unsupported_order_error(const std::string& what) : std::invalid_argument(what) {}
};

struct grid_alignment_error : std::invalid_argument {
    explicit grid_alignment_error(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_suite_error : std::invalid_argument {
    explicit unknown_suite_error(const std::string& what) : std::invalid_argument(what) {}
};

struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hyperlin

#endif
