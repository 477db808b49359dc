#ifndef TRICOVER_ERRORS_HPP
#define TRICOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tricover {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed or out-of-contract input (shape, range, parse)
struct input_error : error { using error::error; };
// input violates a mathematical precondition (outside ball, isotropic root, ...)
struct domain_error : error { using error::error; };
// numerically degenerate configuration (singular C*tau+D, vanishing minor)
struct degeneracy_error : error { using error::error; };
// an internal cross-check that should always hold failed
struct consistency_error : error { using error::error; };
// quadrature did not converge within the level budget
struct quadrature_error : error { using error::error; };
// point too close to the ball boundary for the theta engine
struct boundary_error : error { using error::error; };
// theta denominator too close to a mirror zero
struct mirror_error : error { using error::error; };
// cycle table failed its certification invariants
struct cycle_table_error : error { using error::error; };

} // namespace tricover

#endif
