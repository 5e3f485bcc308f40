#ifndef SFS_ERRORS_HPP
#define SFS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfs {

// Invalid user-supplied data (bad fractions, non-coprime coefficients, ...).
// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that the library does not model (non-unimodular
// forms where a single spin-c structure is assumed, cabled components, ...).
// The CLI maps this to exit code 3.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two candidate blow-down subgraphs match; impossible on homology spheres
// with central framing -1, so hitting this means the input was not one.
struct AmbiguousGammaPrime final : UnsupportedError {
    explicit AmbiguousGammaPrime(const std::string& msg) : UnsupportedError(msg) {}
};

// A vertex scheduled for blow-down never reached framing -1.
struct InternalTypingError final : UnsupportedError {
    explicit InternalTypingError(const std::string& msg) : UnsupportedError(msg) {}
};

// A component came out with a negative stabilization budget; the surgery
// presentation is not one the rotation-number model covers.
struct UnsupportedPresentation final : UnsupportedError {
    explicit UnsupportedPresentation(const std::string& msg) : UnsupportedError(msg) {}
};

} // namespace sfs

#endif
