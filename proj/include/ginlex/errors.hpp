// Exception hierarchy shared by all ginlex components.
#pragma once

#include <stdexcept>
#include <string>

namespace ginlex {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different variable counts.
class dimension_error : public error {
public:
    using error::error;
};

// An argument is outside the operation's domain (bad exponent, bad k, ...).
class domain_error : public error {
public:
    using error::error;
};

// The quotient ring is infinite-dimensional as a K-vector space.
class not_artinian_error : public error {
public:
    using error::error;
};

// No monomial ideal realizes the requested Hilbert function.
class infeasible_hvector_error : public error {
public:
    using error::error;
};

// A coordinate change matrix is required to be invertible but is not.
class singular_matrix_error : public error {
public:
    using error::error;
};

// A map that must be square (for a determinant) is not.
class shape_error : public error {
public:
    using error::error;
};

} // namespace ginlex
