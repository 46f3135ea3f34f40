#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// (u0, u1) = (0, 0) has no projective image.
class ZeroVector : public Error {
public:
    ZeroVector() : Error("parameter vector (u0, u1) must be nonzero") {}
};

// beta outside the admissible range of the requested operation (0, 3, or
// a beta = 3 parabola evaluated at infinity).
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotLowerTriangular : public Error {
public:
    NotLowerTriangular() : Error("matrix is not lower triangular") {}
};

class NotOnSurface : public Error {
public:
    NotOnSurface() : Error("point is not on the Cayley surface") {}
};

class SingularPoint : public Error {
public:
    SingularPoint() : Error("point is a singular point of the Cayley surface") {}
};

class ChartFailure : public Error {
public:
    using Error::Error;
};

}  // namespace cayley
