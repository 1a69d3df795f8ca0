#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace minneg {

namespace detail {
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace detail

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix entry is NaN or infinite.
class NotFiniteError : public Error {
public:
    explicit NotFiniteError(const std::string& where)
        : Error(where + ": matrix contains a non-finite entry") {}
};

class NotHermitianError : public Error {
public:
    explicit NotHermitianError(double max_asymmetry, double tol = 1e-10)
        : Error("matrix is not Hermitian: max |a(i,j) - conj(a(j,i))| = " +
                detail::num(max_asymmetry) + " exceeds " + detail::num(tol)),
          max_asymmetry(max_asymmetry) {}
    double max_asymmetry;
};

class TraceNotOneError : public Error {
public:
    explicit TraceNotOneError(double trace_value, double tol = 1e-10)
        : Error("matrix trace is " + detail::num(trace_value) + ": |trace - 1| exceeds " +
                detail::num(tol)),
          trace_value(trace_value) {}
    double trace_value;
};

/// A principal minor is below the PSD tolerance; names the offending minor.
class NotPsdError : public Error {
public:
    NotPsdError(int order, int index, double value, double tol = 1e-10)
        : Error("matrix is not positive semi-definite: principal minor m" +
                std::to_string(order) + "_" + std::to_string(index) + " = " +
                detail::num(value) + " is below -" + detail::num(tol)),
          order(order),
          index(index),
          value(value) {}
    int order;    // 1..4
    int index;    // 1-based position within the order
    double value;
};

/// A polished quartic root left a residual above tolerance; the coefficients
/// did not come from a Hermitian matrix, or the arithmetic broke down.
class ResidualTooLargeError : public Error {
public:
    explicit ResidualTooLargeError(double residual)
        : Error("quartic root residual " + detail::num(residual) + " exceeds 1e-10"),
          residual(residual) {}
    double residual;
};

class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(double residual)
        : Error("Jacobi sweep limit reached with off-diagonal residual " +
                detail::num(residual)),
          residual(residual) {}
    double residual;
};

/// An argument is outside its documented domain.
class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

/// An internal cross-check failed; indicates a bug or pathological input.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// A matrix file could not be read or did not match the expected schema.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace minneg
