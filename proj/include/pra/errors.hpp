#pragma once

#include <stdexcept>
#include <string>

namespace pra {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DegenerateStockError : Error {
    using Error::Error;
};
struct AlignmentError : Error {
    using Error::Error;
};
struct LagRangeError : Error {
    using Error::Error;
};
struct MissingSignError : Error {
    using Error::Error;
};
struct CollinearityError : Error {
    using Error::Error;
};
struct SymmetryError : Error {
    using Error::Error;
};
struct DegenerateSpectrumError : Error {
    using Error::Error;
};
struct NormalizationError : Error {
    using Error::Error;
};
struct QuantileError : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    using Error::Error;
};
struct FormulaDomainError : Error {
    using Error::Error;
};
struct MatrixDomainError : Error {
    using Error::Error;
};
struct BinningError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace pra
