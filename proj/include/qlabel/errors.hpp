#pragma once

#include <stdexcept>
#include <string>

namespace qlabel {

// Base for all library errors so callers can catch qlabel issues separately
// from generic std failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonHermitian : public Error {
public:
    NonHermitian(const std::string& what, double max_asymmetry)
        : Error(what), max_asymmetry(max_asymmetry) {}
    double max_asymmetry;
};

class DegenerateSpectrum : public Error {
public:
    DegenerateSpectrum(const std::string& what, double gap)
        : Error(what), gap(gap) {}
    double gap;
};

class NotNormalized : public Error {
public:
    NotNormalized(const std::string& what, double norm)
        : Error(what), norm(norm) {}
    double norm;
};

class ZeroProbabilityOutcome : public Error {
public:
    using Error::Error;
};

class EmptyLabelSpace : public Error {
public:
    using Error::Error;
};

class GridTooSmall : public Error {
public:
    using Error::Error;
};

class ZeroReferenceAmplitude : public Error {
public:
    using Error::Error;
};

class DegenerateEigenvalues : public Error {
public:
    using Error::Error;
};

class TooManyDirections : public Error {
public:
    using Error::Error;
};

class DegenerateGeometry : public Error {
public:
    using Error::Error;
};

class AllZeroAmplitudes : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qlabel
