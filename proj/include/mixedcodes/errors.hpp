#ifndef MIXEDCODES_ERRORS_HPP
#define MIXEDCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixedcodes {

// Base class for all library errors. Validation failures and resource caps
// are reported by throwing; internal-consistency violations signal bugs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- profile / table construction -------------------------------------------------
class EmptyProfile : public Error {
public:
    using Error::Error;
};
class AlphabetTooSmall : public Error {
public:
    using Error::Error;
};
class RadiusOutOfRange : public Error {
public:
    using Error::Error;
};
class RadiusOutOfApplicableRange : public Error {
public:
    using Error::Error;
};
// The sphere-size recursion divides evenly by construction; a remainder is a bug.
class InternalInexactDivision : public Error {
public:
    using Error::Error;
};

// --- parameter validation ----------------------------------------------------------
class DeltaOutOfRange : public Error {
public:
    using Error::Error;
};
class DistanceOutOfRange : public Error {
public:
    using Error::Error;
};
class PreconditionViolated : public Error {
public:
    using Error::Error;
};
class NotApplicable : public Error {
public:
    using Error::Error;
};
class ArgOutOfRange : public Error {
public:
    using Error::Error;
};
class EntropyArgOutOfRange : public Error {
public:
    using Error::Error;
};
class InvalidDistribution : public Error {
public:
    using Error::Error;
};
class InvalidGrid : public Error {
public:
    using Error::Error;
};

// --- group / function plumbing -----------------------------------------------------
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};
class ProfileMismatch : public Error {
public:
    using Error::Error;
};
class EmptyCode : public Error {
public:
    using Error::Error;
};
class EmptySubset : public Error {
public:
    using Error::Error;
};
// A dual-route identity failed inside an operation; signals an implementation bug.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

// --- iterative / exhaustive machinery ----------------------------------------------
class NoConvergence : public Error {
public:
    using Error::Error;
};
class RadiusInapplicable : public Error {
public:
    using Error::Error;
};
class SpaceTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace mixedcodes

#endif
