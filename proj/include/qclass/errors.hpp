#pragma once

#include <stdexcept>
#include <string>

namespace qclass {

// Base class for every error the library throws on bad input or an
// unsatisfiable request.  Callers that need to distinguish catch the
// concrete type; the CLI maps the whole family to exit code 2 and
// ValidationError / ParseError to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroElement : Error {
    explicit ZeroElement(const std::string& what) : Error(what) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& what) : Error(what) {}
};

struct SingularPairing : Error {
    explicit SingularPairing(const std::string& what) : Error(what) {}
};

struct NotInvertibleAtFloor : Error {
    explicit NotInvertibleAtFloor(const std::string& what) : Error(what) {}
};

struct InvalidAction : Error {
    explicit InvalidAction(const std::string& what) : Error(what) {}
};

struct CorrectionOrderViolation : Error {
    explicit CorrectionOrderViolation(const std::string& what) : Error(what) {}
};

struct PositiveWeightAtMax : Error {
    explicit PositiveWeightAtMax(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct UnsupportedFmax : Error {
    explicit UnsupportedFmax(const std::string& what) : Error(what) {}
};

struct NoFundamentalClass : Error {
    explicit NoFundamentalClass(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace qclass
