#ifndef RUNCOUNT_ERRORS_HPP
#define RUNCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace runcount {

/* Every failure mode of the library is a typed exception deriving from Error,
   so callers (CLI, tests, bindings) can distinguish usage errors from
   verification mismatches. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* polynomial / series arithmetic */
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error(msg) {}
};
struct BoundMismatch : Error {
    explicit BoundMismatch(const std::string& msg) : Error(msg) {}
};
struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& msg) : Error(msg) {}
};

/* matrices */
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct SingularConstantTerm : Error {
    explicit SingularConstantTerm(const std::string& msg) : Error(msg) {}
};

/* compositions */
struct InvalidDescentSet : Error {
    explicit InvalidDescentSet(const std::string& msg) : Error(msg) {}
};

/* document parsing */
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/* oracle */
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& msg) : Error(msg) {}
};

/* recipe evaluation */
struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& msg) : Error(msg) {}
};

} // namespace runcount

#endif
