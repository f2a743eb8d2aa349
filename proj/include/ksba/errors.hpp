#pragma once

#include <stdexcept>
#include <string>

namespace ksba {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define KSBA_ERROR(Name)                           \
    class Name : public Error {                    \
    public:                                        \
        explicit Name(const std::string& what)     \
            : Error(std::string(#Name ": ") + what) {} \
    }

KSBA_ERROR(DivisionByZero);
KSBA_ERROR(ParseError);
KSBA_ERROR(SingularMatrix);
KSBA_ERROR(DimensionMismatch);
KSBA_ERROR(NotSymmetric);
KSBA_ERROR(EmptyBranch);
KSBA_ERROR(Overflow);
KSBA_ERROR(SchemaError);
KSBA_ERROR(DuplicateId);
KSBA_ERROR(UnknownId);
KSBA_ERROR(InvalidGraph);
KSBA_ERROR(Disconnected);
KSBA_ERROR(NonRationalVertexOutsideEllipticCase);
KSBA_ERROR(NotContractible);
KSBA_ERROR(NotEllipticGorenstein);
KSBA_ERROR(NotAChain);
KSBA_ERROR(DuplicateLabel);
KSBA_ERROR(UnknownLabel);
KSBA_ERROR(AdjunctionMismatch);
KSBA_ERROR(NotACurve);
KSBA_ERROR(UnknownScenario);
KSBA_ERROR(ParamOutOfRange);
KSBA_ERROR(FormulaMismatch);
KSBA_ERROR(ClaimFailed);
KSBA_ERROR(InternalError);

#undef KSBA_ERROR

}  // namespace ksba
