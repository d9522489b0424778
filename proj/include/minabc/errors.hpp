#pragma once

#include <stdexcept>
#include <string>

namespace minabc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MINABC_ERROR(Name)                                              \
    struct Name : Error {                                               \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

MINABC_ERROR(Disconnected);
MINABC_ERROR(CycleDetected);
MINABC_ERROR(SelfLoop);
MINABC_ERROR(DuplicateEdge);
MINABC_ERROR(MalformedGraph6);
MINABC_ERROR(NotATree);
MINABC_ERROR(DomainError);
MINABC_ERROR(InfeasibleSequence);
MINABC_ERROR(OrderTooLarge);
MINABC_ERROR(StoreCorrupt);
MINABC_ERROR(UnknownExpression);
MINABC_ERROR(NotMonotone);
MINABC_ERROR(NeverNegative);
MINABC_ERROR(PreconditionViolated);

#undef MINABC_ERROR

}  // namespace minabc
