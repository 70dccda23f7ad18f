#pragma once

#include <stdexcept>
#include <string>

namespace bridgepass {

struct Error : std::runtime_error {
    explicit Error(std::string code, const std::string& what)
        : std::runtime_error(what), code(std::move(code)) {}
    std::string code;
};

#define BRIDGEPASS_ERROR(Name)                                       \
    struct Name : Error {                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

BRIDGEPASS_ERROR(SyntaxError);
BRIDGEPASS_ERROR(InconsistentCode);
BRIDGEPASS_ERROR(NonRealizable);
BRIDGEPASS_ERROR(NonPlanar);
BRIDGEPASS_ERROR(EmptyDiagram);
BRIDGEPASS_ERROR(TooLarge);
BRIDGEPASS_ERROR(InvalidK);
BRIDGEPASS_ERROR(CapExceeded);
BRIDGEPASS_ERROR(DegenerateSite);
BRIDGEPASS_ERROR(RoutingObstruction);
BRIDGEPASS_ERROR(IoError);

#undef BRIDGEPASS_ERROR

} // namespace bridgepass
