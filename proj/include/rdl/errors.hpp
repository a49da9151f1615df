#pragma once

#include <stdexcept>
#include <string>

namespace rdl {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAMember : Error {
    explicit NotAMember(const std::string& what) : Error(what) {}
};

struct DegenerateSeries : Error {
    explicit DegenerateSeries(const std::string& what) : Error(what) {}
};

struct InvalidScale : Error {
    explicit InvalidScale(const std::string& what) : Error(what) {}
};

struct DegeneratePlane : Error {
    explicit DegeneratePlane(const std::string& what) : Error(what) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

struct ZeroCurvature : Error {
    explicit ZeroCurvature(const std::string& what) : Error(what) {}
};

struct InvalidInstance : Error {
    explicit InvalidInstance(const std::string& what) : Error(what) {}
};

struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& what) : Error(what) {}
};

}  // namespace rdl
