#pragma once

#include <stdexcept>
#include <string>

namespace antipodal {

enum class Err {
    DivisionByZero,
    ConductorLimit,
    ShapeError,
    UnsupportedScalarKind,
    NotAnInvolution,
    SpecMismatch,
    NotInGroup,
    MissingOrigin,
    NotAntipodal,
    RankLimit,
    MissingThetaBar,
    FiberDataRequired,
    NotFixed,
    NoRecipe,
    PoolLimit,
    NotMaximal,
    ParseError,
    UnknownSpace,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ConductorLimit: return "ConductorLimit";
        case Err::ShapeError: return "ShapeError";
        case Err::UnsupportedScalarKind: return "UnsupportedScalarKind";
        case Err::NotAnInvolution: return "NotAnInvolution";
        case Err::SpecMismatch: return "SpecMismatch";
        case Err::NotInGroup: return "NotInGroup";
        case Err::MissingOrigin: return "MissingOrigin";
        case Err::NotAntipodal: return "NotAntipodal";
        case Err::RankLimit: return "RankLimit";
        case Err::MissingThetaBar: return "MissingThetaBar";
        case Err::FiberDataRequired: return "FiberDataRequired";
        case Err::NotFixed: return "NotFixed";
        case Err::NoRecipe: return "NoRecipe";
        case Err::PoolLimit: return "PoolLimit";
        case Err::NotMaximal: return "NotMaximal";
        case Err::ParseError: return "ParseError";
        case Err::UnknownSpace: return "UnknownSpace";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
    if (!ok)
        fail(code, what);
}

}  // namespace antipodal
