#pragma once

#include <stdexcept>
#include <string>

namespace hsob {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct DependentInput : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct BadGamma : Error { using Error::Error; };
struct BadRank : Error { using Error::Error; };
struct WrongForm : Error { using Error::Error; };
struct MixedGroups : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace hsob
