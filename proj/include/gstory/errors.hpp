#pragma once

#include <stdexcept>
#include <string>

namespace gstory {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidStory : Error { using Error::Error; };
struct NotAPath : Error { using Error::Error; };
struct NotATree : Error { using Error::Error; };
struct ForestTooLarge : Error { using Error::Error; };
struct EmptyForest : Error { using Error::Error; };
struct MissingPosition : Error { using Error::Error; };
struct BadSize : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace gstory
