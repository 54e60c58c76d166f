#include "qseries/errors.hpp"

#include <utility>

namespace qseries {

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& message)
    : Error(message), position_(position), expected_(std::move(expected)) {}

}  // namespace qseries
