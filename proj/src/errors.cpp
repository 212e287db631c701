#include "coinparadox/errors.hpp"

namespace coinparadox {

namespace {

std::string join_offenses(const std::vector<std::string>& offenses)
{
    std::string out = "invalid game inputs";
    for (const auto& o : offenses) {
        out += "; ";
        out += o;
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> offenses)
    : std::invalid_argument(join_offenses(offenses)), offenses_(std::move(offenses))
{
}

} // namespace coinparadox
