#include "plancherel/halfint.hpp"

#include <charconv>
#include <stdexcept>

namespace plancherel {

HalfInt HalfInt::from_twice(std::int64_t twice) {
    if (twice % 2 == 0)
        throw std::invalid_argument("half-integer must have odd numerator over 2");
    return HalfInt(twice, 0);
}

std::string HalfInt::str() const {
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || text.substr(slash + 1) != "2")
        throw std::invalid_argument("half-integer must look like 'n/2'");
    std::int64_t num = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + slash;
    const auto res = std::from_chars(begin, end, num);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("cannot parse half-integer numerator");
    return from_twice(num);
}

}  // namespace plancherel
