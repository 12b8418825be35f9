#include "indpoly/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace indpoly {

BigInt parse_bigint(const std::string& text) {
    size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return BigInt(text);
}

}  // namespace indpoly
