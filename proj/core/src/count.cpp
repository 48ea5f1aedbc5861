#include <hamcensus/count.hpp>

#include <algorithm>
#include <stdexcept>

namespace hamcensus
{
    auto to_decimal(Count value) -> std::string
    {
        if (value == 0)
            return "0";
        std::string out;
        while (value != 0) {
            out.push_back(char('0' + int(value % 10)));
            value /= 10;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    auto parse_count(std::string_view text) -> Count
    {
        if (text.empty())
            throw std::invalid_argument("empty count");
        const Count max_before_mul = ~Count{0} / 10;
        Count value = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("count is not a decimal string: " + std::string(text));
            if (value > max_before_mul)
                throw std::invalid_argument("count overflows 128 bits: " + std::string(text));
            Count next = value * 10 + Count(ch - '0');
            if (next < value * 10)
                throw std::invalid_argument("count overflows 128 bits: " + std::string(text));
            value = next;
        }
        return value;
    }
}
