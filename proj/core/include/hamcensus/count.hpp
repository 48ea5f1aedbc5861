#pragma once

#include <string>
#include <string_view>

namespace hamcensus
{
    /// Exact cycle / path counts. Chain constructions multiply per-edge
    /// counts, so 64 bits is not always enough.
    __extension__ typedef unsigned __int128 Count;

    auto to_decimal(Count value) -> std::string;

    /// Throws std::invalid_argument on anything but a plain decimal string
    /// that fits in 128 bits.
    auto parse_count(std::string_view text) -> Count;
}
