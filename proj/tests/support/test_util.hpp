#pragma once

#include <hamcensus/count.hpp>

#include <doctest.h>

#include <cstdint>
#include <filesystem>

namespace doctest
{
    template <>
    struct StringMaker<hamcensus::Count>
    {
        static auto convert(const hamcensus::Count & c) -> String { return hamcensus::to_decimal(c).c_str(); }
    };
}

inline auto as_count(std::uint64_t v) -> hamcensus::Count
{
    return v;
}

/// Fixture directory of the source tree, set by the build.
inline auto repo_fixtures() -> std::filesystem::path
{
    return HAMCENSUS_TEST_FIXTURE_DIR;
}
