#pragma once

#include <hamcensus/fixtures.hpp>
#include <hamcensus/report.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcensus::cli
{
    /// Bad flags or unreadable input; maps to exit code 2.
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Context
    {
        bool json = false;
        int workers = 0;
        std::filesystem::path fixtures;
        std::string command_line;
    };

    struct InputArgs
    {
        std::string file;
        std::string fixture;
        std::string graph6;
    };

    struct CountArgs
    {
        InputArgs input;
        std::vector<std::string> forced, forbidden;
        bool per_edge = false;
        bool list = false;
        std::optional<std::size_t> limit;
        bool longest = false;
        std::string route = "auto";
        std::string path;
        std::optional<int> length;
        bool two_factors = false;
    };

    struct GenerateArgs
    {
        std::string kind;
        std::vector<std::string> params;
        InputArgs input;
        std::vector<int> cycle, special;
        int expansion = 1;
        std::string out;
        bool count_only = false;
    };

    struct CertifyArgs
    {
        std::string kind;
        InputArgs input;
        std::vector<int> cycle, special;
        std::string expected = "16";
    };

    struct ProfileArgs
    {
        InputArgs input;
        std::vector<int> special;
    };

    struct VerifyArgs
    {
        std::string level = "quick";
    };

    /// Each returns the process exit code and writes text or a RunReport to out.
    auto run_count(const Context & ctx, const CountArgs & args, std::ostream & out) -> int;
    auto run_generate(const Context & ctx, const GenerateArgs & args, std::ostream & out) -> int;
    auto run_certify(const Context & ctx, const CertifyArgs & args, std::ostream & out) -> int;
    auto run_profile(const Context & ctx, const ProfileArgs & args, std::ostream & out) -> int;
    auto run_verify(const Context & ctx, const VerifyArgs & args, std::ostream & out) -> int;
}
