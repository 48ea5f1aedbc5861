#include <hamcensus/certificate.hpp>

namespace hamcensus
{
    auto to_string(Verdict v) -> std::string
    {
        switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::vacuous: return "vacuous";
        }
        return "?";
    }

    void Certificate::settle_from_conditions()
    {
        verdict = Verdict::pass;
        for (auto & c : conditions)
            if (c.verdict == Verdict::fail) {
                verdict = Verdict::fail;
                if (c.witness)
                    witnesses.push_back(*c.witness);
            }
    }
}
