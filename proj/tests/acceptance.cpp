// One line per criterion of the reproduction checklist.
#include "hilbkit/verify.hpp"

#include <cstdio>
#include <iostream>
#include <map>

int main()
{
    hilbkit::VerificationReport rep = hilbkit::verify_paper();
    std::map<int, std::vector<const hilbkit::VerifyItem*>> by;
    for (const auto& it : rep.items)
        by[it.criterion].push_back(&it);
    int failed = 0;
    for (int c = 1; c <= 13; ++c) {
        auto items = by[c];
        std::string bad;
        for (const auto* it : items)
            if (!it->pass())
                bad += " " + it->id;
        bool ok = !items.empty() && bad.empty();
        failed += !ok;
        std::printf("criterion %2d: %s  (%zu items)%s\n", c, ok ? "PASS" : "FAIL", items.size(),
                    items.empty() ? " no items" : bad.empty() ? "" : (" failing:" + bad).c_str());
    }
    std::printf("%d of 13 criteria pass, %.1f s\n", 13 - failed, rep.total_seconds);
    if (failed)
        std::cout << rep.to_text();
    return failed ? 1 : 0;
}
