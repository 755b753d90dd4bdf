#include "w3/acceptance.hpp"

#include <cstdio>

int main() {
    int failures = 0;
    for (const auto& r : w3::acceptance::run_all()) {
        if (!r.pass) ++failures;
        std::printf("%s  %2d  %-38s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
    }
    if (failures) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
