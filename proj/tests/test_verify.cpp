#include "bandlab/verify.hpp"

#include <doctest.h>

using namespace bandlab;

TEST_CASE("numeric batteries pass on small runs") {
    for (const auto& kind : verify_kinds())
        for (int n = 2; n <= 4; ++n) {
            if (kind == "laurent3" && n != 3) continue;
            Report r = verify_kind(kind, {n, 6, 3, true});
            INFO(kind << " n=" << n << " " << (r.messages.empty() ? "" : r.messages[0]));
            CHECK(r.ok());
            CHECK(r.instances > 0);
        }
}

TEST_CASE("parallel and serial runs agree") {
    for (const char* kind : {"gluing", "translation"}) {
        Report a = verify_kind(kind, {3, 8, 11, true});
        Report b = verify_kind(kind, {3, 8, 11, false});
        CHECK(a.instances == b.instances);
        CHECK(a.failures == b.failures);
    }
}

TEST_CASE("unknown checks and bad parameters throw") {
    CHECK_THROWS(verify_kind("nonsense", {}));
    CHECK_THROWS(verify_laurent3({4, 1, 1, false}));
}

TEST_CASE("cubic identity symbolically") {
    CHECK(verify_cubic_symbolic(2).ok());
    CHECK(verify_cubic_symbolic(3).ok());
}

TEST_CASE("combinatorial sweeps at rank 3") {
    CHECK(verify_exchange_and_translation(3, -1, 1).ok());
    CHECK(verify_max_rank(3, 1).ok());
}
