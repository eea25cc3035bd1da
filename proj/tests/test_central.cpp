#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgl21/central.hpp"

using namespace qgl21;

namespace {

const QQ kap = kappa();

bool allPass(const std::vector<CheckResult>& rs, std::string* who = nullptr) {
    for (const auto& r : rs) {
        if (!r.pass) {
            if (who) *who = r.name + ": " + r.witness;
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("universal operator entries") {
    GOp2 m = universalM();
    CHECK(m.at(1, 1) == El::cartan({-1, 0, 0}));
    CHECK(m.at(2, 2) == El::cartan({0, -1, 0}));
    CHECK(m.at(3, 3) == El::cartan({0, 0, 1}));
    CHECK(m.at(1, 2) == El::zero());
    CHECK(m.at(1, 3) == El::zero());
    CHECK(m.at(2, 3) == El::zero());
    CHECK(m.at(2, 1) == El::gen(Gen::E12) * El::cartan({-1, 0, 0}) * (-kap));
    CHECK(m.at(3, 1) == El::gen(Gen::E13) * El::cartan({-1, 0, 0}) * kap);
    CHECK(m.at(3, 2) == El::gen(Gen::E23) * El::cartan({0, -1, 0}) * kap);

    GOp2 ms = universalMSigma();
    CHECK(ms.at(2, 1) == El::zero());
    CHECK(ms.at(1, 2) == El::gen(Gen::F12) * El::cartan({0, -1, 0}) * (-kap));
    El f13bar = El::gen(Gen::F13) - El::gen(Gen::F12) * El::gen(Gen::F23) * kap;
    CHECK(ms.at(1, 3) == f13bar * El::cartan({0, 0, 1}) * (-kap));
    CHECK(ms.at(2, 3) == El::gen(Gen::F23) * El::cartan({0, 0, 1}) * (-kap));
}

TEST_CASE("weighted supertraces are central and even") {
    auto cs = traceCs(2);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].isEvenParity());
    CHECK(cs[1].isEvenParity());
    CHECK(cs[0].isCentral());
    CHECK(cs[1].isCentral());
    CHECK_FALSE(El::gen(Gen::E12).isCentral());
}

TEST_CASE("first trace flips to the first imaginary central element") {
    EpsVectors eps(1);
    auto cs = traceCs(1);
    CHECK(cs[0].omega() == phiN(eps.e, 1));
}

TEST_CASE("trace identities up to degree four") {
    EpsVectors eps(4);
    std::string who;
    bool ok = allPass(checkCentralTraces(eps), &who);
    INFO("failed: ", who);
    CHECK(ok);
}

TEST_CASE("squared antipode is a cartan conjugation") {
    std::string who;
    bool ok = allPass(checkSquaredAntipode(), &who);
    INFO("failed: ", who);
    CHECK(ok);
    // the conjugation itself is nontrivial on the letters
    El s2 = El::gen(Gen::E12).antipode().antipode();
    CHECK_FALSE(s2 == El::gen(Gen::E12));
}
