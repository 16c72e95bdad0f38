#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simplex/json_io.hpp"
#include "simplex/verify.hpp"

#include <map>
#include <stdexcept>
#include <string>

using namespace simplex;

namespace {

int quick_samples(const std::string& id) {
    static const std::map<std::string, int> overrides = {
        {"T2.1", 10}, {"T2.3", 10}, {"T3.1", 10}, {"T3.2", 6},  {"T3.5", 10},
        {"T4.1", 8},  {"T4.4", 8},  {"L4.5", 50}, {"T5.1", 25}, {"L5.2", 10},
        {"T5.5", 300},
    };
    const auto found = overrides.find(id);
    return found == overrides.end() ? 0 : found->second;
}

} // namespace

TEST_CASE("suite registry") {
    const auto& ids = verification_ids();
    CHECK(ids.size() == 18);
    CHECK(std::find(ids.begin(), ids.end(), "T2.2") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "T5.5") != ids.end());
    CHECK_THROWS_AS(run_verification("bogus", 0, 1), std::invalid_argument);
}

TEST_CASE("every suite passes") {
    for (const std::string& id : verification_ids()) {
        CAPTURE(id);
        const VerificationRun run = run_verification(id, 0, quick_samples(id));
        CHECK(run.suite == id);
        CHECK(run.samples > 0);
        CHECK_FALSE(run.checks.empty());
        CHECK(run.pass);
        for (const Check& check : run.checks) {
            CAPTURE(check.name);
            CHECK(check.passed);
        }
    }
}

TEST_CASE("suites are deterministic under a fixed seed") {
    for (const std::string& id : {"T2.1", "T3.2", "T5.1", "T5.5"}) {
        const VerificationRun a = run_verification(id, 42, quick_samples(id));
        const VerificationRun b = run_verification(id, 42, quick_samples(id));
        CHECK(serialize(verification_document(a)) == serialize(verification_document(b)));
    }
    const VerificationRun a = run_verification("T2.1", 1, 5);
    const VerificationRun b = run_verification("T2.1", 2, 5);
    CHECK(serialize(verification_document(a)) != serialize(verification_document(b)));
}

TEST_CASE("pass reflects the individual checks") {
    const VerificationRun run = run_verification("T4.6", 0, 0);
    bool all = true;
    for (const Check& check : run.checks) all = all && check.passed;
    CHECK(run.pass == all);
}

TEST_CASE("numerical backbone") {
    const VerificationRun run = run_infrastructure_checks(0, 50);
    CHECK(run.pass);
    CHECK_FALSE(run.checks.empty());
    const VerificationRun again = run_infrastructure_checks(0, 50);
    CHECK(serialize(verification_document(run)) == serialize(verification_document(again)));
}
