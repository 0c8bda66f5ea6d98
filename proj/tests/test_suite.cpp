#include <gtest/gtest.h>

#include "hgs/suite.hpp"

using namespace hgs;

namespace {

Suite suite_for(const std::string& name, std::uint64_t seed = 0) {
    return Suite(load_fixture(std::string(FIXTURE_DIR) + "/" + name + ".hgx"), seed);
}

}  // namespace

TEST(Report, ExitCodes) {
    Report r;
    EXPECT_EQ(r.exit_code(), 0);
    r.add("a", Verdict::Pass, CheckKind::Oracle);
    EXPECT_EQ(r.exit_code(), 0);
    r.add("b", Verdict::Unknown, CheckKind::Search);
    EXPECT_EQ(r.exit_code(), 3);
    r.add("c", Verdict::Fail, CheckKind::Invariant);
    EXPECT_EQ(r.exit_code(), 1);
    EXPECT_EQ(r.count(Verdict::Pass), 1u);
}

TEST(Report, JsonShape) {
    Report r;
    r.command = "suite x";
    r.fixture = "x";
    r.seed = 3;
    r.add("a", Verdict::Pass, CheckKind::Theory, {{"k", 1}});
    auto j = r.to_json();
    EXPECT_EQ(j["seed"], 3);
    EXPECT_EQ(j["checks"][0]["verdict"], "PASS");
    EXPECT_EQ(j["checks"][0]["kind"], "theory");
    EXPECT_EQ(j.dump().find("time"), std::string::npos);
}

TEST(Suite, QuadraticFixturePassesEverything) {
    auto S = suite_for("qi");
    Report r;
    S.run_all(r);
    EXPECT_EQ(r.count(Verdict::Fail), 0u) << r.to_text();
    EXPECT_EQ(r.count(Verdict::Unknown), 0u) << r.to_text();
    EXPECT_GT(r.count(Verdict::Pass), 10u);
}

TEST(Suite, GroupOnlyFixture) {
    auto S = suite_for("metacyclic21");
    Report r;
    S.run_all(r);
    EXPECT_EQ(r.exit_code(), 0) << r.to_text();
    Report d;
    EXPECT_THROW(S.run_descend(d, 0), DomainError);
}

TEST(Suite, Deterministic) {
    Report a, b;
    suite_for("c4", 7).run_all(a);
    suite_for("c4", 7).run_all(b);
    EXPECT_EQ(a.to_json().dump(2), b.to_json().dump(2));
}

TEST(Suite, BadIndexIsDomainError) {
    auto S = suite_for("qi");
    Report r;
    EXPECT_THROW(S.run_descend(r, 9), DomainError);
}
