#include <gtest/gtest.h>

#include "hgs/fixtures.hpp"

using namespace hgs;

namespace {

std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".hgx"; }

std::string replace(std::string s, const std::string& from, const std::string& to) {
    auto at = s.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    if (at != std::string::npos) s.replace(at, from.size(), to);
    return s;
}

std::string problems_of(const std::string& text) {
    try {
        load_fixture_text(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

const char* kAll[] = {"qi", "qzeta3", "qcbrt2", "c4", "v4", "metacyclic21", "s3sextic"};

}  // namespace

TEST(Fixtures, AllLoadWithAssertedCounts) {
    for (const char* name : kAll) {
        auto F = load_fixture(path(name));
        EXPECT_EQ(F.descriptor.name, name);
        EXPECT_EQ(F.G().order(), F.descriptor.order);
    }
}

TEST(Fixtures, PrintParseRoundTrip) {
    for (const char* name : kAll) {
        auto d = parse(path(name));
        auto again = read_descriptor(print(d));
        EXPECT_EQ(again, d) << name;
        EXPECT_EQ(print(again), print(d));
    }
}

TEST(Fixtures, SyntaxErrorsCarryPosition) {
    auto msg = problems_of("{\n  \"name\": \"x\",\n  \"group\": [1,,]\n}");
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Fixtures, ShapeProblemsAreCollected) {
    auto text = read_file(path("qi"));
    text = replace(text, "\"name\": \"qi\"", "\"name\": 4, \"colour\": 1");
    text = replace(text, "\"order\": 2", "\"order\": \"two\"");
    auto msg = problems_of(text);
    EXPECT_NE(msg.find("unknown top-level key 'colour'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("name must be a string"), std::string::npos) << msg;
    EXPECT_NE(msg.find("group.order must be an integer"), std::string::npos) << msg;
}

TEST(Fixtures, SemanticProblems) {
    auto text = read_file(path("qi"));
    EXPECT_NE(problems_of(replace(text, "\"order\": 2", "\"order\": 3")).find("order 2"), std::string::npos);
    auto not_closed = replace(text, "[\"0\", \"1\"]\n  ]", "[\"0\", \"1/2\"]\n  ]");
    auto msg = problems_of(not_closed);
    EXPECT_NE(msg.find("integral_basis is not closed: integral_basis[1]"), std::string::npos) << msg;
    EXPECT_THROW(load_fixture_text(replace(text, "[1, 0, 1]", "[-1, 0, 1]")), ReducibleModulusError);
    EXPECT_THROW(load_fixture(path("does-not-exist")), ValidationError);
}

TEST(Fixtures, WordsAndIdeals) {
    auto F = load_fixture(path("metacyclic21"));
    const auto& gens = F.descriptor.generators;
    auto s = evaluate_word("s", gens, 7);
    auto t = evaluate_word("t", gens, 7);
    EXPECT_EQ(evaluate_word("s*t", gens, 7), s * t);
    EXPECT_EQ(evaluate_word("s^7", gens, 7), Permutation::identity(7));
    EXPECT_EQ(evaluate_word("t s^-1", gens, 7), t * s.inverse());
    EXPECT_THROW(evaluate_word("u", gens, 7), StructuralError);
    EXPECT_THROW(evaluate_word("s^x", gens, 7), StructuralError);
    auto Q = load_fixture(path("qi"));
    EXPECT_NO_THROW(Q.ideal("OL"));
    EXPECT_THROW(Q.ideal("P"), DomainError);
}

TEST(Fixtures, LargeCoefficientsRoundTrip) {
    auto text = replace(read_file(path("qi")), "[1, 0, 1]", "[\"100000000000000000000001\", 0, 1]");
    auto d = read_descriptor(text);
    EXPECT_EQ(d.field->minimal_polynomial.front(), Z("100000000000000000000001"));
    EXPECT_EQ(read_descriptor(print(d)), d);
    EXPECT_NE(print(d).find("\"100000000000000000000001\""), std::string::npos);
}
