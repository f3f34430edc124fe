#include "doctest.h"

#include <stdexcept>

#include "picod/model.hpp"

using namespace picod;

TEST_CASE("consecutive factory classifies and counts") {
    ProblemInstance inst = ProblemInstance::consecutive(5, 1, 1, 3);
    CHECK(inst.kind == SKind::consecutive);
    CHECK(inst.sizes == std::vector<int>{1, 2, 3});
    CHECK(inst.smin == 1);
    CHECK(inst.smax == 3);
    CHECK(inst.user_count() == 5 + 10 + 10);

    ProblemInstance frac = ProblemInstance::consecutive(4, 1, 3, 3);
    CHECK(frac.kind == SKind::consecutive);
    CHECK(frac.sizes == std::vector<int>{3});
}

TEST_CASE("complement factory excises an interior interval") {
    ProblemInstance inst = ProblemInstance::complement(6, 2, 1, 3);
    CHECK(inst.kind == SKind::complement_consecutive);
    CHECK(inst.sizes == std::vector<int>{0, 4});
    // smin/smax record the excised interval, not the span of S
    CHECK(inst.smin == 1);
    CHECK(inst.smax == 3);
    CHECK(inst.user_count() == 1 + 15);

    CHECK_THROWS_AS(ProblemInstance::complement(6, 2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complement(6, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("complete() classification matches the size-set shape") {
    CHECK(ProblemInstance::complete(6, 2, {0, 1, 2, 3, 4}).kind == SKind::consecutive);
    CHECK(ProblemInstance::complete(6, 2, {4}).kind == SKind::consecutive);

    ProblemInstance comp = ProblemInstance::complete(7, 2, {0, 1, 4, 5});
    CHECK(comp.kind == SKind::complement_consecutive);
    CHECK(comp.smin == 2);
    CHECK(comp.smax == 3);

    CHECK(ProblemInstance::complete(6, 2, {0, 2, 4}).kind == SKind::other);
    // two gaps is not a single excision even with both endpoints present
    CHECK(ProblemInstance::complete(8, 2, {0, 2, 4, 6}).kind == SKind::other);
    // missing an endpoint disqualifies the complement shape
    CHECK(ProblemInstance::complete(6, 2, {1, 2, 4}).kind == SKind::other);

    // input is sorted and deduplicated
    ProblemInstance dup = ProblemInstance::complete(4, 1, {2, 1, 1, 2});
    CHECK(dup.sizes == std::vector<int>{1, 2});
    CHECK(dup.kind == SKind::consecutive);
}

TEST_CASE("invalid instances are rejected") {
    CHECK_THROWS_AS(ProblemInstance::complete(3, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::consecutive(3, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complete(3, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complete(4, 2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complete(4, 2, {-1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complete(4, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::complete(0, 1, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::consecutive(4, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("user enumeration is ordered by size then subset-lex") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 1, 2);
    std::vector<User> users = enumerate_users(inst);
    REQUIRE(users.size() == 6);
    CHECK(users[0].side_info == std::vector<int>{0});
    CHECK(users[1].side_info == std::vector<int>{1});
    CHECK(users[2].side_info == std::vector<int>{2});
    CHECK(users[3].side_info == std::vector<int>{0, 1});
    CHECK(users[4].side_info == std::vector<int>{0, 2});
    CHECK(users[5].side_info == std::vector<int>{1, 2});
    for (std::size_t i = 0; i < users.size(); ++i)
        CHECK(users[i].id == static_cast<int>(i));
}

TEST_CASE("enumeration size always matches user_count") {
    for (const ProblemInstance& inst :
         {ProblemInstance::complete(5, 2, {0, 1, 2, 3}),
          ProblemInstance::complement(7, 2, 2, 3),
          ProblemInstance::consecutive(6, 3, 2, 3)}) {
        CHECK(enumerate_users(inst).size() ==
              static_cast<std::size_t>(inst.user_count()));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("name round trips") {
    CHECK(to_string(SKind::consecutive) == "consecutive");
    CHECK(to_string(SKind::complement_consecutive) == "complement_consecutive");
    CHECK(to_string(SKind::other) == "other");
    CHECK(to_string(KnowledgeMode::static_side_info) == "static");
    CHECK(to_string(KnowledgeMode::sequential) == "sequential");
}

TEST_CASE("normalized length is exact") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    DecentralizedCode code{inst, 2, Matrix(3, 6, Field::gf2()), Schedule{{0, 0, 0}, {}}};
    CHECK(code.length() == Rational(3, 2));
    CHECK(code.length().num() == 3);
    CHECK(code.length().den() == 2);
}
