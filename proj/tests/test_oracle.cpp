#include "doctest.h"

#include <stdexcept>

#include "picod/errors.hpp"
#include "picod/oracle.hpp"
#include "picod/theorems.hpp"
#include "picod/verify.hpp"

using namespace picod;

namespace {

const FieldSpec kGf2{1, 0b11};

SearchSpace space_of(const ProblemInstance& inst, int beta, int subslots,
                     KnowledgeMode mode = KnowledgeMode::static_side_info) {
    return SearchSpace{inst, kGf2, beta, subslots, mode};
}

} // namespace

TEST_CASE("counting floor in sub-slots") {
    ProblemInstance top = ProblemInstance::consecutive(3, 1, 2, 2); // n = 3
    CHECK(counting_floor_subslots(top, 1) == 2);
    CHECK(counting_floor_subslots(top, 2) == 3);
    CHECK(counting_floor_subslots(top, 4) == 6);

    ProblemInstance pair = ProblemInstance::consecutive(4, 2, 2, 2); // n = 6
    CHECK(counting_floor_subslots(pair, 1) == 3);
    CHECK(counting_floor_subslots(pair, 5) == 12);

    ProblemInstance two = ProblemInstance::consecutive(2, 1, 1, 1); // n = 2
    CHECK(counting_floor_subslots(two, 1) == 2);
    CHECK_THROWS_AS(counting_floor_subslots(two, 0), std::invalid_argument);
}

TEST_CASE("existence frontier for the three-message fractional instance") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);

    CHECK_FALSE(exists_valid_code(space_of(inst, 1, 1)).found);
    CHECK_FALSE(exists_valid_code(space_of(inst, 2, 1)).found);
    CHECK_FALSE(exists_valid_code(space_of(inst, 2, 2)).found);

    SearchOutcome two = exists_valid_code(space_of(inst, 1, 2));
    CHECK(two.found);
    REQUIRE(two.witness.has_value());
    CHECK(two.witness->length() == Rational(2));
    CHECK(validate(*two.witness).valid);

    SearchOutcome three = exists_valid_code(space_of(inst, 2, 3));
    CHECK(three.found);
    REQUIRE(three.witness.has_value());
    CHECK(three.witness->length() == Rational(3, 2));
    CHECK(three.witness->beta == 2);
    CHECK(validate(*three.witness).valid);
}

TEST_CASE("certified minimum matches the fractional closed form") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    CertifiedMinimum cm = certified_minimum(inst, kGf2, 2);
    CHECK(cm.value == Rational(3, 2));
    CHECK(cm.exact);
    CHECK(cm.fully_certified);
    REQUIRE(cm.legs.size() == 2);
    CHECK(cm.legs[0].counting_floor == 2);
    CHECK(cm.legs[0].least == 2);
    CHECK(cm.legs[1].counting_floor == 3);
    CHECK(cm.legs[1].least == 3);
    for (const BetaLeg& leg : cm.legs) {
        REQUIRE(leg.witness.has_value());
        CHECK(validate(*leg.witness).valid);
    }
}

TEST_CASE("certified minimum on integer-valued instances") {
    // n = 2 makes the fractional bound an integer
    ProblemInstance two = ProblemInstance::consecutive(2, 1, 1, 1);
    CertifiedMinimum cm2 = certified_minimum(two, kGf2, 1);
    CHECK(cm2.value == Rational(2));
    CHECK(cm2.exact);
    CHECK(cm2.fully_certified);

    // windowed instance: search minimum equals the closed form, but the
    // counting infimum sits lower, so certification stays per-beta
    ProblemInstance window = ProblemInstance::consecutive(3, 1, 1, 2);
    CertifiedMinimum cmw = certified_minimum(window, kGf2, 1);
    CHECK(cmw.value == Rational(2));
    CHECK(cmw.value == optimal_length(window).value);
    CHECK(cmw.exact);
    CHECK_FALSE(cmw.fully_certified);
}

TEST_CASE("relabeling prune does not change verdicts") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    for (int subslots = 2; subslots <= 3; ++subslots) {
        SearchConfig with;
        SearchConfig without;
        without.prune_symmetry = false;
        SearchOutcome a = exists_valid_code(space_of(inst, 2, subslots), with);
        SearchOutcome b = exists_valid_code(space_of(inst, 2, subslots), without);
        CHECK(a.found == b.found);
        CHECK(a.nodes_visited <= b.nodes_visited);
        CHECK(estimate_search_size(space_of(inst, 2, subslots), with) <=
              estimate_search_size(space_of(inst, 2, subslots), without));
    }
}

TEST_CASE("ceiling refusal happens before any search work") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    SearchConfig tiny;
    tiny.ceiling = 1;
    try {
        exists_valid_code(space_of(inst, 2, 3), tiny);
        FAIL("expected a refusal");
    } catch (const SearchCeilingError& e) {
        CHECK(e.estimated_size() > 1);
        CHECK(e.nodes_visited() == 0);
    }
}

TEST_CASE("refused legs fall back to witness-backed upper bounds") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    SearchConfig tiny;
    tiny.ceiling = 1;
    CertifiedMinimum cm = certified_minimum(inst, kGf2, 2, KnowledgeMode::static_side_info,
                                            tiny);
    CHECK(cm.value == Rational(3)); // unit rows, and their split lift
    CHECK_FALSE(cm.exact);
    CHECK_FALSE(cm.fully_certified);
    REQUIRE(cm.legs.size() == 2);
    for (const BetaLeg& leg : cm.legs) {
        CHECK_FALSE(leg.least.has_value());
        CHECK(leg.upper.has_value());
        CHECK_FALSE(leg.note.empty());
        REQUIRE(leg.witness.has_value());
        CHECK(validate(*leg.witness).valid);
        CHECK(leg.witness->beta == leg.beta);
    }
    CHECK(*cm.legs[0].upper == 3);
    CHECK(*cm.legs[1].upper == 6);
}

TEST_CASE("estimates grow with the level and gate the runtime") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 1, 2);
    double e2 = estimate_search_size(space_of(inst, 1, 2));
    double e3 = estimate_search_size(space_of(inst, 1, 3));
    CHECK(e2 > 0);
    CHECK(e2 <= e3);

    SearchOutcome res = exists_valid_code(space_of(inst, 1, 2));
    CHECK(res.estimated_size == e2);
    CHECK(res.nodes_visited > 0);
}

TEST_CASE("windowed instances certify their closed form at beta 1") {
    for (const ProblemInstance& inst :
         {ProblemInstance::consecutive(3, 1, 1, 2), ProblemInstance::consecutive(4, 1, 1, 1),
          ProblemInstance::complete(3, 1, {0, 1, 2})}) {
        CertifiedMinimum cm = certified_minimum(inst, kGf2, 1);
        CHECK(cm.exact);
        CHECK(cm.value == optimal_length(inst).value);
    }
}

TEST_CASE("sequential search accepts the static witness level") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    CHECK_FALSE(exists_valid_code(space_of(inst, 1, 1, KnowledgeMode::sequential)).found);

    SearchOutcome res = exists_valid_code(space_of(inst, 1, 2, KnowledgeMode::sequential));
    CHECK(res.found);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->schedule.mode == KnowledgeMode::sequential);
    CHECK(validate(*res.witness).valid);

    CertifiedMinimum cm = certified_minimum(ProblemInstance::consecutive(2, 1, 1, 1), kGf2,
                                            1, KnowledgeMode::sequential);
    CHECK(cm.value == Rational(2));
    CHECK(cm.exact);
}

TEST_CASE("search rejects malformed spaces") {
    ProblemInstance inst = ProblemInstance::consecutive(3, 1, 2, 2);
    CHECK_THROWS_AS(exists_valid_code(space_of(inst, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(exists_valid_code(space_of(inst, 1, -1)), std::invalid_argument);
}
