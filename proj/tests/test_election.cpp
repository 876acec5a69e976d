#include <doctest.h>

#include <random>

#include "mmsflow/election.hpp"
#include "support/generators.hpp"

using mmsflow::Election;
using mmsflow::new_election;
using mmsflow::restrict_to;
using mmsflow::RestrictedElection;
using mmsflow::ValidationError;

TEST_CASE("new_election validates and normalizes ballots") {
    const Election e = new_election(2, {{0}, {1}, {0}});
    CHECK(e.voter_count() == 3);
    CHECK(e.candidate_count == 2);

    SUBCASE("duplicate approvals collapse") {
        const Election d = new_election(3, {{2, 0, 2, 0}});
        CHECK(d.ballots[0] == std::vector<int>{0, 2});
    }
    SUBCASE("empty ballots are legal input") {
        const Election d = new_election(1, {{}});
        CHECK(d.voter_count() == 1);
        CHECK(d.ballots[0].empty());
    }
    SUBCASE("out-of-range index names the voter and the index") {
        CHECK_THROWS_WITH_AS(new_election(2, {{0, 2}}),
                             "ballot index out of range: voter 0 approves candidate 2",
                             ValidationError);
        CHECK_THROWS_AS(new_election(2, {{-1}}), ValidationError);
    }
    SUBCASE("at least one candidate required") {
        CHECK_THROWS_AS(new_election(0, {}), ValidationError);
    }
}

TEST_CASE("restrict_to keeps exactly the voters approving the subset") {
    SUBCASE("single candidate subset") {
        const Election e = new_election(2, {{0}, {0}, {1}});
        const RestrictedElection r = restrict_to(e, {1});
        CHECK(r.active_voters == std::vector<int>{2});
        CHECK(r.restricted_ballots == std::vector<std::vector<int>>{{1}});
        CHECK(r.subset == std::vector<int>{1});
    }
    SUBCASE("intersection drops candidates outside the subset") {
        const Election e = new_election(2, {{0, 1}, {1}});
        const RestrictedElection r = restrict_to(e, {0});
        CHECK(r.active_voters == std::vector<int>{0});
        CHECK(r.restricted_ballots == std::vector<std::vector<int>>{{0}});
    }
    SUBCASE("a voter approving nobody never becomes active") {
        const Election e = new_election(1, {{}});
        const RestrictedElection r = restrict_to(e, {0});
        CHECK(r.active_voters.empty());
        CHECK(r.restricted_ballots.empty());
    }
    SUBCASE("restricting to the full candidate set keeps nonempty ballots") {
        const Election e = new_election(3, {{0}, {}, {1, 2}});
        const RestrictedElection r = restrict_to(e, {0, 1, 2});
        CHECK(r.active_voters == std::vector<int>{0, 2});
    }
    SUBCASE("empty subset is a contract violation") {
        const Election e = new_election(2, {{0}});
        CHECK_THROWS_AS(restrict_to(e, {}), ValidationError);
        CHECK_THROWS_AS(restrict_to(e, {2}), ValidationError);
    }
}

TEST_CASE("restricting a restriction") {
    const Election e = new_election(3, {{0, 1}, {1, 2}, {2}});
    const RestrictedElection r = restrict_to(e, {1, 2});

    SUBCASE("same subset changes nothing") {
        const RestrictedElection again = restrict_to(r, {1, 2});
        CHECK(again.active_voters == r.active_voters);
        CHECK(again.subset == r.subset);
        CHECK(again.restricted_ballots == r.restricted_ballots);
    }
    SUBCASE("shrinking matches restricting the original election") {
        const RestrictedElection via_restriction = restrict_to(r, {2});
        const RestrictedElection via_election = restrict_to(e, {2});
        CHECK(via_restriction.active_voters == via_election.active_voters);
        CHECK(via_restriction.restricted_ballots == via_election.restricted_ballots);
    }
    SUBCASE("subset must stay inside the current one") {
        CHECK_THROWS_AS(restrict_to(r, {0}), ValidationError);
        CHECK_THROWS_AS(restrict_to(r, {}), ValidationError);
    }
}

TEST_CASE("restriction invariants on random elections") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        const Election e = mmsflow::testing::random_election(rng, 8, 6);
        const std::vector<int> subset =
            mmsflow::testing::random_nonempty_subset(rng, e.candidate_count);
        const RestrictedElection r = restrict_to(e, subset);

        CHECK(r.active_count() <= e.voter_count());
        for (int pos = 0; pos < r.active_count(); ++pos) {
            const std::vector<int>& ballot = r.restricted_ballots[pos];
            CHECK(!ballot.empty());
            for (int c : ballot) {
                CHECK(std::binary_search(r.subset.begin(), r.subset.end(), c));
            }
        }
        // Exactly the voters with a nonempty intersection are active.
        for (int voter = 0; voter < e.voter_count(); ++voter) {
            bool touches = false;
            for (int c : e.ballots[voter]) {
                touches = touches || std::binary_search(subset.begin(), subset.end(), c);
            }
            const bool active =
                std::binary_search(r.active_voters.begin(), r.active_voters.end(), voter);
            CHECK(active == touches);
        }
    }
}
