#pragma once

#include <vector>

#include "mmsflow/errors.hpp"

namespace mmsflow {

// Approval-based multi-winner election. Voters are dense indices 0..n-1,
// candidates 0..candidate_count-1; each ballot is the sorted set of candidates
// the voter approves. Ballots may be empty. Immutable by convention once built
// through new_election, so instances can be shared across threads freely.
struct Election {
    int candidate_count = 0;
    std::vector<std::vector<int>> ballots;  // sorted, deduplicated

    int voter_count() const { return static_cast<int>(ballots.size()); }
};

// Sub-election induced by a candidate subset S: keeps exactly the voters that
// approve at least one member of S, with their ballots trimmed to S. Original
// voter and candidate indices are preserved so results stay traceable.
struct RestrictedElection {
    std::vector<int> active_voters;  // ascending original voter indices
    std::vector<int> subset;         // ascending original candidate indices
    // Aligned with active_voters; every entry is nonempty and a subset of `subset`.
    std::vector<std::vector<int>> restricted_ballots;

    int active_count() const { return static_cast<int>(active_voters.size()); }
    int subset_size() const { return static_cast<int>(subset.size()); }
};

// Validates and normalizes the ballot profile. Duplicate approvals inside one
// ballot collapse silently; an index outside [0, candidate_count) throws a
// ValidationError naming the voter and the index.
Election new_election(int candidate_count, std::vector<std::vector<int>> ballots);

// Restriction to a nonempty candidate subset. The subset is deduplicated; an
// empty or out-of-range subset throws.
RestrictedElection restrict_to(const Election& election, std::vector<int> subset);

// Further restriction of an existing restriction. The new subset must be
// contained in the current one. Restricting to the same subset is a no-op.
RestrictedElection restrict_to(const RestrictedElection& restriction, std::vector<int> subset);

}  // namespace mmsflow
