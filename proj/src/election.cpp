#include "mmsflow/election.hpp"

#include <algorithm>
#include <string>

namespace mmsflow {

namespace {

void sort_unique(std::vector<int>& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

std::vector<int> normalize_subset(std::vector<int> subset, int candidate_count) {
    if (subset.empty()) {
        throw ValidationError("candidate subset must be nonempty");
    }
    sort_unique(subset);
    if (subset.front() < 0 || subset.back() >= candidate_count) {
        throw ValidationError("candidate subset contains an index out of range");
    }
    return subset;
}

}  // namespace

Election new_election(int candidate_count, std::vector<std::vector<int>> ballots) {
    if (candidate_count < 1) {
        throw ValidationError("candidate_count must be at least 1");
    }
    for (std::size_t voter = 0; voter < ballots.size(); ++voter) {
        sort_unique(ballots[voter]);
        for (int index : ballots[voter]) {
            if (index < 0 || index >= candidate_count) {
                throw ValidationError("ballot index out of range: voter " + std::to_string(voter) +
                                      " approves candidate " + std::to_string(index));
            }
        }
    }
    return Election{candidate_count, std::move(ballots)};
}

RestrictedElection restrict_to(const Election& election, std::vector<int> subset) {
    subset = normalize_subset(std::move(subset), election.candidate_count);
    RestrictedElection result;
    result.subset = std::move(subset);
    for (int voter = 0; voter < election.voter_count(); ++voter) {
        std::vector<int> trimmed;
        std::set_intersection(election.ballots[voter].begin(), election.ballots[voter].end(),
                              result.subset.begin(), result.subset.end(),
                              std::back_inserter(trimmed));
        if (!trimmed.empty()) {
            result.active_voters.push_back(voter);
            result.restricted_ballots.push_back(std::move(trimmed));
        }
    }
    return result;
}

RestrictedElection restrict_to(const RestrictedElection& restriction, std::vector<int> subset) {
    if (subset.empty()) {
        throw ValidationError("candidate subset must be nonempty");
    }
    sort_unique(subset);
    if (!std::includes(restriction.subset.begin(), restriction.subset.end(),
                       subset.begin(), subset.end())) {
        throw ValidationError("further restriction must stay inside the current subset");
    }
    RestrictedElection result;
    result.subset = std::move(subset);
    for (int pos = 0; pos < restriction.active_count(); ++pos) {
        std::vector<int> trimmed;
        std::set_intersection(restriction.restricted_ballots[pos].begin(),
                              restriction.restricted_ballots[pos].end(),
                              result.subset.begin(), result.subset.end(),
                              std::back_inserter(trimmed));
        if (!trimmed.empty()) {
            result.active_voters.push_back(restriction.active_voters[pos]);
            result.restricted_ballots.push_back(std::move(trimmed));
        }
    }
    return result;
}

}  // namespace mmsflow
