#include "mmsflow/maximin.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace mmsflow {

FlowNetwork build_support_network(const RestrictedElection& restriction) {
    if (restriction.subset.empty()) {
        throw ValidationError("candidate subset must be nonempty");
    }
    const long long voters = restriction.active_count();
    const long long cands = restriction.subset_size();
    FlowNetwork network(static_cast<int>(2 + voters + cands), support_source(restriction),
                        support_sink(restriction));

    for (int pos = 0; pos < restriction.active_count(); ++pos) {
        const int voter_node = support_voter_node(restriction, pos);
        network.add_edge(network.source, voter_node, cands);
        for (int candidate : restriction.restricted_ballots[pos]) {
            const auto it = std::lower_bound(restriction.subset.begin(), restriction.subset.end(),
                                             candidate);
            const int cand_pos = static_cast<int>(it - restriction.subset.begin());
            network.add_edge(voter_node, support_candidate_node(restriction, cand_pos), cands);
        }
    }
    // With no active voters the nominal capacity |N_S| would be zero; clamping
    // to 1 keeps the network valid and cannot change the flow, which is zero
    // without source edges.
    const long long sink_capacity = std::max(voters, 1LL);
    for (int pos = 0; pos < restriction.subset_size(); ++pos) {
        network.add_edge(support_candidate_node(restriction, pos), network.sink, sink_capacity);
    }
    return network;
}

MaximinOutcome maximin_support(const Election& election, const std::vector<int>& subset) {
    return maximin_support(election, subset, MaximinOptions{});
}

MaximinOutcome maximin_support(const Election& election, const std::vector<int>& subset,
                               const MaximinOptions& options) {
    RestrictedElection restriction = restrict_to(election, subset);
    std::optional<std::mt19937_64> shuffle_rng;
    if (options.shuffle_seed) {
        shuffle_rng.emplace(*options.shuffle_seed);
    }

    MaximinOutcome outcome;
    for (;;) {
        ++outcome.iterations;
        FlowNetwork network = build_support_network(restriction);
        if (shuffle_rng) {
            std::shuffle(network.edges.begin(), network.edges.end(), *shuffle_rng);
        }
        const FlowResult flow = max_flow(network);
        const long long voters = restriction.active_count();
        const long long cands = restriction.subset_size();

        if (flow.value >= voters * cands) {
            outcome.final_flow_value = flow.value;
            outcome.value = Rational(voters, cands);
            outcome.surviving_candidates = restriction.subset;
            outcome.surviving_voters = restriction.active_voters;
            return outcome;
        }

        // Candidates approved by a voter that could not send out its full
        // |S| units can never be part of a minimizing kernel; drop them all.
        std::vector<int> drop;
        for (int pos = 0; pos < restriction.active_count(); ++pos) {
            if (node_outflow(flow, network, support_voter_node(restriction, pos)) < cands) {
                drop.insert(drop.end(), restriction.restricted_ballots[pos].begin(),
                            restriction.restricted_ballots[pos].end());
            }
        }
        std::sort(drop.begin(), drop.end());
        drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
        if (drop.empty()) {
            throw std::logic_error("undersaturated flow without an undersaturated voter");
        }

        std::vector<int> remaining;
        std::set_difference(restriction.subset.begin(), restriction.subset.end(), drop.begin(),
                            drop.end(), std::back_inserter(remaining));
        if (remaining.empty()) {
            throw std::logic_error("drop step removed every candidate");
        }
        restriction = restrict_to(restriction, std::move(remaining));
    }
}

KernelWitness maximin_oracle(const Election& election, const std::vector<int>& subset,
                             int max_subset_size) {
    const RestrictedElection restriction = restrict_to(election, subset);
    const std::vector<int>& candidates = restriction.subset;
    const int m = restriction.subset_size();
    if (m > max_subset_size) {
        throw BoundError("maximin_oracle enumerates 2^|S| subsets and refuses |S| > " +
                         std::to_string(max_subset_size) + " (got " + std::to_string(m) + ")");
    }

    // Per-voter approval masks over subset positions; voters outside the
    // restriction touch no subset member and can be ignored.
    std::vector<unsigned> voter_masks;
    voter_masks.reserve(restriction.active_count());
    for (const std::vector<int>& ballot : restriction.restricted_ballots) {
        unsigned mask = 0;
        for (int candidate : ballot) {
            const auto it = std::lower_bound(candidates.begin(), candidates.end(), candidate);
            mask |= 1u << static_cast<unsigned>(it - candidates.begin());
        }
        voter_masks.push_back(mask);
    }

    auto members_of = [&](unsigned mask) {
        std::vector<int> members;
        for (int pos = 0; pos < m; ++pos) {
            if (mask & (1u << pos)) {
                members.push_back(candidates[pos]);
            }
        }
        return members;
    };

    unsigned best_mask = 0;
    long long best_touched = 0;
    Rational best_value;
    bool have_best = false;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        long long touched = 0;
        for (unsigned voter_mask : voter_masks) {
            touched += (voter_mask & mask) != 0;
        }
        const int size = std::popcount(mask);
        const Rational value(touched, size);
        if (!have_best || value < best_value) {
            have_best = true;
            best_mask = mask;
            best_touched = touched;
            best_value = value;
            continue;
        }
        if (value == best_value) {
            const int best_size = std::popcount(best_mask);
            if (size < best_size ||
                (size == best_size && members_of(mask) < members_of(best_mask))) {
                best_mask = mask;
                best_touched = touched;
            }
        }
    }
    return KernelWitness{members_of(best_mask), best_touched, best_value};
}

}  // namespace mmsflow
