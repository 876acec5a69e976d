#pragma once

#include <optional>
#include <vector>

#include "mmsflow/election.hpp"
#include "mmsflow/maxflow.hpp"
#include "mmsflow/rational.hpp"

namespace mmsflow {

// Outcome of the flow-based maximin support computation, including the trace
// needed for audits: the surviving sub-election of the last pass and how many
// passes (one max-flow solve each) were needed.
struct MaximinOutcome {
    Rational value;                           // |final N_S| / |final S|
    std::vector<int> surviving_candidates;    // final S, ascending, nonempty
    std::vector<int> surviving_voters;        // final N_S, ascending
    int iterations = 0;                       // passes; 1 <= iterations <= |initial S|
    long long final_flow_value = 0;           // |final N_S| * |final S|
};

// Minimizing candidate subset found by the exhaustive reference oracle,
// together with the number of voters approving at least one of its members.
struct KernelWitness {
    std::vector<int> subset;  // ascending, nonempty
    long long touched_voters = 0;
    Rational value;           // touched_voters / |subset|
};

struct MaximinOptions {
    // When set, the support network's edge list is shuffled before every
    // solve. The returned value must not change (any maximum flow identifies
    // a valid drop step); traces may differ. Used by flow-choice tests.
    std::optional<unsigned long long> shuffle_seed;
};

// Three-layer support network for a restricted election with scaled integral
// capacities: source->voter and voter->approved-candidate edges carry |S|,
// candidate->sink edges carry |N_S|. Node layout is deterministic: node 0 is
// the source, nodes 1..|N_S| the active voters in ascending order, the next
// |S| nodes the candidates in ascending order, and the last node the sink.
// With no active voters the candidate->sink capacities are clamped to 1 so
// the network stays well formed; its maximum flow is 0 either way.
FlowNetwork build_support_network(const RestrictedElection& restriction);

inline int support_source(const RestrictedElection&) { return 0; }
inline int support_voter_node(const RestrictedElection&, int voter_pos) { return 1 + voter_pos; }
inline int support_candidate_node(const RestrictedElection& r, int cand_pos) {
    return 1 + r.active_count() + cand_pos;
}
inline int support_sink(const RestrictedElection& r) {
    return 1 + r.active_count() + r.subset_size();
}

// Exact maximin support value of (election, subset), computed by repeatedly
// solving the scaled support network and dropping every candidate approved by
// an undersaturated voter until the flow saturates at |N_S|*|S|.
MaximinOutcome maximin_support(const Election& election, const std::vector<int>& subset);
MaximinOutcome maximin_support(const Election& election, const std::vector<int>& subset,
                               const MaximinOptions& options);

inline constexpr int kMaximinOracleMaxSubset = 20;

// Exponential-time reference: enumerates every nonempty K inside the subset
// and returns the one minimizing touched_voters/|K| (ties: smaller K, then
// lexicographically smallest index sequence). That minimum is exactly the
// maximin support value, so this is an independent check of maximin_support.
// Refuses subsets larger than max_subset_size.
KernelWitness maximin_oracle(const Election& election, const std::vector<int>& subset,
                             int max_subset_size = kMaximinOracleMaxSubset);

}  // namespace mmsflow
