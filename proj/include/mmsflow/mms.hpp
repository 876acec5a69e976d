#pragma once

#include <map>
#include <vector>

#include "mmsflow/election.hpp"
#include "mmsflow/rational.hpp"

namespace mmsflow {

// Full record of the greedy committee computation: the winner of each round,
// the maximin support value at which it was chosen, and every candidate that
// was tied for that round's maximum before index tie-breaking.
struct CommitteeTrace {
    std::vector<int> winners;                  // length k, no duplicates
    std::vector<Rational> round_values;        // non-increasing across rounds
    std::vector<std::vector<int>> round_ties;  // argmax candidates, ascending
    long long flow_solves = 0;                 // total max-flow invocations
};

// Maximin support value of committee ∪ {c} for every candidate c outside the
// committee. Evaluations are independent pure calls; thread_count > 1 runs
// them on a small work pool, which cannot change the result.
std::map<int, Rational> round_scores(const Election& election, const std::vector<int>& committee,
                                     int thread_count = 1);

// Greedy maximin-support committee of size k: each round adds the candidate
// with the maximum round score, breaking ties by smallest candidate index.
CommitteeTrace mms_winners(const Election& election, int k, int thread_count = 1);

}  // namespace mmsflow
