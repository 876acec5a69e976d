#include "mmsflow/mms.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "mmsflow/maximin.hpp"

namespace mmsflow {

namespace {

struct ScoredCandidate {
    int candidate = -1;
    MaximinOutcome outcome;
};

std::vector<int> normalize_committee(const Election& election, const std::vector<int>& committee) {
    std::vector<int> sorted = committee;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= election.candidate_count)) {
        throw ValidationError("committee contains a candidate index out of range");
    }
    return sorted;
}

// Scores every candidate outside the committee. Results are written into
// pre-sized slots keyed by candidate position, so worker scheduling cannot
// influence anything observable.
std::vector<ScoredCandidate> score_candidates(const Election& election,
                                              const std::vector<int>& committee,
                                              int thread_count) {
    std::vector<int> remaining;
    for (int c = 0; c < election.candidate_count; ++c) {
        if (!std::binary_search(committee.begin(), committee.end(), c)) {
            remaining.push_back(c);
        }
    }
    if (remaining.empty()) {
        throw ValidationError("committee already contains every candidate");
    }

    std::vector<ScoredCandidate> scored(remaining.size());
    auto evaluate = [&](std::size_t index) {
        std::vector<int> trial = committee;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), remaining[index]),
                     remaining[index]);
        scored[index] = {remaining[index], maximin_support(election, trial)};
    };

    if (thread_count <= 1 || remaining.size() <= 1) {
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            evaluate(i);
        }
        return scored;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < remaining.size();) {
                evaluate(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count), remaining.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return scored;
}

}  // namespace

std::map<int, Rational> round_scores(const Election& election, const std::vector<int>& committee,
                                     int thread_count) {
    const std::vector<int> sorted = normalize_committee(election, committee);
    std::map<int, Rational> scores;
    for (const ScoredCandidate& entry : score_candidates(election, sorted, thread_count)) {
        scores.emplace(entry.candidate, entry.outcome.value);
    }
    return scores;
}

CommitteeTrace mms_winners(const Election& election, int k, int thread_count) {
    if (k < 1 || k > election.candidate_count) {
        throw ValidationError("committee size k must be between 1 and " +
                              std::to_string(election.candidate_count));
    }
    CommitteeTrace trace;
    std::vector<int> committee;  // kept sorted
    for (int round = 0; round < k; ++round) {
        const std::vector<ScoredCandidate> scored =
            score_candidates(election, committee, thread_count);

        Rational best;
        for (const ScoredCandidate& entry : scored) {
            trace.flow_solves += entry.outcome.iterations;
            if (entry.outcome.value > best) {
                best = entry.outcome.value;
            }
        }
        std::vector<int> ties;
        for (const ScoredCandidate& entry : scored) {
            if (entry.outcome.value == best) {
                ties.push_back(entry.candidate);
            }
        }
        const int winner = ties.front();  // smallest index among the argmax set

        trace.winners.push_back(winner);
        trace.round_values.push_back(best);
        trace.round_ties.push_back(std::move(ties));
        committee.insert(std::upper_bound(committee.begin(), committee.end(), winner), winner);
    }
    return trace;
}

}  // namespace mmsflow
