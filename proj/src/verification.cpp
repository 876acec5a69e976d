#include "mmsflow/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "mmsflow/mms.hpp"

namespace mmsflow {

namespace {

void validate_profile(const std::vector<long long>& party_sizes, int k) {
    if (k < 1) {
        throw ValidationError("k must be at least 1");
    }
    if (party_sizes.empty()) {
        throw ValidationError("at least one party is required");
    }
    for (long long size : party_sizes) {
        if (size < 1) {
            throw ValidationError("party sizes must be positive");
        }
    }
}

std::vector<long long> dhondt_run(const std::vector<long long>& party_sizes, int k,
                                  bool* saw_tie) {
    validate_profile(party_sizes, k);
    const std::size_t parties = party_sizes.size();
    std::vector<long long> seats(parties, 0);
    for (int award = 0; award < k; ++award) {
        std::size_t best = 0;
        bool tied = false;
        for (std::size_t p = 1; p < parties; ++p) {
            // Compare votes_p/(seats_p+1) against the current best by cross
            // multiplication; ties keep the smaller party index.
            const __int128 lhs = static_cast<__int128>(party_sizes[p]) * (seats[best] + 1);
            const __int128 rhs = static_cast<__int128>(party_sizes[best]) * (seats[p] + 1);
            if (lhs > rhs) {
                best = p;
                tied = false;
            } else if (lhs == rhs) {
                tied = true;
            }
        }
        if (tied && saw_tie) {
            *saw_tie = true;
        }
        ++seats[best];
    }
    return seats;
}

}  // namespace

std::vector<long long> dhondt(const std::vector<long long>& party_sizes, int k) {
    return dhondt_run(party_sizes, k, nullptr);
}

std::vector<long long> dhondt(const std::vector<long long>& party_sizes, int k, bool& saw_tie) {
    saw_tie = false;
    return dhondt_run(party_sizes, k, &saw_tie);
}

std::optional<PjrViolation> check_pjr(const Election& election, const std::vector<int>& committee,
                                      int k, int max_voters) {
    const int n = election.voter_count();
    if (n > max_voters) {
        throw BoundError("check_pjr enumerates 2^n voter groups and refuses n > " +
                         std::to_string(max_voters) + " (got " + std::to_string(n) + ")");
    }
    if (election.candidate_count > kPjrMaxCandidates) {
        throw BoundError("check_pjr represents ballots as 64-bit masks and refuses more than " +
                         std::to_string(kPjrMaxCandidates) + " candidates");
    }
    if (k < 1 || k > election.candidate_count) {
        throw ValidationError("k must be between 1 and the number of candidates");
    }

    std::uint64_t committee_mask = 0;
    for (int c : committee) {
        if (c < 0 || c >= election.candidate_count) {
            throw ValidationError("committee contains a candidate index out of range");
        }
        committee_mask |= std::uint64_t{1} << c;
    }
    std::vector<std::uint64_t> approvals(n, 0);
    for (int voter = 0; voter < n; ++voter) {
        for (int c : election.ballots[voter]) {
            approvals[voter] |= std::uint64_t{1} << c;
        }
    }
    const std::uint64_t all_candidates =
        election.candidate_count == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << election.candidate_count) - 1;

    for (int ell = 1; ell <= k; ++ell) {
        for (std::uint64_t group = 1; n > 0 && group < (std::uint64_t{1} << n); ++group) {
            const int group_size = std::popcount(group);
            // |N'| >= ell * n / k, compared without division.
            if (static_cast<long long>(group_size) * k < static_cast<long long>(ell) * n) {
                continue;
            }
            std::uint64_t common = all_candidates;
            std::uint64_t joint = 0;
            for (int voter = 0; voter < n; ++voter) {
                if (group & (std::uint64_t{1} << voter)) {
                    common &= approvals[voter];
                    joint |= approvals[voter];
                }
            }
            if (std::popcount(common) < ell) {
                continue;
            }
            if (std::popcount(joint & committee_mask) < ell) {
                PjrViolation violation;
                violation.ell = ell;
                for (int voter = 0; voter < n; ++voter) {
                    if (group & (std::uint64_t{1} << voter)) {
                        violation.group.push_back(voter);
                    }
                }
                return violation;
            }
        }
    }
    return std::nullopt;
}

Election party_list_election(const PartyListProfile& profile, int k) {
    validate_profile(profile.party_sizes, k);
    const int parties = static_cast<int>(profile.party_sizes.size());
    std::vector<std::vector<int>> ballots;
    for (int p = 0; p < parties; ++p) {
        std::vector<int> party_slate(k);
        for (int c = 0; c < k; ++c) {
            party_slate[c] = p * k + c;
        }
        for (long long voter = 0; voter < profile.party_sizes[p]; ++voter) {
            ballots.push_back(party_slate);
        }
    }
    return new_election(parties * k, std::move(ballots));
}

PartyListReport compare_party_list(const PartyListProfile& profile, int k) {
    const Election election = party_list_election(profile, k);
    const int parties = static_cast<int>(profile.party_sizes.size());

    PartyListReport report;
    report.dhondt_seats = dhondt_run(profile.party_sizes, k, &report.cross_party_tie);

    const CommitteeTrace trace = mms_winners(election, k);
    report.mms_seats.assign(parties, 0);
    for (int winner : trace.winners) {
        ++report.mms_seats[winner / k];
    }
    for (const std::vector<int>& ties : trace.round_ties) {
        for (int candidate : ties) {
            if (candidate / k != ties.front() / k) {
                report.cross_party_tie = true;
            }
        }
    }
    return report;
}

bool check_party_list_equivalence(const PartyListProfile& profile, int k) {
    return compare_party_list(profile, k).seats_match();
}

}  // namespace mmsflow
