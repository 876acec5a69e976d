#pragma once

#include <optional>
#include <vector>

#include "mmsflow/election.hpp"

namespace mmsflow {

// Disjoint-party approval profile: party p has party_sizes[p] voters, each
// approving exactly party p's candidates and nobody else's.
struct PartyListProfile {
    std::vector<long long> party_sizes;
};

// Classic highest-quotient apportionment with divisors 1, 2, 3, ...: each of
// the k seats goes to the party maximizing votes/(seats_won + 1), ties broken
// by smallest party index. Quotients are compared by exact cross
// multiplication. The returned counts sum to k.
std::vector<long long> dhondt(const std::vector<long long>& party_sizes, int k);

// Same allocation, and additionally reports whether any award was contested
// by two or more parties with equal quotients.
std::vector<long long> dhondt(const std::vector<long long>& party_sizes, int k, bool& saw_tie);

inline constexpr int kPjrMaxVoters = 12;
inline constexpr int kPjrMaxCandidates = 64;

struct PjrViolation {
    int ell = 0;
    std::vector<int> group;  // voter indices, ascending
};

// Proportional justified representation check by direct enumeration of voter
// groups: a violation is a group N' with |N'| >= ell*n/k whose members jointly
// approve at least ell common candidates while the committee contains fewer
// than ell candidates approved by anyone in N'. Returns nullopt when no such
// group exists; otherwise the witness with the smallest ell, then the
// smallest group bitmask. Refuses elections above max_voters (the enumeration
// is exponential) or with more than 64 candidates.
std::optional<PjrViolation> check_pjr(const Election& election, const std::vector<int>& committee,
                                      int k, int max_voters = kPjrMaxVoters);

// Election induced by a party-list profile for a size-k committee: party p
// owns the candidate block [p*k, (p+1)*k), so no party can run out of
// candidates during apportionment.
Election party_list_election(const PartyListProfile& profile, int k);

struct PartyListReport {
    std::vector<long long> mms_seats;
    std::vector<long long> dhondt_seats;
    // True when some greedy round's argmax set spans two parties or some
    // quotient award is tied across parties. The two tie conventions need not
    // align on such instances, so drivers comparing the methods skip them.
    bool cross_party_tie = false;

    bool seats_match() const { return mms_seats == dhondt_seats; }
};

// Runs the greedy maximin-support rule on the induced election, counts
// winners per party, and apportions the same profile with dhondt.
PartyListReport compare_party_list(const PartyListProfile& profile, int k);

// True when the per-party seat counts of the two methods coincide.
bool check_party_list_equivalence(const PartyListProfile& profile, int k);

}  // namespace mmsflow
