#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmsflow/ballot_file.hpp"
#include "mmsflow/maximin.hpp"
#include "mmsflow/mms.hpp"
#include "mmsflow/verification.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBound = 4;
constexpr int kExitVerificationFailed = 5;

int resolve_threads(int threads) {
    if (threads > 0) {
        return threads;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_k(const mmsflow::BallotFile& file, int k_flag) {
    int k = 0;
    if (k_flag != 0) {
        k = k_flag;
    } else if (file.k) {
        k = *file.k;
    } else {
        throw mmsflow::ValidationError("committee size k missing: pass --k or set \"k\" in the file");
    }
    if (k < 1) {
        throw mmsflow::ValidationError("committee size k must be at least 1");
    }
    if (k > file.election.candidate_count) {
        throw mmsflow::ValidationError("k exceeds the number of candidates");
    }
    return k;
}

std::vector<std::string> names_of(const mmsflow::BallotFile& file, const std::vector<int>& indices) {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (int index : indices) {
        names.push_back(file.candidate_names[index]);
    }
    return names;
}

void emit(const ordered_json& report) {
    std::cout << report.dump(2) << "\n";
}

int cmd_winners(const std::string& path, int k_flag, int threads) {
    const mmsflow::BallotFile file = mmsflow::load_ballot_file(path);
    const int k = resolve_k(file, k_flag);
    const mmsflow::CommitteeTrace trace =
        mmsflow::mms_winners(file.election, k, resolve_threads(threads));

    ordered_json report;
    report["k"] = k;
    report["winners"] = names_of(file, trace.winners);
    report["winner_indices"] = trace.winners;
    ordered_json values = ordered_json::array();
    for (const mmsflow::Rational& value : trace.round_values) {
        values.push_back(value.to_string());
    }
    report["round_values"] = std::move(values);
    ordered_json ties = ordered_json::array();
    for (const std::vector<int>& round : trace.round_ties) {
        ties.push_back(names_of(file, round));
    }
    report["round_ties"] = std::move(ties);
    report["flow_solves"] = trace.flow_solves;
    emit(report);
    return kExitOk;
}

int cmd_maximin(const std::string& path, const std::string& subset_names) {
    const mmsflow::BallotFile file = mmsflow::load_ballot_file(path);
    const std::vector<int> subset = mmsflow::resolve_subset(file, subset_names);
    const mmsflow::MaximinOutcome outcome = mmsflow::maximin_support(file.election, subset);

    ordered_json report;
    report["subset"] = names_of(file, subset);
    report["value"] = outcome.value.to_string();
    report["survivors"] = names_of(file, outcome.surviving_candidates);
    report["survivor_indices"] = outcome.surviving_candidates;
    report["iterations"] = outcome.iterations;
    emit(report);
    return kExitOk;
}

int verify_oracle(const mmsflow::BallotFile& file, int k, int threads, ordered_json& report) {
    if (k > mmsflow::kMaximinOracleMaxSubset) {
        throw mmsflow::BoundError(
            "oracle mode enumerates 2^k subsets and refuses k > " +
            std::to_string(mmsflow::kMaximinOracleMaxSubset) + " (got " + std::to_string(k) + ")");
    }
    const mmsflow::CommitteeTrace trace =
        mmsflow::mms_winners(file.election, k, resolve_threads(threads));
    bool pass = true;
    ordered_json rounds = ordered_json::array();
    std::vector<int> prefix;
    for (int round = 0; round < k; ++round) {
        prefix.push_back(trace.winners[round]);
        std::vector<int> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        const mmsflow::MaximinOutcome flow_outcome =
            mmsflow::maximin_support(file.election, sorted);
        const mmsflow::KernelWitness witness = mmsflow::maximin_oracle(file.election, sorted);
        const bool equal = flow_outcome.value == witness.value;
        pass = pass && equal;

        ordered_json entry;
        entry["round"] = round + 1;
        entry["committee"] = names_of(file, sorted);
        entry["flow_value"] = flow_outcome.value.to_string();
        entry["oracle_value"] = witness.value.to_string();
        entry["kernel"] = names_of(file, witness.subset);
        entry["match"] = equal;
        rounds.push_back(std::move(entry));
    }
    report["rounds"] = std::move(rounds);
    report["pass"] = pass;
    return pass ? kExitOk : kExitVerificationFailed;
}

int verify_pjr(const mmsflow::BallotFile& file, int k, int threads, ordered_json& report) {
    const mmsflow::CommitteeTrace trace =
        mmsflow::mms_winners(file.election, k, resolve_threads(threads));
    std::vector<int> committee = trace.winners;
    std::sort(committee.begin(), committee.end());
    const std::optional<mmsflow::PjrViolation> violation =
        mmsflow::check_pjr(file.election, committee, k);

    report["committee"] = names_of(file, committee);
    report["pass"] = !violation.has_value();
    if (violation) {
        ordered_json witness;
        witness["ell"] = violation->ell;
        witness["group"] = violation->group;
        report["witness"] = std::move(witness);
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// Party structure of a ballot file: every ballot nonempty, distinct ballots
// pairwise disjoint, every candidate on exactly one slate. Parties are
// ordered by their smallest candidate index.
struct FileParties {
    std::vector<long long> sizes;
    std::vector<std::vector<int>> slates;
    std::vector<int> party_of_candidate;
};

FileParties detect_parties(const mmsflow::Election& election) {
    std::map<std::vector<int>, long long> groups;
    for (const std::vector<int>& ballot : election.ballots) {
        if (ballot.empty()) {
            throw mmsflow::ValidationError(
                "not a party-list election: a voter approves no candidate");
        }
        ++groups[ballot];
    }
    FileParties parties;
    parties.party_of_candidate.assign(election.candidate_count, -1);
    for (const auto& [slate, voters] : groups) {
        const int party = static_cast<int>(parties.slates.size());
        for (int candidate : slate) {
            if (parties.party_of_candidate[candidate] != -1) {
                throw mmsflow::ValidationError(
                    "not a party-list election: ballots are not pairwise disjoint");
            }
            parties.party_of_candidate[candidate] = party;
        }
        parties.slates.push_back(slate);
        parties.sizes.push_back(voters);
    }
    for (int candidate = 0; candidate < election.candidate_count; ++candidate) {
        if (parties.party_of_candidate[candidate] == -1) {
            throw mmsflow::ValidationError(
                "not a party-list election: candidate " + std::to_string(candidate) +
                " is approved by nobody");
        }
    }
    return parties;
}

int verify_dhondt(const mmsflow::BallotFile& file, int k, int threads, ordered_json& report) {
    const FileParties parties = detect_parties(file.election);
    bool cross_party_tie = false;
    const std::vector<long long> dhondt_seats = mmsflow::dhondt(parties.sizes, k, cross_party_tie);

    const mmsflow::CommitteeTrace trace =
        mmsflow::mms_winners(file.election, k, resolve_threads(threads));
    std::vector<long long> mms_seats(parties.sizes.size(), 0);
    for (int winner : trace.winners) {
        ++mms_seats[parties.party_of_candidate[winner]];
    }
    for (const std::vector<int>& ties : trace.round_ties) {
        for (int candidate : ties) {
            if (parties.party_of_candidate[candidate] !=
                parties.party_of_candidate[ties.front()]) {
                cross_party_tie = true;
            }
        }
    }

    ordered_json slates = ordered_json::array();
    for (const std::vector<int>& slate : parties.slates) {
        slates.push_back(names_of(file, slate));
    }
    report["party_candidates"] = std::move(slates);
    report["party_sizes"] = parties.sizes;
    report["mms_seats"] = mms_seats;
    report["dhondt_seats"] = dhondt_seats;
    report["cross_party_ties"] = cross_party_tie;
    const bool pass = mms_seats == dhondt_seats;
    report["pass"] = pass;
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const std::string& path, const std::string& mode, int k_flag, int threads) {
    const mmsflow::BallotFile file = mmsflow::load_ballot_file(path);
    const int k = resolve_k(file, k_flag);

    ordered_json report;
    report["mode"] = mode;
    report["k"] = k;
    int status = kExitOk;
    if (mode == "oracle") {
        status = verify_oracle(file, k, threads, report);
    } else if (mode == "pjr") {
        status = verify_pjr(file, k, threads, report);
    } else {
        status = verify_dhondt(file, k, threads, report);
    }
    emit(report);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact committee elections under the maximin support rule"};
    app.require_subcommand(1);

    std::string file_path;
    std::string subset_names;
    std::string mode;
    int k_flag = 0;
    int threads = 0;

    CLI::App* winners = app.add_subcommand("winners", "Compute the committee and its trace");
    winners->add_option("file", file_path, "ballot file (JSON)")->required();
    winners->add_option("--k", k_flag, "committee size (overrides the file)");
    winners->add_option("--threads", threads, "worker threads (default: available parallelism)");

    CLI::App* maximin = app.add_subcommand("maximin", "Maximin support value of a candidate subset");
    maximin->add_option("file", file_path, "ballot file (JSON)")->required();
    maximin->add_option("--subset", subset_names, "comma-separated candidate names")->required();

    CLI::App* verify = app.add_subcommand("verify", "Check the computation against a reference");
    verify->add_option("file", file_path, "ballot file (JSON)")->required();
    verify->add_option("--mode", mode, "oracle, pjr, or dhondt")
        ->required()
        ->check(CLI::IsMember({"oracle", "pjr", "dhondt"}));
    verify->add_option("--k", k_flag, "committee size (overrides the file)");
    verify->add_option("--threads", threads, "worker threads (default: available parallelism)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (winners->parsed()) {
            return cmd_winners(file_path, k_flag, threads);
        }
        if (maximin->parsed()) {
            return cmd_maximin(file_path, subset_names);
        }
        return cmd_verify(file_path, mode, k_flag, threads);
    } catch (const mmsflow::BallotFileError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return kExitParse;
    } catch (const mmsflow::BoundError& error) {
        std::cerr << "refused: " << error.what() << "\n";
        return kExitBound;
    } catch (const mmsflow::ValidationError& error) {
        std::cerr << "invalid input: " << error.what() << "\n";
        return kExitValidation;
    }
}
