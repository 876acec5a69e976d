#include "mmsflow/ballot_file.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace mmsflow {

namespace {

using nlohmann::json;

std::vector<std::string> read_candidate_names(const json& document) {
    if (!document.contains("candidates")) {
        throw BallotFileError("missing required field 'candidates'");
    }
    const json& names = document.at("candidates");
    if (!names.is_array() || names.empty()) {
        throw BallotFileError("field 'candidates' must be a nonempty array of strings");
    }
    std::vector<std::string> result;
    result.reserve(names.size());
    for (const json& name : names) {
        if (!name.is_string()) {
            throw BallotFileError("field 'candidates' must contain only strings");
        }
        result.push_back(name.get<std::string>());
    }
    std::unordered_set<std::string> seen;
    for (const std::string& name : result) {
        if (!seen.insert(name).second) {
            throw ValidationError("duplicate candidate name: " + name);
        }
    }
    return result;
}

std::vector<std::vector<int>> read_ballots(const json& document) {
    if (!document.contains("ballots")) {
        throw BallotFileError("missing required field 'ballots'");
    }
    const json& ballots = document.at("ballots");
    if (!ballots.is_array()) {
        throw BallotFileError("field 'ballots' must be an array of index arrays");
    }
    std::vector<std::vector<int>> result;
    result.reserve(ballots.size());
    for (std::size_t voter = 0; voter < ballots.size(); ++voter) {
        const json& ballot = ballots[voter];
        if (!ballot.is_array()) {
            throw BallotFileError("ballot of voter " + std::to_string(voter) +
                                  " must be an array of candidate indices");
        }
        std::vector<int> indices;
        indices.reserve(ballot.size());
        for (const json& entry : ballot) {
            if (!entry.is_number_integer()) {
                throw BallotFileError("ballot of voter " + std::to_string(voter) +
                                      " contains a non-integer entry");
            }
            // Range-check before narrowing so oversized indices cannot alias
            // into the valid range.
            const long long value = entry.get<long long>();
            if (value < 0 || value > std::numeric_limits<int>::max()) {
                throw ValidationError("ballot index out of range: voter " +
                                      std::to_string(voter) + " approves candidate " +
                                      std::to_string(value));
            }
            indices.push_back(static_cast<int>(value));
        }
        result.push_back(std::move(indices));
    }
    return result;
}

std::optional<int> read_k(const json& document) {
    if (!document.contains("k")) {
        return std::nullopt;
    }
    const json& k = document.at("k");
    if (!k.is_number_integer()) {
        throw BallotFileError("field 'k' must be an integer");
    }
    const long long value = k.get<long long>();
    if (value < 1 || value > std::numeric_limits<int>::max()) {
        throw ValidationError("field 'k' must be a positive committee size, got " +
                              std::to_string(value));
    }
    return static_cast<int>(value);
}

}  // namespace

BallotFile parse_ballot_file(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& error) {
        throw BallotFileError(std::string("invalid ballot document: ") + error.what());
    }
    if (!document.is_object()) {
        throw BallotFileError("ballot document must be a JSON object");
    }

    BallotFile file;
    file.candidate_names = read_candidate_names(document);
    file.election = new_election(static_cast<int>(file.candidate_names.size()),
                                 read_ballots(document));
    file.k = read_k(document);
    return file;
}

BallotFile load_ballot_file(const std::string& path) {
    std::ifstream input(path);
    if (!input) {
        throw BallotFileError("cannot read ballot file: " + path);
    }
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parse_ballot_file(buffer.str());
}

std::optional<int> find_candidate(const BallotFile& file, const std::string& name) {
    const auto it = std::find(file.candidate_names.begin(), file.candidate_names.end(), name);
    if (it == file.candidate_names.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - file.candidate_names.begin());
}

std::vector<int> resolve_subset(const BallotFile& file, const std::string& names) {
    std::vector<int> subset;
    std::vector<std::string> unknown;
    std::stringstream stream(names);
    std::string token;
    while (std::getline(stream, token, ',')) {
        // Trim surrounding whitespace.
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) {
            continue;
        }
        token = token.substr(begin, end - begin + 1);
        if (const std::optional<int> index = find_candidate(file, token)) {
            subset.push_back(*index);
        } else {
            unknown.push_back(token);
        }
    }
    if (!unknown.empty()) {
        std::string message = "unknown candidate name(s):";
        for (const std::string& name : unknown) {
            message += " " + name;
        }
        throw ValidationError(message);
    }
    if (subset.empty()) {
        throw ValidationError("candidate subset must be nonempty");
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    return subset;
}

}  // namespace mmsflow
