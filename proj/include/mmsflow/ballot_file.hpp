#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmsflow/election.hpp"

namespace mmsflow {

// Structural problem with a ballot document: malformed JSON, missing keys,
// wrong types. Semantic problems (duplicate names, out-of-range indices, bad
// k) raise ValidationError instead; the CLI maps the two to different exit
// codes.
struct BallotFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One JSON document describing an election:
//   {
//     "candidates": ["a1", "a2", "b1"],     required, unique display names
//     "ballots":    [[0, 1], [2], []],      required, candidate indices
//     "k":          2                       optional committee size
//   }
struct BallotFile {
    std::vector<std::string> candidate_names;
    Election election;
    std::optional<int> k;
};

BallotFile parse_ballot_file(const std::string& text);
BallotFile load_ballot_file(const std::string& path);

std::optional<int> find_candidate(const BallotFile& file, const std::string& name);

// Resolves a comma-separated list of candidate names to sorted unique
// indices; throws ValidationError listing every unknown name.
std::vector<int> resolve_subset(const BallotFile& file, const std::string& names);

}  // namespace mmsflow
