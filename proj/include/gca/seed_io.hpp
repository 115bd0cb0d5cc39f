#pragma once

#include <string>

#include "gca/groupoid.hpp"
#include "gca/identities.hpp"

namespace gca {

/// Seed files are JSON objects with fields
///   {"n", "B" (rows of integers), "R", "d", "y", "z": {"i,s": value}}
/// and, for groupoid seeds, additionally {"q", "a": {"i,s": value}}.
/// Indices in keys are 1-based.
Seed read_seed(const std::string& json_text);
std::string write_seed(const Seed& s, int indent = 2);

GroupoidSeed read_groupoid_seed(const std::string& json_text);
std::string write_groupoid_seed(const GroupoidSeed& g, int indent = 2);

Seed read_seed_file(const std::string& path);
GroupoidSeed read_groupoid_seed_file(const std::string& path);

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent = 2);

} // namespace gca
