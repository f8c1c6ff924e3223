#pragma once

// The embedded verification table: worked values from the classical
// literature on levels, diagonal u-invariants and Waring numbers of finite
// and p-adic fields, recomputed from scratch and compared.  Three entries
// carry corrections where the published statements disagree with exhaustive
// computation; they are reported without failing the run.

#include <cstdint>
#include <string>
#include <vector>

#include "hforms/isotropy.hpp"

namespace hforms {

enum class GoldenStatus { match, mismatch, discrepancy_noted };

struct GoldenEntry {
    std::string description;  // what is being checked
    std::string query;        // equivalent command-line invocation
    std::string provenance;   // where the expected value comes from
    std::string expected;     // the claimed value (possibly a bracket)
    std::string computed;     // what this library computes
    GoldenStatus status = GoldenStatus::match;
    std::string note;         // printed context for discrepancies
};

std::vector<GoldenEntry> run_goldens(std::uint64_t budget = default_eval_budget);

// true iff no entry is an outright mismatch
bool goldens_pass(const std::vector<GoldenEntry>& entries);

const char* status_str(GoldenStatus s);

}  // namespace hforms
