#pragma once

// Family certificates: one validated witness per unordered pair of paths,
// with a JSON encoding that can be re-checked from scratch.

#include "hamdiff/constructions.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hamdiff {

inline constexpr int kCertificateVersion = 1;

struct PairWitness {
    std::size_t i = 0;  // i < j, indices into FamilyCertificate::paths
    std::size_t j = 0;
    Witness witness;
};

struct FamilyCertificate {
    int n = 0;
    DifferencePredicate predicate = DifferencePredicate::cycle_in(DSpec::all());
    std::string construction;
    std::vector<HamPath> paths;
    /// Ordered by (i, j).
    std::vector<PairWitness> witnesses;
};

struct PairFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    std::string reason;
    /// Cycle lengths of the union, for diagnosis.
    std::set<int> cycle_lengths;
};

struct Verification {
    std::optional<FamilyCertificate> certificate;
    std::vector<PairFailure> failures;

    bool ok() const { return certificate.has_value() && failures.empty(); }
};

enum class VerifyMode { FailFast, Exhaustive };

/// Finds a witness for every pair; stops at the first failing pair unless
/// mode is Exhaustive. A certificate is produced only when all pairs pass.
Verification verify_family(const ConstructedFamily& family, VerifyMode mode = VerifyMode::FailFast);

/// Recomputes every union and re-validates the stored witnesses; also checks
/// order, canonical form, distinctness and pair coverage.
Verification recheck_certificate(const FamilyCertificate& cert, VerifyMode mode = VerifyMode::FailFast);

nlohmann::ordered_json to_json(const FamilyCertificate& cert);
/// Throws ValidationError on schema errors.
FamilyCertificate certificate_from_json(const nlohmann::ordered_json& doc);

}  // namespace hamdiff
