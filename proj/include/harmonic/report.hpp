#pragma once

/**
 * @file report.hpp
 * @brief Verdict records for identity checks and their JSON / CSV forms.
 *
 * JSON (one object per line):
 *   {"identity_id": ..., "params": {"n": int, "x": "p/q", "r": int},
 *    "status": "pass"|"fail"|"skipped", "witness": {"lhs": "p/q", "rhs": "p/q"}?,
 *    "reason": string?, "oracle": {...}?, "elapsed_ms": int}
 *
 * CSV columns: identity_id,n,x,r,status,lhs,rhs,elapsed_ms
 */

#include "harmonic/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace harmonic {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// One parameter tuple of a sweep. Absent fields are not part of the identity.
struct GridPoint {
    std::uint64_t n = 0;
    std::optional<Rational> x;
    std::optional<unsigned> r;
};

/// Lexicographic on (n, x, r); absent sorts first.
bool operator<(const GridPoint& a, const GridPoint& b);
bool operator==(const GridPoint& a, const GridPoint& b);

struct Witness {
    Rational lhs;
    Rational rhs;
};

struct QuadratureOracle {
    double value = 0.0;
    double err = 0.0;
    std::uint64_t evals = 0;
};

struct MonteCarloOracle {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator;
};

using OracleRecord = std::variant<QuadratureOracle, MonteCarloOracle>;

struct IdentityReport {
    std::string identity_id;
    GridPoint params;
    Status status = Status::pass;
    std::optional<Witness> witness; // present iff status == fail
    std::optional<std::string> reason; // why a point was skipped
    std::optional<OracleRecord> oracle;
    std::int64_t elapsed_ms = 0;
};

std::string to_json(const IdentityReport& report);

std::string csv_header();
std::string to_csv(const IdentityReport& report);

/// Skipped entries do not count as failures.
bool any_failed(const std::vector<IdentityReport>& reports);

} // namespace harmonic
