#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurlab/laurent.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

enum class Family { schur, sp, o };

std::string family_name(Family f);

/// Outcome of one machine-checked identity instance. Equality is exact:
/// passed holds iff lhs == rhs as Laurent values (cross-multiplied for
/// rational functions). No tolerances exist anywhere.
struct CheckReport {
    std::string identity_id;
    nlohmann::json parameters;
    bool passed = false;
    RationalFn lhs;
    RationalFn rhs;
    double elapsed_ms = 0.0;
};

/// Grading cap for series comparisons: the sum cut and the product
/// expansion are both driven by total degree on the graded variables, so
/// the truncated comparison is exact, not approximate.
struct TruncationSpec {
    std::vector<std::size_t> graded_vars;
    long long cap = 0;
};

/// Restriction rule for the straight symplectic family: the value in
/// (x_1..x_{n-k}, y_1..y_k) equals the sum over all generalized mu of
/// length n-k inside la of the straight value at mu times the skew value
/// la/mu in the y-block. Requires length(la) == n and 1 <= k < n.
CheckReport check_branching_sp(const GeneralizedPartition& la, std::size_t n, std::size_t k);
CheckReport check_branching_o(const GeneralizedPartition& la, std::size_t n, std::size_t k);

/// Classical Cauchy pairing for one family: the lambda-sum against the
/// product side, compared after truncation at total y-degree D. The
/// lambda-sum is cut at |la| <= D, which loses nothing since s_la(y) is
/// homogeneous of degree |la|.
CheckReport check_cauchy(Family family, std::size_t N, long long D);

/// Skew Cauchy identity for the Schur family, truncated at joint total
/// degree D in x and y.
CheckReport check_skew_cauchy_schur(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                                    std::size_t N, std::size_t K, long long D);

/// Skew Cauchy identity for the symplectic/orthogonal families. Only
/// configurations in which every pairing-function invocation satisfies the
/// length rule length(top) = length(bottom) + #vars are accepted:
/// with t = length(mu) - K = length(la) - N >= 0 the rho-sum runs over
/// length t+N+K and the tau-sum over length t. Anything else throws
/// UnsupportedConfiguration. Both sides are cleared by the same
/// y-Vandermonde and compared at total y-degree D + K(K-1)/2; the cut
/// |rho| <= |la| + D is exact because each cleared pairing term has
/// y-degree at least |rho| - |la| + K(K-1)/2.
CheckReport check_skew_cauchy_bcd(Family family, const GeneralizedPartition& la,
                                  const GeneralizedPartition& mu, std::size_t N, std::size_t K,
                                  long long D);

struct SuiteBounds {
    long long max_weight = 4;
    std::size_t max_nvars = 2;
    long long degree = 3;
};

/// Sweeps a bounded parameter grid for one of the named suites
/// (equivalence, branching, cauchy, specialization, remarks) in a
/// deterministic order. Points may be evaluated in parallel (capped by the
/// SCHURLAB_THREADS environment variable); reports always come back merged
/// in parameter order.
std::vector<CheckReport> run_suite(const std::string& suite_id, const SuiteBounds& bounds);

nlohmann::json to_json(const CheckReport& r);

/// Thread cap for suite evaluation: SCHURLAB_THREADS when set, hardware
/// concurrency otherwise, never below 1.
std::size_t verification_threads();

/// Runs the jobs on the worker pool and returns results indexed like the
/// input, regardless of completion order.
std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs);

} // namespace schurlab
