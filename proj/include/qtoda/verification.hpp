#pragma once

#include "qtoda/eigenfunctions.hpp"
#include "qtoda/operators.hpp"
#include "qtoda/param_point.hpp"
#include "qtoda/series.hpp"
#include "qtoda/theta.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qtoda {

// Location of the first discrepancy a check found. For series comparisons,
// "where" is the offending exponent vector, chosen smallest by (degree, lex);
// for scalar identities it is the tuple or draw index the values belong to.
struct FirstFailure {
    std::string kind; // "coefficient" or "value"
    std::vector<long> where;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    int n = 0;
    long order = 0;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    bool pass = false;
    std::optional<FirstFailure> first_failure;
    // Degree through which the comparison is exhaustive; 0 for scalar checks.
    long trusted_degree = 0;
};

nlohmann::json to_json(const CheckReport& r);

// --- low-level comparators (also the mutation-test surface) ---

// Coefficient-by-coefficient equality through min(lhs.order, rhs.order).
CheckReport series_equal_report(std::string check, const TruncatedSeries& lhs,
                                const TruncatedSeries& rhs);

// Passes iff apply(op, f) == eigenvalue * f identically through f's order.
CheckReport eigen_residual_report(std::string check, const DifferenceOperator& op,
                                  const TruncatedSeries& f);

CheckReport value_equal_report(std::string check, std::vector<long> where, const Rational& lhs,
                               const Rational& rhs);

// --- individual checks ---

// Residual of the named eigenfunction construction under its operator.
CheckReport verify_eigen(ConeType type, const ParamPoint& p, long order);

// Branching construction against the order-by-order solver.
CheckReport verify_branching(const ParamPoint& p, long order);

// Both sides of the axis-n shift identity: shifting the variant A series
// equals a weighted sum of series at one-step-lowered parameter points. The
// lowered points are re-certified; NonGenericPoint if any fails.
std::pair<TruncatedSeries, TruncatedSeries> contiguity_sides(const ParamPoint& p, long order);
CheckReport verify_contiguity(const ParamPoint& p, long order);

// prod a_i == its partial-fraction expansion over s; needs |s| = |a| + 1,
// nonzero pairwise-distinct s.
std::pair<Rational, Rational> partition_identity_sides(const std::vector<Rational>& a,
                                                       const std::vector<Rational>& s);
CheckReport verify_partition_identity(const std::vector<Rational>& a,
                                      const std::vector<Rational>& s);

// One-step recurrence of the layer weights d_toda under lowering a single
// tuple entry together with the matching parameter shift.
std::pair<Rational, Rational> dn_relation_sides(const ThetaVector& theta, const ParamPoint& p);
CheckReport verify_dn_relation(const ThetaVector& theta, const ParamPoint& p);
// Sweeps every tuple with entries in [0, max_entry].
CheckReport verify_dn_relation_all(const ParamPoint& p, long max_entry);

// One-step recurrence of the branching weights e_branch; theta must be
// nonzero.
std::pair<Rational, Rational> e_recursion_sides(const ThetaVector& theta, const ParamPoint& p);
CheckReport verify_e_recursion(const ThetaVector& theta, const ParamPoint& p);
// Sweeps every nonzero tuple with entries in [0, max_entry].
CheckReport verify_e_recursion_all(const ParamPoint& p, long max_entry);

// Spectral-side rational function identity behind the variant B eigenvalue
// matching; needs nonzero Q_i, nonzero s with s_i != s_k and s_i s_k != 1
// for i != k.
std::pair<Rational, Rational> type_b_identity_sides(const std::vector<Rational>& big_q,
                                                    const std::vector<Rational>& s);
CheckReport verify_type_b_identity(const std::vector<Rational>& big_q,
                                   const std::vector<Rational>& s);

// Direct construction against the inverted-axes construction.
CheckReport verify_symmetry(const ParamPoint& p, long order);

// --- multi-point runner ---

struct VerifySettings {
    int n = 2;
    long order = 4;
    int points = 3;
    std::uint64_t seed = 0;
    long theta_entry_bound = 3; // sweep bound for the recurrence checks
    int identity_draws = 10;    // random draws per point for scalar identities
    std::vector<std::string> checks; // empty = every check applicable at n
};

// Check names in their fixed execution order. "dn-relation" needs n >= 2.
std::vector<std::string> all_check_names(int n);

// Draws a point whose certificate also covers the derived points the checks
// visit: the reversed-inverted point and every one-step parameter lowering.
ParamPoint draw_verified_point(int n, long order_bound, std::mt19937_64& rng,
                               int max_retries = 96);

// Runs the selected checks at `points` seeded draws each, in a fixed order.
// Deterministic: identical settings give identical reports.
std::vector<CheckReport> run_verification(const VerifySettings& settings);

} // namespace qtoda
