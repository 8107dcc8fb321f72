#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schubert/partition.hpp"

namespace schubert {

/// Index datum (S, d) of a candidate pairs-space component: d = dim H1^H2,
/// sets[i] is the subset S^i of [m_i] (1-based, sorted) for condition i.
struct IndexDatum {
    int d = 0;
    std::vector<std::vector<int>> sets;

    bool trivial() const;                // all S^i empty
    std::string to_string() const;
    auto operator<=>(const IndexDatum&) const = default;
};

/// dim U_S(lambda, H1, H2) = N(lambda) - 2|lambda| + sum_{j in S}
/// (lambda_j - k + d + |[j] \ S|).  Requires S subset of [m], |S| <= d < k,
/// and lambda reduced-compatible (lambda_1 < n-k, lambda_k = 0).
long long u_s_dimension(const Partition& lambda, std::span<const int> S, int d,
                        const GrassContext& ctx);

/// The per-condition summand of the excess condition.
long long excess_contribution(const Partition& lambda, std::span<const int> S, int d, int k);

long long excess_lhs(const SchubertProblem& sp, const IndexDatum& idx);
long long excess_target(const GrassContext& ctx, int d);     // d(n - 2k + d)

/// Eq:Excess — dim C_{S,d} equals dim Y iff this holds.
bool excess_condition(const SchubertProblem& sp, const IndexDatum& idx);

/// All (S, d) with 0 <= d <= k-1 satisfying the excess condition, for a
/// reduced problem.  Always contains the trivial all-empty datum at d = 0.
/// Ordered by d, then lexicographically.
std::vector<IndexDatum> enumerate_candidates(const SchubertProblem& sp);

/// Dimension of the containment Schubert variety {F : l_{b_j} in F_{a_j}} in
/// the flag variety of type a inside n-space; nullopt when the emptiness
/// criterion a_j - a_{j-1} >= b_j - b_{j-1} fails.
std::optional<long long> flag_schubert_dim(std::span<const int> a, std::span<const int> b, int n);

/// Same formula evaluated without the emptiness gate (boundary strata can be
/// nonempty with the formal value still correct; used by consistency tests).
long long flag_schubert_dim_formal(std::span<const int> a, std::span<const int> b, int n);

/// dim of the open locus O_d in Gr(k,n)^2 where dim H1^H2 = d.
long long pair_orbit_dim(const GrassContext& ctx, int d);

/// Decomposition of Psi_a H1 ^ Psi_a H2 for a special condition, per the
/// two-component lemma.
struct SpecialComponents {
    bool irreducible = false;
    std::vector<long long> dims;              // one or two entries
    bool second_meets_intersection = false;    // flagged K ^ H1 ^ H2 != 0
};
SpecialComponents special_components(int a, int d, const GrassContext& ctx);

/// Mechanical refutation of one nontrivial candidate (T, d) of a special
/// problem: dominance would force |T| <= d and then max a_i >= n-k, against
/// reducedness.  All quantities are recorded.
struct SpecialRefutation {
    IndexDatum datum;
    std::vector<int> positions;     // T, 0-based
    int d = 0;
    long long lhs = 0;              // sum over T of (a_i - k + d) = target
    long long target = 0;
    long long codim_sum = 0;        // sum over T of (a_i + k - d)
    long long grass_dim = 0;        // d(n - d)
    int max_a = 0;                  // A
    int reduced_bound = 0;          // n - k - 1
    std::string narrative() const;
};

struct SpecialVerdict {
    bool doubly_transitive = false;
    int dense_d = 0;                // b = max(0, 2k-n)
    std::vector<SpecialRefutation> refutations;
};

/// Theorem-grade verdict for reduced special problems with r >= 2.
SpecialVerdict verdict_special(const SchubertProblem& sp);

/// Row of the position table for k = 3, d = 2: the conditions mu (on the
/// line L = H1^H2) and nu (on M = <H1,H2>) forced by membership in U_S.
struct CodimTableRow {
    std::vector<int> S;
    Partition mu, nu;
    int a = 0;                      // max(lambda_1, lambda_2 + 1)
};
CodimTableRow codim_table_row(const Partition& lambda, std::span<const int> S);

/// Disposition of one Gr(3,n) candidate during the verdict.
struct Gr3CandidateRecord {
    IndexDatum datum;
    enum class Outcome { Dominant, PrunedLineCodim, PrunedPairContradiction } outcome;
    // d = 1: codim bound on the shared line (Eq. n-1 >= sum ...)
    long long line_lhs = 0, line_rhs = 0;
    // d = 2: the two incompatible derived inequalities
    long long l_lhs = 0, l_rhs = 0;        // L-intersection nonemptiness
    long long m_lhs = 0, m_rhs = 0;        // M-intersection nonemptiness
    int s_empty = 0, s_1 = 0, s_2 = 0, s_12 = 0;
    std::string narrative() const;
};

struct Gr3Verdict {
    bool doubly_transitive = false;
    int special_row_pos = -1;       // condition with lambda_2 = n-4, or -1
    bool d0_dominant = false;       // true iff no lambda_2 = n-4
    std::optional<IndexDatum> d1_survivor;
    std::vector<Gr3CandidateRecord> records;
};

/// Theorem-grade verdict for reduced Gr(3,n) problems with r >= 2, following
/// the d = 0, 1, 2 case analysis.
Gr3Verdict verdict_gr3(const SchubertProblem& sp);

/// Nonemptiness of U_S: the membership constraints on the h-flags and the
/// fiber are both satisfiable.
bool u_s_is_nonempty(const Partition& lambda, std::span<const int> S, int d,
                     const GrassContext& ctx);

}  // namespace schubert
