#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schubert/partition.hpp"

namespace schubert {

/// Exact solution counts; enumeration-scale products can outgrow machine
/// words on larger Grassmannians, so counts are arbitrary precision.
using Count = mpz_class;

/// Formal nonnegative combination of Schubert classes inside a fixed box.
using ClassExpansion = std::map<Partition, Count>;

/// Littlewood-Richardson coefficient c^lambda_{mu nu} by lattice-word skew
/// tableau enumeration.  No box constraint; lambda must contain mu.
unsigned long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Expansion of s_mu * s_nu truncated to the rows x width box.  Memoized per
/// box; safe to call concurrently.
const std::vector<std::pair<Partition, unsigned long>>& lr_product(const Partition& mu,
                                                                   const Partition& nu, int rows,
                                                                   int width);

/// Product of the classes of all conditions, truncated to the context box.
ClassExpansion multiply_conditions(const GrassContext& ctx, std::span<const Partition> conditions);

/// r(lambda): number of solutions of the Schubert problem for general flags,
/// i.e. the coefficient of the full-box class in the product of the
/// condition classes.
Count count_solutions(const SchubertProblem& sp);

/// Kostka numbers K(a_1,...,a_s) for two-row shapes (row_len, row_len).
struct KostkaQuery {
    int row_len = 0;                 // n-2 for a problem on Gr(2,n)
    std::vector<int> content;        // (a_1,...,a_s)
};

/// Number of semistandard tableaux of shape (row_len, row_len) with the
/// given content.  Throws when the content does not sum to 2*row_len.
/// Contents with a nonpositive part count zero tableaux.
Count kostka(const KostkaQuery& q);

/// Shape inferred from the content sum; zero for odd sums or invalid parts.
Count kostka(std::span<const int> content);

/// Solution count of the special problem (a_1,...,a_s) on Gr(2,n) as a
/// Kostka number.
Count kostka_for_gr2(const SchubertProblem& sp);

/// The closed forms for Kostka numbers of near-constant content.
enum class KostkaClosedForm {
    TwoRowsPlusDouble,    // K(a^2, 2a) = 1
    ThreeRows,            // K(a^3) = 1, a even
    FourRows,             // K(a^4) = a + 1
    ThreeRowsPlusDouble,  // K(a^3, 2a) = b + 1, a = 2b
    ThreeRowsDecrement,   // K(a^3, a-1, a-1) = (5b^2 + 3b)/2, a = 2b
    FourRowsPlusDouble,   // K(a^4, 2a) = binomial(a+2, 2)
    GrowthLowerBound,     // (a+1) K(a^{s-4}, 2a) + K(a^{s-4}), s >= 7
};

/// Evaluates one closed form; s is used only by GrowthLowerBound.  Throws on
/// hypothesis violations (nonpositive a, odd a where evenness is required,
/// s < 7 for the growth bound).
Count kostka_closed_form(KostkaClosedForm form, int a, int s = 0);

/// Strict inequality K(a_1,...,a_{s-2}, a_{s-1}+a_s) <
/// K(a_1,...,a_{s-3}, a_s, a_{s-2}+a_{s-1}) for a reduced special problem on
/// Gr(2,n) ordered so that a_{s-2} <= a_{s-1} <= a_s with a_{s-2} < a_s.
/// Throws when the ordering hypothesis fails.  Computes both sides.
bool injection_inequality_check(std::span<const int> content);

}  // namespace schubert
