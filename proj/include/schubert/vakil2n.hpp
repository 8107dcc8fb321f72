#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubert/counting.hpp"
#include "schubert/partition.hpp"

namespace schubert {

/// How a certificate node discharges its at-least-alternating obligation.
enum class CertRule {
    BaseRankLeOne,        // r <= 1, nothing to prove
    CriterionB,           // two children, r1 != r2 or r1 = r2 = 1
    CriterionC,           // two children, one count differs from 6, parent 2-transitive
    ClosedFormEqualParts, // all parts equal; the merge/decrement counts come from closed forms
    PassThrough,          // one recursion child is empty; group embeds via the other
};

std::string to_string(CertRule rule);

/// Node of a certificate DAG.  A problem on Gr(2,n) is stored as its content
/// list (the special condition rows), kept sorted ascending; children are the
/// two degeneration outcomes, each reduced before being certified.
struct CertNode {
    int n = 0;
    std::vector<int> content;        // sorted ascending
    Count r;
    CertRule rule = CertRule::BaseRankLeOne;
    bool reordered = false;          // proof ordering needed the alternate pivot
    std::vector<int> merge_content;  // raw child contents before reduction
    std::vector<int> dec_content;
    Count r_merge, r_dec;
    int merge_child = -1;            // node indices, -1 for absent/empty child
    int dec_child = -1;
    bool alternating = false;
};

struct Certificate {
    std::vector<CertNode> nodes;
    int root = -1;

    const CertNode& root_node() const { return nodes.at(static_cast<std::size_t>(root)); }
    bool ok() const { return root >= 0 && root_node().alternating; }
    int depth() const;
};

/// Schubert's degeneration applied at the two content positions given by
/// pivot (0-based): returns the merge child (a_i + a_j appended) and the
/// decrement child (a_i - 1, a_j - 1), zero parts dropped, both passed
/// through reduction.  Counts satisfy K(parent) = K(merge) + K(dec).
struct RecursionChildren {
    std::vector<int> merge_raw, dec_raw;    // contents before reduction
    SchubertProblem merge_reduced, dec_reduced;  // valid only when count > 0
    Count r_merge, r_dec;
    bool merge_nonzero = false, dec_nonzero = false;
};
RecursionChildren recursion_children(const SchubertProblem& sp, std::pair<int, int> pivot);

/// Certifies that a reduced problem on Gr(2,n) has at-least-alternating
/// Galois group, replaying the recursion case analysis.  Throws on
/// non-reduced or non-Gr(2,n) input.
Certificate certify_alternating(const SchubertProblem& sp);

/// All reduced Schubert problems on Gr(2,n) as content multisets (weakly
/// decreasing), i.e. contents with sum 2(n-2) and pairwise sums <= n-2.
std::vector<std::vector<int>> reduced_gr2_contents(int n);

SchubertProblem gr2_problem(int n, std::span<const int> content);

}  // namespace schubert
