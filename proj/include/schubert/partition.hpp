#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// Partition in the sense of Schubert calculus: a weakly decreasing list of
/// nonnegative integers, stored with trailing zeros stripped.  Part indices
/// in formulas are 1-based; part(j) returns 0 past the end, so a partition
/// can be read as padded with zeros to any length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition single_row(int a);
    static Partition rectangle(int rows, int width);

    /// 1-based part access; returns 0 for j > length().
    int part(int j) const {
        return (j >= 1 && j <= static_cast<int>(parts_.size())) ? parts_[j - 1] : 0;
    }

    /// Number of nonzero parts (the index m of the last nonzero part).
    int length() const { return static_cast<int>(parts_.size()); }

    /// |lambda| = sum of parts.
    int weight() const;

    bool empty() const { return parts_.empty(); }

    /// Conjugate partition (interchange rows and columns of the diagram).
    Partition transpose() const;

    /// True when the diagram fits in a rows x width box.
    bool fits(int rows, int width) const;

    const std::vector<int>& parts() const { return parts_; }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Grassmannian Gr(k,n) of k-planes in n-space.  User-facing contexts have
/// 0 < k < n; the degenerate point Grassmannians k = 0 and k = n are allowed
/// so that reduction chains can terminate at a single-point problem.
struct GrassContext {
    int k = 0;
    int n = 0;

    int width() const { return n - k; }        // box width for conditions
    int dim() const { return k * (n - k); }
    bool valid() const { return 0 <= k && k <= n && n >= 1; }
    bool is_point() const { return k == 0 || k == n; }

    auto operator<=>(const GrassContext&) const = default;
};

/// A Schubert problem: an ordered list of conditions on Gr(k,n) whose
/// codimensions sum to k(n-k).  Condition lists that are still being built
/// (codimension-incomplete) are handled as plain vectors; constructing a
/// SchubertProblem validates the full invariant.
struct SchubertProblem {
    GrassContext ctx;
    std::vector<Partition> conditions;

    SchubertProblem() = default;
    SchubertProblem(GrassContext c, std::vector<Partition> conds);

    int size() const { return static_cast<int>(conditions.size()); }

    /// Sorted copy of the conditions, for deduplication keys.
    std::vector<Partition> sorted_key() const;

    std::string to_notation() const;

    bool operator==(const SchubertProblem&) const = default;
};

/// Throws std::invalid_argument unless every condition fits the box and the
/// codimensions sum to k(n-k).
void validate_problem(const GrassContext& ctx, std::span<const Partition> conditions);

/// N(lambda): dimension of the partial flag manifold Fl(lambda, V) carrying
/// the Schubert conditions of type lambda on Gr(k,n).
long long flag_dimension(const Partition& lambda, const GrassContext& ctx);

/// The dual problem on Gr(n-k, n): every condition transposed.  An involution
/// that preserves solution counts.
SchubertProblem dualize(const SchubertProblem& sp);

/// One clause of the reducedness definition, with its witnesses.  Positions
/// are 0-based indices into the condition list; i is the 1-based part index
/// of the clause.  For clauses (a) and (b) only mu_pos is meaningful.
struct ClauseViolation {
    char clause = 0;                 // 'a', 'b', 'c' or 'd'
    int mu_pos = -1;
    int nu_pos = -1;
    int i = 0;
    bool strict = false;             // clause (c): sum strictly above n-k
    std::string to_string() const;
};

/// First violated reducedness clause, scanning (a), (b), (c), (d) in order,
/// conditions and ordered pairs in list order, smallest i first.  Empty when
/// the list is reduced.  Works on incomplete condition lists.
std::optional<ClauseViolation> find_reduction_clause(const GrassContext& ctx,
                                                     std::span<const Partition> conditions);

/// Clause (c) with strict inequality anywhere means the problem is empty.
std::optional<ClauseViolation> find_strict_c(const GrassContext& ctx,
                                             std::span<const Partition> conditions);

bool is_reduced(const GrassContext& ctx, std::span<const Partition> conditions);
bool is_reduced(const SchubertProblem& sp);

// --- text and JSON interfaces ------------------------------------------

/// Parses "k,n: (p1,p2,...)^e*(q1,...)^f*..." (exponents optional).
SchubertProblem parse_problem(const std::string& text);

/// Parses the condition part only, given a context.
std::vector<Partition> parse_conditions(const std::string& text);

std::string to_json_string(const SchubertProblem& sp);
SchubertProblem problem_from_json_string(const std::string& text);

}  // namespace schubert
