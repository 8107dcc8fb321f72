#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// The four reduction moves, plus the marker for problems detected empty.
enum class MoveRule { A_row, B_column, C_shared_line, D_span_restrict, Trivial };

std::string to_string(MoveRule rule);

/// One applied move with enough data to replay it.
struct ReductionMove {
    MoveRule rule;
    int mu_pos = -1;          // condition index before the move
    int nu_pos = -1;          // second condition for (c)/(d)
    int i = 0;                // 1-based part index for (c)/(d)
    int delta = 0;            // amount subtracted by (b)/(d)
    GrassContext before, after;
    Partition mu_before, nu_before, mu_after, nu_after;
    std::string to_string() const;
};

struct ReduceResult {
    GrassContext ctx;
    std::vector<Partition> conditions;   // empty partitions dropped
    std::vector<ReductionMove> trace;
    bool trivial = false;                // r = 0 detected

    bool is_point() const { return !trivial && ctx.is_point(); }
    SchubertProblem as_problem() const { return SchubertProblem{ctx, conditions}; }
};

/// Applies moves (a)-(d) until none fires, scanning clauses in order,
/// conditions and ordered pairs in list order, smallest i first.  The output
/// passes is_reduced, or is flagged trivial.  Accepts codimension-incomplete
/// condition lists (builder states); solution counts are preserved only for
/// complete problems.
ReduceResult reduce(const GrassContext& ctx, std::vector<Partition> conditions);
ReduceResult reduce(const SchubertProblem& sp);

/// Replays a trace against the original input; used to audit traces.
ReduceResult replay_trace(const GrassContext& ctx, std::vector<Partition> conditions,
                          std::span<const ReductionMove> trace);

/// True iff r(lambda) = 0.  Fast path: strict clause (c) violation; otherwise
/// decided by count_solutions.
bool is_trivial(const SchubertProblem& sp);

}  // namespace schubert
