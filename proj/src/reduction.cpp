#include "schubert/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "schubert/counting.hpp"

namespace schubert {

std::string to_string(MoveRule rule) {
    switch (rule) {
        case MoveRule::A_row: return "A_row";
        case MoveRule::B_column: return "B_column";
        case MoveRule::C_shared_line: return "C_shared_line";
        case MoveRule::D_span_restrict: return "D_span_restrict";
        case MoveRule::Trivial: return "TRIVIAL";
    }
    return "?";
}

std::string ReductionMove::to_string() const {
    std::ostringstream os;
    os << schubert::to_string(rule) << " on #" << mu_pos << " " << mu_before.to_string();
    if (nu_pos >= 0) os << ", #" << nu_pos << " " << nu_before.to_string();
    if (rule == MoveRule::C_shared_line || rule == MoveRule::D_span_restrict) os << ", i=" << i;
    if (delta) os << ", delta=" << delta;
    os << ": Gr(" << before.k << "," << before.n << ") -> Gr(" << after.k << "," << after.n << ")";
    return os.str();
}

namespace {

struct State {
    GrassContext ctx;
    std::vector<Partition> conds;

    void drop_empty() {
        std::erase_if(conds, [](const Partition& p) { return p.empty(); });
    }
    bool in_box() const {
        return std::all_of(conds.begin(), conds.end(),
                           [&](const Partition& p) { return p.fits(ctx.k, ctx.width()); });
    }
};

Partition drop_part(const Partition& p, int idx1) {
    std::vector<int> parts = p.parts();
    parts.erase(parts.begin() + (idx1 - 1));
    return Partition{std::move(parts)};
}

Partition subtract_prefix(const Partition& p, int prefix_len, int delta) {
    std::vector<int> parts = p.parts();
    for (int j = 0; j < prefix_len && j < static_cast<int>(parts.size()); ++j)
        parts[static_cast<std::size_t>(j)] -= delta;
    return Partition{std::move(parts)};
}

// Applies the move named by the violation.  Returns false when the move
// reveals an empty problem (another condition falls outside the new box).
bool apply_move(State& st, const ClauseViolation& v, std::vector<ReductionMove>& trace) {
    ReductionMove mv;
    mv.mu_pos = v.mu_pos;
    mv.nu_pos = v.nu_pos;
    mv.i = v.i;
    mv.before = st.ctx;
    mv.mu_before = st.conds[static_cast<std::size_t>(v.mu_pos)];
    if (v.nu_pos >= 0) mv.nu_before = st.conds[static_cast<std::size_t>(v.nu_pos)];

    Partition& mu = st.conds[static_cast<std::size_t>(v.mu_pos)];
    switch (v.clause) {
        case 'a': {
            mv.rule = MoveRule::A_row;
            mu = drop_part(mu, 1);
            st.ctx = GrassContext{st.ctx.k - 1, st.ctx.n - 1};
            break;
        }
        case 'b': {
            mv.rule = MoveRule::B_column;
            mv.delta = mu.part(st.ctx.k);
            mu = subtract_prefix(mu, st.ctx.k, mv.delta);
            st.ctx = GrassContext{st.ctx.k, st.ctx.n - mv.delta};
            break;
        }
        case 'c': {
            mv.rule = MoveRule::C_shared_line;
            Partition& nu = st.conds[static_cast<std::size_t>(v.nu_pos)];
            mu = drop_part(mu, v.i);
            nu = drop_part(nu, st.ctx.k + 1 - v.i);
            st.ctx = GrassContext{st.ctx.k - 1, st.ctx.n - 1};
            break;
        }
        case 'd': {
            mv.rule = MoveRule::D_span_restrict;
            Partition& nu = st.conds[static_cast<std::size_t>(v.nu_pos)];
            mv.delta = mu.part(v.i) + nu.part(st.ctx.k - v.i) - st.ctx.width();
            mu = subtract_prefix(mu, v.i, mv.delta);
            nu = subtract_prefix(nu, st.ctx.k - v.i, mv.delta);
            st.ctx = GrassContext{st.ctx.k, st.ctx.n - mv.delta};
            break;
        }
        default:
            throw std::logic_error("unknown clause");
    }
    mv.after = st.ctx;
    mv.mu_after = st.conds[static_cast<std::size_t>(v.mu_pos)];
    if (v.nu_pos >= 0) mv.nu_after = st.conds[static_cast<std::size_t>(v.nu_pos)];
    trace.push_back(std::move(mv));
    st.drop_empty();
    // A restriction move can push a third condition past the new box width;
    // its flag subspace then collapses and the problem is empty.
    return st.in_box();
}

void mark_trivial(ReduceResult& out, const State& st, const ClauseViolation* witness) {
    ReductionMove mv;
    mv.rule = MoveRule::Trivial;
    mv.before = mv.after = st.ctx;
    if (witness) {
        mv.mu_pos = witness->mu_pos;
        mv.nu_pos = witness->nu_pos;
        mv.i = witness->i;
        mv.mu_before = st.conds[static_cast<std::size_t>(witness->mu_pos)];
        if (witness->nu_pos >= 0)
            mv.nu_before = st.conds[static_cast<std::size_t>(witness->nu_pos)];
    }
    out.trace.push_back(std::move(mv));
    out.trivial = true;
    out.ctx = st.ctx;
    out.conditions = st.conds;
}

}  // namespace

ReduceResult reduce(const GrassContext& ctx, std::vector<Partition> conditions) {
    State st{ctx, std::move(conditions)};
    if (!st.in_box()) throw std::invalid_argument("condition outside box");
    st.drop_empty();
    ReduceResult out;
    // Each move strictly decreases n + sum of weights.
    long long fuel = st.ctx.n + st.ctx.dim() + 1;
    for (;;) {
        if (auto strict = find_strict_c(st.ctx, st.conds)) {
            mark_trivial(out, st, &*strict);
            return out;
        }
        auto v = find_reduction_clause(st.ctx, st.conds);
        if (!v) break;
        if (--fuel < 0) throw std::logic_error("reduction failed to terminate");
        if (!apply_move(st, *v, out.trace)) {
            mark_trivial(out, st, nullptr);
            return out;
        }
    }
    out.ctx = st.ctx;
    out.conditions = std::move(st.conds);
    assert(is_reduced(out.ctx, out.conditions));
    return out;
}

ReduceResult reduce(const SchubertProblem& sp) {
    return reduce(sp.ctx, sp.conditions);
}

ReduceResult replay_trace(const GrassContext& ctx, std::vector<Partition> conditions,
                          std::span<const ReductionMove> trace) {
    State st{ctx, std::move(conditions)};
    st.drop_empty();
    ReduceResult out;
    for (const ReductionMove& mv : trace) {
        if (mv.rule == MoveRule::Trivial) {
            out.trivial = true;
            break;
        }
        char clause = mv.rule == MoveRule::A_row          ? 'a'
                      : mv.rule == MoveRule::B_column     ? 'b'
                      : mv.rule == MoveRule::C_shared_line ? 'c'
                                                           : 'd';
        ClauseViolation v{clause, mv.mu_pos, mv.nu_pos, mv.i, false};
        if (!apply_move(st, v, out.trace)) {
            out.trivial = true;
            break;
        }
    }
    out.ctx = st.ctx;
    out.conditions = std::move(st.conds);
    return out;
}

bool is_trivial(const SchubertProblem& sp) {
    validate_problem(sp.ctx, sp.conditions);
    if (find_strict_c(sp.ctx, sp.conditions)) return true;
    return count_solutions(sp) == 0;
}

}  // namespace schubert
