#include "schubert/transitivity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schubert/counting.hpp"

namespace schubert {

bool IndexDatum::trivial() const {
    return std::all_of(sets.begin(), sets.end(), [](const auto& s) { return s.empty(); });
}

std::string IndexDatum::to_string() const {
    std::ostringstream os;
    os << "d=" << d << " S=(";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) os << ",";
        os << "{";
        for (std::size_t j = 0; j < sets[i].size(); ++j) {
            if (j) os << " ";
            os << sets[i][j];
        }
        os << "}";
    }
    os << ")";
    return os.str();
}

namespace {

void check_subset(const Partition& lambda, std::span<const int> S, int d, const GrassContext& ctx) {
    if (d < 0 || d >= ctx.k) throw std::invalid_argument("d must lie in [0, k-1]");
    if (static_cast<int>(S.size()) > d) throw std::invalid_argument("|S| must be at most d");
    int prev = 0;
    for (int j : S) {
        if (j <= prev || j > lambda.length())
            throw std::invalid_argument("S must be a sorted subset of [m]");
        prev = j;
    }
}

}  // namespace

long long excess_contribution(const Partition& lambda, std::span<const int> S, int d, int k) {
    long long total = 0;
    int seen = 0;  // |[j] ^ S| as j runs through S in increasing order
    for (int j : S) {
        ++seen;
        total += lambda.part(j) - k + d + (j - seen);
    }
    return total;
}

long long u_s_dimension(const Partition& lambda, std::span<const int> S, int d,
                        const GrassContext& ctx) {
    check_subset(lambda, S, d, ctx);
    if (lambda.part(1) >= ctx.width() || lambda.length() >= ctx.k)
        throw std::invalid_argument("lambda must be reduced-compatible");
    return flag_dimension(lambda, ctx) - 2ll * lambda.weight() +
           excess_contribution(lambda, S, d, ctx.k);
}

long long excess_lhs(const SchubertProblem& sp, const IndexDatum& idx) {
    if (idx.sets.size() != sp.conditions.size())
        throw std::invalid_argument("index datum length mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < idx.sets.size(); ++i) {
        check_subset(sp.conditions[i], idx.sets[i], idx.d, sp.ctx);
        total += excess_contribution(sp.conditions[i], idx.sets[i], idx.d, sp.ctx.k);
    }
    return total;
}

long long excess_target(const GrassContext& ctx, int d) {
    return static_cast<long long>(d) * (ctx.n - 2 * ctx.k + d);
}

bool excess_condition(const SchubertProblem& sp, const IndexDatum& idx) {
    return excess_lhs(sp, idx) == excess_target(sp.ctx, idx.d);
}

std::vector<IndexDatum> enumerate_candidates(const SchubertProblem& sp) {
    if (!is_reduced(sp)) throw std::invalid_argument("enumerate_candidates requires a reduced problem");
    const int k = sp.ctx.k;
    const int s = sp.size();
    std::vector<IndexDatum> out;

    for (int d = 0; d < k; ++d) {
        const long long target = excess_target(sp.ctx, d);
        // Per-condition subset options with their contributions.
        struct Option {
            std::vector<int> set;
            long long value;
        };
        std::vector<std::vector<Option>> options(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            const Partition& lam = sp.conditions[static_cast<std::size_t>(i)];
            const int m = lam.length();
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                if (std::popcount(mask) > d) continue;
                std::vector<int> set;
                for (int j = 1; j <= m; ++j)
                    if (mask & (1u << (j - 1))) set.push_back(j);
                long long v = excess_contribution(lam, set, d, k);
                options[static_cast<std::size_t>(i)].push_back({std::move(set), v});
            }
        }
        // Suffix bounds prune the product search.
        std::vector<long long> suf_min(static_cast<std::size_t>(s) + 1, 0);
        std::vector<long long> suf_max(static_cast<std::size_t>(s) + 1, 0);
        for (int i = s - 1; i >= 0; --i) {
            long long lo = options[static_cast<std::size_t>(i)][0].value;
            long long hi = lo;
            for (const Option& o : options[static_cast<std::size_t>(i)]) {
                lo = std::min(lo, o.value);
                hi = std::max(hi, o.value);
            }
            suf_min[static_cast<std::size_t>(i)] = lo + suf_min[static_cast<std::size_t>(i) + 1];
            suf_max[static_cast<std::size_t>(i)] = hi + suf_max[static_cast<std::size_t>(i) + 1];
        }
        std::vector<std::vector<int>> chosen(static_cast<std::size_t>(s));
        auto dfs = [&](auto&& self, int i, long long acc) -> void {
            if (acc + suf_min[static_cast<std::size_t>(i)] > target ||
                acc + suf_max[static_cast<std::size_t>(i)] < target)
                return;
            if (i == s) {
                out.push_back(IndexDatum{d, chosen});
                return;
            }
            for (const Option& o : options[static_cast<std::size_t>(i)]) {
                chosen[static_cast<std::size_t>(i)] = o.set;
                self(self, i + 1, acc + o.value);
            }
            chosen[static_cast<std::size_t>(i)].clear();
        };
        dfs(dfs, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<long long> flag_schubert_dim(std::span<const int> a, std::span<const int> b, int n) {
    const int m = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("flag types differ in length");
    for (int j = 0; j < m; ++j) {
        if (a[static_cast<std::size_t>(j)] < 1 || a[static_cast<std::size_t>(j)] > n)
            throw std::invalid_argument("flag type out of range");
        if (j && a[static_cast<std::size_t>(j)] <= a[static_cast<std::size_t>(j - 1)])
            throw std::invalid_argument("a must be strictly increasing");
        if (b[static_cast<std::size_t>(j)] < 0)
            throw std::invalid_argument("b must be nonnegative");
        if (j && b[static_cast<std::size_t>(j)] < b[static_cast<std::size_t>(j - 1)])
            throw std::invalid_argument("b must be weakly increasing");
    }
    for (int j = 0; j < m; ++j) {
        int da = a[static_cast<std::size_t>(j)] - (j ? a[static_cast<std::size_t>(j - 1)] : 0);
        int db = b[static_cast<std::size_t>(j)] - (j ? b[static_cast<std::size_t>(j - 1)] : 0);
        if (da < db) return std::nullopt;
    }
    return flag_schubert_dim_formal(a, b, n);
}

long long flag_schubert_dim_formal(std::span<const int> a, std::span<const int> b, int n) {
    long long total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        long long da = a[j] - (j ? a[j - 1] : 0);
        long long db = b[j] - (j ? b[j - 1] : 0);
        total += static_cast<long long>(n - a[j]) * (da - db);
    }
    return total;
}

long long pair_orbit_dim(const GrassContext& ctx, int d) {
    return 2ll * ctx.dim() - excess_target(ctx, d);
}

SpecialComponents special_components(int a, int d, const GrassContext& ctx) {
    if (d < 0 || d >= ctx.k) throw std::invalid_argument("d must lie in [0, k-1]");
    if (a < 1 || a > ctx.width()) throw std::invalid_argument("a must lie in [1, n-k]");
    long long na = static_cast<long long>(ctx.width() + 1 - a) * (ctx.k - 1 + a);
    SpecialComponents report;
    if (d > 0 && a + d >= ctx.k) {
        report.irreducible = false;
        report.dims = {na - 2ll * a, na - a - (ctx.k - d)};
        report.second_meets_intersection = true;
    } else {
        report.irreducible = true;
        report.dims = {na - 2ll * a};
    }
    return report;
}

bool u_s_is_nonempty(const Partition& lambda, std::span<const int> S, int d,
                     const GrassContext& ctx) {
    check_subset(lambda, S, d, ctx);
    const int m = lambda.length();
    std::vector<int> in_count(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
        in_count[static_cast<std::size_t>(j)] =
            in_count[static_cast<std::size_t>(j - 1)] +
            (std::find(S.begin(), S.end(), j) != S.end() ? 1 : 0);
    }
    // h-flags: a j-plane of H_i meeting L in exactly |[j]^S| dimensions needs
    // j + d - k <= |[j]^S| <= min(j, d).
    for (int j = 1; j <= m; ++j) {
        int c = in_count[static_cast<std::size_t>(j)];
        if (c < j + d - ctx.k || c > std::min(j, d)) return false;
    }
    // fiber over the h-flags: containment Schubert variety nonemptiness
    std::vector<int> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        a[static_cast<std::size_t>(j - 1)] = ctx.width() + j - lambda.part(j);
        b[static_cast<std::size_t>(j - 1)] = 2 * j - in_count[static_cast<std::size_t>(j)];
    }
    return flag_schubert_dim(a, b, ctx.n).has_value();
}

std::string SpecialRefutation::narrative() const {
    std::ostringstream os;
    os << "candidate " << datum.to_string() << ": excess " << lhs << " = " << target
       << "; dominance would need " << grass_dim << " >= " << codim_sum << ", forcing |T| <= " << d
       << " and then max(a) >= n-k, but max(a) = " << max_a << " <= " << reduced_bound;
    return os.str();
}

SpecialVerdict verdict_special(const SchubertProblem& sp) {
    validate_problem(sp.ctx, sp.conditions);
    std::vector<int> a_list;
    for (const Partition& c : sp.conditions) {
        if (c.length() > 1) throw std::invalid_argument("verdict_special requires a special problem");
        a_list.push_back(c.part(1));
    }
    if (!is_reduced(sp)) throw std::invalid_argument("verdict_special requires a reduced problem");
    if (count_solutions(sp) < 2)
        throw std::invalid_argument("verdict_special requires at least two solutions");

    const int k = sp.ctx.k, n = sp.ctx.n;
    const int b = std::max(0, 2 * k - n);
    SpecialVerdict verdict;
    verdict.dense_d = b;

    for (const IndexDatum& idx : enumerate_candidates(sp)) {
        if (idx.trivial()) continue;
        SpecialRefutation ref;
        ref.datum = idx;
        ref.d = idx.d;
        ref.target = excess_target(sp.ctx, idx.d);
        ref.lhs = excess_lhs(sp, idx);
        ref.grass_dim = static_cast<long long>(idx.d) * (n - idx.d);
        ref.reduced_bound = n - k - 1;
        ref.max_a = 0;
        for (std::size_t i = 0; i < idx.sets.size(); ++i) {
            if (idx.sets[i].empty()) continue;
            ref.positions.push_back(static_cast<int>(i));
            int ai = a_list[i];
            ref.codim_sum += ai + k - idx.d;
            ref.max_a = std::max(ref.max_a, ai);
        }
        // A nonempty T at the dense d is impossible: every term a_i - (k-b)
        // is negative for a reduced problem.
        if (idx.d <= b) throw std::logic_error("nontrivial candidate at dense orbit");
        verdict.refutations.push_back(std::move(ref));
    }
    verdict.doubly_transitive = true;
    return verdict;
}

CodimTableRow codim_table_row(const Partition& lambda, std::span<const int> S) {
    if (lambda.length() > 2) throw std::invalid_argument("codim table is for Gr(3,n) conditions");
    const int l1 = lambda.part(1), l2 = lambda.part(2);
    for (int j : S)
        if (j < 1 || j > lambda.length()) throw std::invalid_argument("S outside [m]");
    CodimTableRow row;
    row.S.assign(S.begin(), S.end());
    row.a = std::max(l1, l2 + 1);
    const bool has1 = std::find(S.begin(), S.end(), 1) != S.end();
    const bool has2 = std::find(S.begin(), S.end(), 2) != S.end();
    if (!has1 && !has2) {
        row.mu = Partition{};
        row.nu = Partition{row.a, row.a, l2 + 1, l2 + 1};
    } else if (has1 && !has2) {
        row.mu = Partition{l1 + 1};
        row.nu = Partition{row.a - 1, l2, l2};
    } else if (!has1 && has2) {
        row.mu = Partition{l2};
        row.nu = Partition{l1, l1, l2};
    } else {
        row.mu = Partition{l1 + 1, l2 + 1};
        row.nu = Partition{l1 - 1, l2 - 1};
    }
    return row;
}

std::string Gr3CandidateRecord::narrative() const {
    std::ostringstream os;
    os << "candidate " << datum.to_string() << ": ";
    switch (outcome) {
        case Outcome::Dominant:
            os << "unique dominant component";
            break;
        case Outcome::PrunedLineCodim:
            os << "line codim bound fails (" << line_lhs << " > " << line_rhs << ")";
            break;
        case Outcome::PrunedPairContradiction:
            os << "L/M nonemptiness would give " << s_1 + 2 * s_12 << " <= 2 and >= "
               << 3 + s_empty << " simultaneously";
            break;
    }
    return os.str();
}

Gr3Verdict verdict_gr3(const SchubertProblem& sp) {
    validate_problem(sp.ctx, sp.conditions);
    if (sp.ctx.k != 3) throw std::invalid_argument("verdict_gr3 requires Gr(3,n)");
    if (!is_reduced(sp)) throw std::invalid_argument("verdict_gr3 requires a reduced problem");
    if (count_solutions(sp) < 2)
        throw std::invalid_argument("verdict_gr3 requires at least two solutions");
    const int n = sp.ctx.n;

    Gr3Verdict verdict;
    int special_rows = 0;
    for (int i = 0; i < sp.size(); ++i)
        if (sp.conditions[static_cast<std::size_t>(i)].part(2) == n - 4) {
            ++special_rows;
            verdict.special_row_pos = i;
        }
    if (special_rows > 1)
        throw std::invalid_argument("reduced Gr(3,n) problems admit at most one condition with "
                                    "lambda_2 = n-4");
    verdict.d0_dominant = special_rows == 0;

    for (const IndexDatum& idx : enumerate_candidates(sp)) {
        if (idx.d == 0) continue;  // the trivial datum; dominant iff d0_dominant
        Gr3CandidateRecord rec;
        rec.datum = idx;
        for (std::size_t i = 0; i < idx.sets.size(); ++i) {
            const Partition& lam = sp.conditions[i];
            const auto& S = idx.sets[i];
            const bool has1 = std::find(S.begin(), S.end(), 1) != S.end();
            const bool has2 = std::find(S.begin(), S.end(), 2) != S.end();
            if (!has1 && !has2)
                rec.s_empty++;
            else if (has1 && !has2)
                rec.s_1++;
            else if (!has1 && has2)
                rec.s_2++;
            else
                rec.s_12++;
            if (idx.d == 1) {
                if (has1) rec.line_lhs += lam.part(1) + 2;
                if (has2) rec.line_lhs += lam.part(2) + 1;
            } else {
                if (has1 && !has2) {
                    rec.l_lhs += lam.part(1) + 1;
                    rec.m_lhs += lam.part(1) + 2 * lam.part(2) - 1;
                } else if (!has1 && has2) {
                    rec.l_lhs += lam.part(2);
                    rec.m_lhs += 2 * lam.part(1) + lam.part(2);
                } else if (has1 && has2) {
                    rec.l_lhs += lam.part(1) + lam.part(2) + 2;
                    rec.m_lhs += lam.part(1) + lam.part(2) - 2;
                } else {
                    rec.m_lhs += 2 * (lam.part(1) + lam.part(2) + 1);
                }
            }
        }
        if (idx.d == 1) {
            rec.line_rhs = n - 1;
            if (rec.line_lhs > rec.line_rhs) {
                rec.outcome = Gr3CandidateRecord::Outcome::PrunedLineCodim;
            } else {
                // survivor: the unique S_2-singleton at the lambda_2 = n-4 row
                if (!(rec.s_1 == 0 && rec.s_2 == 1 && rec.s_12 == 0))
                    throw std::logic_error("unexpected d=1 candidate survives the line bound");
                rec.outcome = Gr3CandidateRecord::Outcome::Dominant;
                verdict.d1_survivor = idx;
            }
        } else {
            rec.l_rhs = 2 * (n - 2);
            rec.m_rhs = 4ll * (n - 4);
            rec.outcome = Gr3CandidateRecord::Outcome::PrunedPairContradiction;
        }
        verdict.records.push_back(std::move(rec));
    }

    if (verdict.d0_dominant == verdict.d1_survivor.has_value())
        throw std::logic_error("expected exactly one dominant component");
    if (verdict.d1_survivor) {
        const auto& sets = verdict.d1_survivor->sets;
        for (int i = 0; i < sp.size(); ++i) {
            bool expect = i == verdict.special_row_pos;
            bool got = !sets[static_cast<std::size_t>(i)].empty();
            if (expect != got || (got && sets[static_cast<std::size_t>(i)] != std::vector<int>{2}))
                throw std::logic_error("d=1 survivor does not match the lambda_2 = n-4 row");
        }
    }
    verdict.doubly_transitive = true;
    return verdict;
}

}  // namespace schubert
