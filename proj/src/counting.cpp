#include "schubert/counting.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

// Backtracking count of Littlewood-Richardson skew tableaux of shape
// lambda/mu with content nu.  Cells are visited in reading-word order (each
// row right to left, rows top to bottom) so the lattice condition is a
// running counter invariant.
struct SkewLrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<int> counts;              // letters placed so far, per value
    std::vector<std::vector<int>> fill;   // fill[r][c] value, 0 = empty, 1-based letters
    unsigned long total = 0;

    SkewLrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n), counts(static_cast<std::size_t>(n.length()) + 1, 0) {
        fill.resize(static_cast<std::size_t>(l.length()));
        for (int r = 1; r <= l.length(); ++r)
            fill[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(l.part(r)), 0);
    }

    int cell_value(int r, int c) const {  // 1-based coordinates
        return fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    }

    void place(int r, int c) {
        // next cell in reading order after (r, c)
        int nr = r, nc = c - 1;
        if (nc <= mu.part(r)) {
            nr = r + 1;
            nc = lambda.part(r + 1);
        }
        while (nr <= lambda.length() && nc <= mu.part(nr)) {
            ++nr;
            nc = lambda.part(nr);
        }
        const bool last = nr > lambda.length();

        int hi = nu.length();
        if (c + 1 <= lambda.part(r) && c + 1 > mu.part(r))
            hi = std::min(hi, cell_value(r, c + 1));  // weakly increasing along the row
        for (int v = 1; v <= hi; ++v) {
            if (counts[static_cast<std::size_t>(v)] >= nu.part(v)) continue;
            // lattice: after placing v, #v must not exceed #(v-1)
            if (v > 1 && counts[static_cast<std::size_t>(v)] + 1 > counts[static_cast<std::size_t>(v - 1)])
                continue;
            // strict increase down the column (only against skew cells)
            if (r > 1 && c <= lambda.part(r - 1) && c > mu.part(r - 1) && cell_value(r - 1, c) >= v)
                continue;
            counts[static_cast<std::size_t>(v)]++;
            fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
            if (last)
                ++total;
            else
                place(nr, nc);
            fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 0;
            counts[static_cast<std::size_t>(v)]--;
        }
    }

    unsigned long run() {
        int r = 1;
        while (r <= lambda.length() && lambda.part(r) <= mu.part(r)) ++r;
        if (r > lambda.length()) return nu.empty() ? 1ul : 0ul;
        place(r, lambda.part(r));
        return total;
    }
};

bool contains(const Partition& lambda, const Partition& mu) {
    for (int j = 1; j <= mu.length(); ++j)
        if (lambda.part(j) < mu.part(j)) return false;
    return true;
}

// All partitions of the given weight inside a rows x width box containing mu.
void partitions_over(const Partition& mu, int weight, int rows, int width,
                     std::vector<int>& acc, int row, std::vector<Partition>& out) {
    if (weight == 0 && row > mu.length()) {
        std::vector<int> parts = acc;
        out.push_back(Partition{std::move(parts)});
        return;
    }
    if (row > rows) return;
    int hi = row == 1 ? width : acc[static_cast<std::size_t>(row - 2)];
    hi = std::min(hi, weight + mu.part(row));
    for (int v = hi; v >= mu.part(row); --v) {
        if (v == 0 && weight > 0) break;
        int used = v - mu.part(row);
        if (used > weight) continue;
        acc.push_back(v);
        partitions_over(mu, weight - used, rows, width, acc, row + 1, out);
        acc.pop_back();
        if (v == 0) break;
    }
}

struct LrKey {
    int rows, width;
    Partition a, b;
    auto operator<=>(const LrKey&) const = default;
};

std::map<LrKey, std::vector<std::pair<Partition, unsigned long>>> lr_memo;
std::mutex lr_memo_mutex;

}  // namespace

unsigned long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(lambda, mu)) return 0;
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    SkewLrCounter counter(lambda, mu, nu);
    return counter.run();
}

const std::vector<std::pair<Partition, unsigned long>>& lr_product(const Partition& mu,
                                                                   const Partition& nu, int rows,
                                                                   int width) {
    LrKey key{rows, width, std::min(mu, nu), std::max(mu, nu)};
    {
        std::lock_guard<std::mutex> lock(lr_memo_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    std::vector<std::pair<Partition, unsigned long>> result;
    std::vector<Partition> candidates;
    std::vector<int> acc;
    partitions_over(key.a, key.b.weight(), rows, width, acc, 1, candidates);
    for (const Partition& lambda : candidates) {
        unsigned long c = lr_coefficient(lambda, key.a, key.b);
        if (c) result.emplace_back(lambda, c);
    }
    std::lock_guard<std::mutex> lock(lr_memo_mutex);
    return lr_memo.emplace(std::move(key), std::move(result)).first->second;
}

ClassExpansion multiply_conditions(const GrassContext& ctx, std::span<const Partition> conditions) {
    ClassExpansion state;
    state[Partition{}] = 1;
    for (const Partition& cond : conditions) {
        if (!cond.fits(ctx.k, ctx.width()))
            throw std::invalid_argument("condition outside box: " + cond.to_string());
        ClassExpansion next;
        for (const auto& [key, coef] : state)
            for (const auto& [lambda, m] : lr_product(key, cond, ctx.k, ctx.width()))
                next[lambda] += coef * m;
        state = std::move(next);
    }
    return state;
}

Count count_solutions(const SchubertProblem& sp) {
    validate_problem(sp.ctx, sp.conditions);
    ClassExpansion prod = multiply_conditions(sp.ctx, sp.conditions);
    auto it = prod.find(Partition::rectangle(sp.ctx.k, sp.ctx.width()));
    return it == prod.end() ? Count{0} : it->second;
}

Count kostka(const KostkaQuery& q) {
    long long sum = std::accumulate(q.content.begin(), q.content.end(), 0ll);
    if (sum != 2ll * q.row_len)
        throw std::invalid_argument("Kostka content does not sum to twice the row length");
    for (int a : q.content)
        if (a <= 0) return 0;
    const int c = q.row_len;
    if (c == 0) return 1;
    // dp[r2] = number of partial fillings with rows filled to (r1, r2),
    // where r1 is determined by the running content total.
    std::vector<Count> dp(static_cast<std::size_t>(c) + 1);
    dp[0] = 1;
    long long filled = 0;
    for (int a : q.content) {
        std::vector<Count> next(static_cast<std::size_t>(c) + 1);
        for (int r2 = 0; r2 <= c; ++r2) {
            if (dp[static_cast<std::size_t>(r2)] == 0) continue;
            long long r1 = filled - r2;
            if (r1 < r2 || r1 > c) continue;
            // split a into x cells for row 1 and y for row 2; row-2 cells of
            // this letter must sit under strictly earlier letters: r2+y <= r1
            for (int y = 0; y <= a; ++y) {
                int x = a - y;
                long long n1 = r1 + x, n2 = r2 + y;
                if (n1 > c || n2 > c) continue;
                if (n2 > r1) break;
                next[static_cast<std::size_t>(n2)] += dp[static_cast<std::size_t>(r2)];
            }
        }
        dp = std::move(next);
        filled += a;
    }
    return dp[static_cast<std::size_t>(c)];
}

Count kostka(std::span<const int> content) {
    long long sum = 0;
    for (int a : content) {
        if (a <= 0) return 0;
        sum += a;
    }
    if (sum % 2) return 0;
    return kostka(KostkaQuery{static_cast<int>(sum / 2),
                              std::vector<int>(content.begin(), content.end())});
}

Count kostka_for_gr2(const SchubertProblem& sp) {
    if (sp.ctx.k != 2) throw std::invalid_argument("kostka_for_gr2 requires Gr(2,n)");
    std::vector<int> content;
    for (const Partition& cond : sp.conditions) {
        if (cond.length() > 1)
            throw std::invalid_argument("kostka_for_gr2 requires special conditions");
        if (!cond.empty()) content.push_back(cond.part(1));
    }
    return kostka(KostkaQuery{sp.ctx.n - 2, std::move(content)});
}

Count kostka_closed_form(KostkaClosedForm form, int a, int s) {
    if (a <= 0) throw std::invalid_argument("closed form requires a >= 1");
    const bool needs_even = form == KostkaClosedForm::ThreeRows ||
                            form == KostkaClosedForm::ThreeRowsPlusDouble ||
                            form == KostkaClosedForm::ThreeRowsDecrement;
    if (needs_even && a % 2) throw std::invalid_argument("closed form requires even a");
    switch (form) {
        case KostkaClosedForm::TwoRowsPlusDouble:
        case KostkaClosedForm::ThreeRows:
            return 1;
        case KostkaClosedForm::FourRows:
            return a + 1;
        case KostkaClosedForm::ThreeRowsPlusDouble:
            return a / 2 + 1;
        case KostkaClosedForm::ThreeRowsDecrement: {
            Count b = a / 2;
            return (5 * b * b + 3 * b) / 2;
        }
        case KostkaClosedForm::FourRowsPlusDouble:
            return Count{a + 2} * (a + 1) / 2;
        case KostkaClosedForm::GrowthLowerBound: {
            if (s < 7) throw std::invalid_argument("growth bound requires s >= 7");
            if ((static_cast<long long>(a) * s) % 2)
                throw std::invalid_argument("growth bound requires even a*s");
            std::vector<int> tail(static_cast<std::size_t>(s - 4), a);
            Count plain = kostka(tail);
            tail.push_back(2 * a);
            Count merged = kostka(tail);
            return Count{a + 1} * merged + plain;
        }
    }
    throw std::logic_error("unreachable");
}

bool injection_inequality_check(std::span<const int> content) {
    const int s = static_cast<int>(content.size());
    if (s < 4) throw std::invalid_argument("injection inequality needs at least four conditions");
    long long sum = 0;
    for (int a : content) {
        if (a <= 0) throw std::invalid_argument("content parts must be positive");
        sum += a;
    }
    if (sum % 2) throw std::invalid_argument("content must have even sum");
    const int n = static_cast<int>(sum / 2) + 2;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (content[static_cast<std::size_t>(i)] + content[static_cast<std::size_t>(j)] > n - 2)
                throw std::invalid_argument("problem is not reduced on Gr(2,n)");
    int x = content[static_cast<std::size_t>(s - 3)];
    int y = content[static_cast<std::size_t>(s - 2)];
    int z = content[static_cast<std::size_t>(s - 1)];
    if (!(x <= y && y <= z && x < z))
        throw std::invalid_argument("ordering hypothesis a_{s-2} <= a_{s-1} <= a_s, a_{s-2} < a_s fails");
    std::vector<int> merged_last(content.begin(), content.end() - 3);
    merged_last.push_back(x);
    merged_last.push_back(y + z);
    std::vector<int> merged_first(content.begin(), content.end() - 3);
    merged_first.push_back(z);
    merged_first.push_back(x + y);
    return kostka(merged_last) < kostka(merged_first);
}

}  // namespace schubert
