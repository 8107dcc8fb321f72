#include "schubert/vakil2n.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schubert/reduction.hpp"

namespace schubert {

std::string to_string(CertRule rule) {
    switch (rule) {
        case CertRule::BaseRankLeOne: return "BASE_R_LE_1";
        case CertRule::CriterionB: return "CRITERION_B";
        case CertRule::CriterionC: return "CRITERION_C";
        case CertRule::ClosedFormEqualParts: return "CLOSED_FORM_EQUAL_PARTS";
        case CertRule::PassThrough: return "PASS_THROUGH";
    }
    return "?";
}

int Certificate::depth() const {
    std::vector<int> depth(nodes.size(), -1);
    auto rec = [&](auto&& self, int idx) -> int {
        if (idx < 0) return 0;
        auto& d = depth[static_cast<std::size_t>(idx)];
        if (d >= 0) return d;
        const CertNode& node = nodes[static_cast<std::size_t>(idx)];
        d = 1 + std::max(self(self, node.merge_child), self(self, node.dec_child));
        return d;
    };
    return rec(rec, root);
}

SchubertProblem gr2_problem(int n, std::span<const int> content) {
    std::vector<Partition> conds;
    for (int a : content) conds.push_back(Partition::single_row(a));
    return SchubertProblem{GrassContext{2, n}, std::move(conds)};
}

std::vector<std::vector<int>> reduced_gr2_contents(int n) {
    std::vector<std::vector<int>> out;
    if (n < 4) return out;
    const int total = 2 * (n - 2);
    const int cap = n - 3;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int lo) -> void {
        if (remaining == 0) {
            // pairwise bound: the two largest parts must fit one Gr(2,n) pair
            int s = static_cast<int>(acc.size());
            if (s >= 1 && (s < 2 || acc[static_cast<std::size_t>(s - 1)] +
                                         acc[static_cast<std::size_t>(s - 2)] <= n - 2))
                out.push_back(acc);
            return;
        }
        for (int a = lo; a <= std::min(cap, remaining); ++a) {
            if (!acc.empty() && acc.back() + a > n - 2) break;
            acc.push_back(a);
            self(self, remaining - a, a);
            acc.pop_back();
        }
    };
    rec(rec, total, 1);
    return out;
}

namespace {

std::vector<int> sorted_contents(const SchubertProblem& sp) {
    std::vector<int> content;
    for (const Partition& c : sp.conditions) {
        if (c.length() > 1)
            throw std::invalid_argument("problem on Gr(2,n) must be special");
        if (!c.empty()) content.push_back(c.part(1));
    }
    std::sort(content.begin(), content.end());
    return content;
}

struct ChildOutcome {
    std::vector<int> raw;
    Count r;
    bool in_box = false;
};

ChildOutcome make_child(int n, std::vector<int> raw) {
    std::sort(raw.begin(), raw.end());
    ChildOutcome c;
    c.r = kostka(raw);
    c.in_box = std::all_of(raw.begin(), raw.end(), [&](int a) { return a <= n - 2; });
    c.raw = std::move(raw);
    return c;
}

// Degeneration children from the content list with the pivot elements at
// positions i < j removed.
std::pair<ChildOutcome, ChildOutcome> children_for(int n, const std::vector<int>& content, int i,
                                                   int j) {
    std::vector<int> rest;
    for (int t = 0; t < static_cast<int>(content.size()); ++t)
        if (t != i && t != j) rest.push_back(content[static_cast<std::size_t>(t)]);
    int x = content[static_cast<std::size_t>(i)], y = content[static_cast<std::size_t>(j)];
    std::vector<int> merge = rest;
    merge.push_back(x + y);
    std::vector<int> dec = rest;
    if (x - 1 > 0) dec.push_back(x - 1);
    if (y - 1 > 0) dec.push_back(y - 1);
    return {make_child(n, std::move(merge)), make_child(n - 1, std::move(dec))};
}

struct Builder {
    Certificate cert;
    std::map<std::pair<int, std::vector<int>>, int> memo;

    int certify(int n, std::vector<int> content);
};

int Builder::certify(int n, std::vector<int> content) {
    std::sort(content.begin(), content.end());
    auto key = std::make_pair(n, content);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    CertNode node;
    node.n = n;
    node.content = content;
    node.r = kostka(content);
    const int idx = static_cast<int>(cert.nodes.size());
    cert.nodes.push_back(node);
    memo.emplace(std::move(key), idx);

    auto finish = [&](CertNode&& done) {
        cert.nodes[static_cast<std::size_t>(idx)] = std::move(done);
        return idx;
    };

    if (node.r <= 1) {
        node.rule = CertRule::BaseRankLeOne;
        node.alternating = true;
        return finish(std::move(node));
    }

    const int s = static_cast<int>(content.size());
    const bool all_equal = content.front() == content.back();

    int pi, pj;  // pivot positions in the ascending list
    if (all_equal) {
        node.rule = CertRule::ClosedFormEqualParts;
        pi = s - 2;
        pj = s - 1;
    } else {
        // proof ordering: triple (x,y,z) with x <= y <= z and x < z
        int px = s - 3;
        if (content[static_cast<std::size_t>(px)] == content[static_cast<std::size_t>(s - 1)]) {
            px = 0;  // three-way tie at the top: borrow the global minimum
            node.reordered = true;
        }
        auto [merge1, dec1] = children_for(n, content, s - 2, s - 1);
        if (merge1.r != 6) {
            pi = s - 2;
            pj = s - 1;
        } else {
            // merge the smaller pair (x, y); by the injection inequality its
            // count exceeds the first option's, so it cannot be 6 as well
            node.reordered = true;
            pi = px;
            pj = s - 2;
        }
    }

    auto [merge, dec] = children_for(n, content, pi, pj);
    if (node.r != merge.r + dec.r)
        throw std::logic_error("Schubert recursion identity failed at a certificate node");
    node.merge_content = merge.raw;
    node.dec_content = dec.raw;
    node.r_merge = merge.r;
    node.r_dec = dec.r;

    auto certify_child = [&](const ChildOutcome& child, int child_n) -> int {
        if (child.r == 0) return -1;
        if (child.r <= 1 || !child.in_box) {
            // leaf (r = 1 children are certified trivially); out-of-box
            // contents with positive count cannot occur
            if (!child.in_box) throw std::logic_error("positive count outside the box");
            return certify(child_n, child.raw);
        }
        ReduceResult red = reduce(gr2_problem(child_n, child.raw));
        if (red.trivial || red.ctx.k != 2) {
            if (red.trivial) throw std::logic_error("trivial child with positive count");
            return certify(child_n, child.raw);  // collapsed to a point problem, r = 1
        }
        return certify(red.ctx.n, sorted_contents(red.as_problem()));
    };
    node.merge_child = certify_child(merge, n);
    node.dec_child = certify_child(dec, n - 1);

    if (!all_equal) {
        if (merge.r == 0 || dec.r == 0)
            node.rule = CertRule::PassThrough;
        else if (merge.r != dec.r || (merge.r == 1 && dec.r == 1))
            node.rule = CertRule::CriterionB;
        else
            node.rule = CertRule::CriterionC;
    }
    if (node.rule == CertRule::CriterionC || node.rule == CertRule::ClosedFormEqualParts) {
        if (merge.r == 6 && dec.r == 6)
            throw std::logic_error("both recursion counts equal six; criterion (c) inapplicable");
    }

    bool kids_ok = true;
    for (int child : {node.merge_child, node.dec_child})
        if (child >= 0 && !cert.nodes[static_cast<std::size_t>(child)].alternating) kids_ok = false;
    node.alternating = kids_ok;
    return finish(std::move(node));
}

}  // namespace

RecursionChildren recursion_children(const SchubertProblem& sp, std::pair<int, int> pivot) {
    if (sp.ctx.k != 2) throw std::invalid_argument("recursion requires Gr(2,n)");
    std::vector<int> content;
    for (const Partition& c : sp.conditions) {
        if (c.length() > 1) throw std::invalid_argument("recursion requires special conditions");
        content.push_back(c.part(1));
    }
    const int s = static_cast<int>(content.size());
    if (s < 2) throw std::invalid_argument("recursion needs at least two conditions");
    auto [i, j] = pivot;
    if (i == j || i < 0 || j < 0 || i >= s || j >= s)
        throw std::invalid_argument("pivot must name two distinct conditions");
    if (i > j) std::swap(i, j);

    auto [merge, dec] = children_for(sp.ctx.n, content, i, j);
    RecursionChildren out;
    out.merge_raw = merge.raw;
    out.dec_raw = dec.raw;
    out.r_merge = merge.r;
    out.r_dec = dec.r;
    out.merge_nonzero = merge.r > 0;
    out.dec_nonzero = dec.r > 0;
    if (out.merge_nonzero && merge.in_box)
        out.merge_reduced = reduce(gr2_problem(sp.ctx.n, merge.raw)).as_problem();
    if (out.dec_nonzero && dec.in_box)
        out.dec_reduced = reduce(gr2_problem(sp.ctx.n - 1, dec.raw)).as_problem();
    return out;
}

Certificate certify_alternating(const SchubertProblem& sp) {
    if (sp.ctx.k != 2) throw std::invalid_argument("certify_alternating requires Gr(2,n)");
    if (!is_reduced(sp)) throw std::invalid_argument("certify_alternating requires a reduced problem");
    Builder builder;
    builder.cert.root = builder.certify(sp.ctx.n, sorted_contents(sp));
    return std::move(builder.cert);
}

}  // namespace schubert
