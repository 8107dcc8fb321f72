#include "schubert/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace schubert {

static void check_weakly_decreasing(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition part is negative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::single_row(int a) {
    if (a < 0) throw std::invalid_argument("negative row");
    return a == 0 ? Partition{} : Partition{std::vector<int>{a}};
}

Partition Partition::rectangle(int rows, int width) {
    if (rows < 0 || width < 0) throw std::invalid_argument("negative rectangle");
    if (rows == 0 || width == 0) return Partition{};
    return Partition{std::vector<int>(static_cast<std::size_t>(rows), width)};
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) conj[static_cast<std::size_t>(j)]++;
    return Partition{std::move(conj)};
}

bool Partition::fits(int rows, int width) const {
    return length() <= rows && part(1) <= width;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

SchubertProblem::SchubertProblem(GrassContext c, std::vector<Partition> conds)
    : ctx(c), conditions(std::move(conds)) {
    validate_problem(ctx, conditions);
}

std::vector<Partition> SchubertProblem::sorted_key() const {
    std::vector<Partition> key = conditions;
    std::sort(key.begin(), key.end());
    return key;
}

std::string SchubertProblem::to_notation() const {
    std::string out = std::to_string(ctx.k) + "," + std::to_string(ctx.n) + ":";
    if (conditions.empty()) return out + " ()";
    std::size_t i = 0;
    bool first = true;
    while (i < conditions.size()) {
        std::size_t j = i;
        while (j < conditions.size() && conditions[j] == conditions[i]) ++j;
        out += first ? " " : "*";
        first = false;
        out += conditions[i].to_string();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

void validate_problem(const GrassContext& ctx, std::span<const Partition> conditions) {
    if (!ctx.valid()) throw std::invalid_argument("invalid Grassmannian context");
    long long total = 0;
    for (const Partition& c : conditions) {
        if (!c.fits(ctx.k, ctx.width()))
            throw std::invalid_argument("condition " + c.to_string() + " outside the " +
                                        std::to_string(ctx.k) + "x" + std::to_string(ctx.width()) +
                                        " box");
        total += c.weight();
    }
    if (total != ctx.dim())
        throw std::invalid_argument("codimension mismatch: conditions sum to " +
                                    std::to_string(total) + ", expected " +
                                    std::to_string(ctx.dim()));
}

long long flag_dimension(const Partition& lambda, const GrassContext& ctx) {
    if (!lambda.fits(ctx.k, ctx.width()))
        throw std::invalid_argument("partition outside the box");
    // N(lambda) = sum_{j=1..m} (lambda_{j-1} - lambda_j + 1)(k + lambda_j - j),
    // with lambda_0 = n-k.
    long long total = 0;
    int prev = ctx.width();
    for (int j = 1; j <= lambda.length(); ++j) {
        int cur = lambda.part(j);
        total += static_cast<long long>(prev - cur + 1) * (ctx.k + cur - j);
        prev = cur;
    }
    return total;
}

SchubertProblem dualize(const SchubertProblem& sp) {
    std::vector<Partition> duals;
    duals.reserve(sp.conditions.size());
    for (const Partition& c : sp.conditions) duals.push_back(c.transpose());
    return SchubertProblem{GrassContext{sp.ctx.n - sp.ctx.k, sp.ctx.n}, std::move(duals)};
}

std::string ClauseViolation::to_string() const {
    std::ostringstream os;
    os << "clause (" << clause << ") at condition " << mu_pos;
    if (clause == 'c' || clause == 'd') os << " against condition " << nu_pos << ", i=" << i;
    if (strict) os << " (strict)";
    return os.str();
}

std::optional<ClauseViolation> find_strict_c(const GrassContext& ctx,
                                             std::span<const Partition> conditions) {
    const int s = static_cast<int>(conditions.size());
    const int w = ctx.width();
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            if (a == b) continue;
            for (int i = 1; i <= ctx.k; ++i)
                if (conditions[a].part(i) + conditions[b].part(ctx.k + 1 - i) > w)
                    return ClauseViolation{'c', a, b, i, true};
        }
    return std::nullopt;
}

std::optional<ClauseViolation> find_reduction_clause(const GrassContext& ctx,
                                                     std::span<const Partition> conditions) {
    const int s = static_cast<int>(conditions.size());
    const int w = ctx.width();
    for (int a = 0; a < s; ++a)
        if (conditions[a].part(1) == w && w > 0)
            return ClauseViolation{'a', a, -1, 1, false};
    for (int a = 0; a < s; ++a)
        if (conditions[a].part(ctx.k) > 0)
            return ClauseViolation{'b', a, -1, ctx.k, false};
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            if (a == b) continue;
            for (int i = 1; i <= ctx.k; ++i) {
                int sum = conditions[a].part(i) + conditions[b].part(ctx.k + 1 - i);
                if (sum >= w) return ClauseViolation{'c', a, b, i, sum > w};
            }
        }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            if (a == b) continue;
            for (int i = 1; i <= ctx.k - 1; ++i)
                if (conditions[a].part(i) + conditions[b].part(ctx.k - i) > w)
                    return ClauseViolation{'d', a, b, i, false};
        }
    return std::nullopt;
}

bool is_reduced(const GrassContext& ctx, std::span<const Partition> conditions) {
    return !find_reduction_clause(ctx, conditions).has_value();
}

bool is_reduced(const SchubertProblem& sp) {
    return is_reduced(sp.ctx, sp.conditions);
}

// --- parsing -------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument(std::string("expected '") + c + "' at offset " +
                                        std::to_string(pos) + " in problem notation");
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in problem notation");
        return std::stoi(s.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

Partition parse_factor(Cursor& cur, int& exponent) {
    cur.expect('(');
    std::vector<int> parts;
    if (!cur.eat(')')) {
        parts.push_back(cur.integer());
        while (cur.eat(',')) parts.push_back(cur.integer());
        cur.expect(')');
    }
    exponent = cur.eat('^') ? cur.integer() : 1;
    if (exponent < 1) throw std::invalid_argument("factor exponent must be positive");
    return Partition{std::move(parts)};
}

std::vector<Partition> parse_condition_list(Cursor& cur) {
    std::vector<Partition> conds;
    do {
        int e = 1;
        Partition p = parse_factor(cur, e);
        for (int i = 0; i < e; ++i) conds.push_back(p);
    } while (cur.eat('*'));
    if (!cur.done()) throw std::invalid_argument("trailing characters in problem notation");
    return conds;
}

}  // namespace

SchubertProblem parse_problem(const std::string& text) {
    Cursor cur{text};
    int k = cur.integer();
    cur.expect(',');
    int n = cur.integer();
    cur.expect(':');
    GrassContext ctx{k, n};
    if (!(0 < k && k < n)) throw std::invalid_argument("context requires 0 < k < n");
    return SchubertProblem{ctx, parse_condition_list(cur)};
}

std::vector<Partition> parse_conditions(const std::string& text) {
    Cursor cur{text};
    return parse_condition_list(cur);
}

std::string to_json_string(const SchubertProblem& sp) {
    nlohmann::json j;
    j["k"] = sp.ctx.k;
    j["n"] = sp.ctx.n;
    auto conds = nlohmann::json::array();
    for (const Partition& c : sp.conditions) conds.push_back(c.parts());
    j["conditions"] = std::move(conds);
    return j.dump();
}

SchubertProblem problem_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GrassContext ctx{j.at("k").get<int>(), j.at("n").get<int>()};
    std::vector<Partition> conds;
    for (const auto& c : j.at("conditions")) conds.push_back(Partition{c.get<std::vector<int>>()});
    return SchubertProblem{ctx, std::move(conds)};
}

}  // namespace schubert
