#include "schubert/fieldlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

using u128 = unsigned __int128;

uint64_t mix_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
    auto smix = [](uint64_t& s) {
        s += 0x9e3779b97f4a7c15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    uint64_t s = master;
    uint64_t out = smix(s);
    s ^= a * 0x9e3779b97f4a7c15ull;
    out ^= smix(s);
    s ^= b * 0xc2b2ae3d27d4eb4full;
    out ^= smix(s);
    s ^= c * 0x165667b19e3779f9ull;
    out ^= smix(s);
    return out;
}

namespace {

uint64_t pow_mod_u64(uint64_t base, uint64_t e, uint64_t mod) {
    u128 acc = 1, b = base % mod;
    while (e) {
        if (e & 1) acc = acc * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = static_cast<uint64_t>(u128(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t next_prime_at_least(uint64_t n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

// --- field --------------------------------------------------------------

uint64_t Fq::padd(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}
uint64_t Fq::psub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
uint64_t Fq::pmul(uint64_t a, uint64_t b) const { return static_cast<uint64_t>(u128(a) * b % p_); }
uint64_t Fq::pinv(uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_mod_u64(a, p_ - 2, p_);
}

Fq Fq::prime_field(uint64_t p) {
    if (!is_prime(p) || p < 3 || p >= (1ull << 61))
        throw std::invalid_argument("prime fields require an odd prime p < 2^61");
    Fq f;
    f.p_ = p;
    f.m_ = 1;
    f.q_ = p;
    return f;
}

FqElem Fq::from_uint(uint64_t v) const {
    FqElem e;
    e.c[0] = v % p_;
    return e;
}

FqElem Fq::from_coeffs(std::span<const uint64_t> coeffs) const {
    if (static_cast<int>(coeffs.size()) > m_)
        throw std::invalid_argument("too many coefficients for this field");
    FqElem e;
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = coeffs[i] % p_;
    return e;
}

FqElem Fq::generator_power_basis() const {
    if (m_ < 2) throw std::logic_error("prime field has no power basis generator");
    FqElem e;
    e.c[1] = 1;
    return e;
}

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < m_; ++i) r.c[static_cast<std::size_t>(i)] = padd(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]);
    return r;
}
FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < m_; ++i) r.c[static_cast<std::size_t>(i)] = psub(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]);
    return r;
}
FqElem Fq::neg(const FqElem& a) const { return sub(FqElem{}, a); }

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
    if (m_ == 1) {
        FqElem r;
        r.c[0] = pmul(a.c[0], b.c[0]);
        return r;
    }
    std::array<uint64_t, 7> prod{};
    for (int i = 0; i < m_; ++i) {
        if (!a.c[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < m_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                padd(prod[static_cast<std::size_t>(i + j)],
                     pmul(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(j)]));
    }
    // reduce by the monic modulus
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        uint64_t coef = prod[static_cast<std::size_t>(d)];
        if (!coef) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < m_; ++i)
            prod[static_cast<std::size_t>(d - m_ + i)] =
                psub(prod[static_cast<std::size_t>(d - m_ + i)],
                     pmul(coef, modulus_[static_cast<std::size_t>(i)]));
    }
    FqElem r;
    for (int i = 0; i < m_; ++i) r.c[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    return r;
}

FqElem Fq::inv(const FqElem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    if (m_ == 1) {
        FqElem r;
        r.c[0] = pinv(a.c[0]);
        return r;
    }
    // extended Euclid in F_p[x] against the modulus
    std::vector<uint64_t> r0(modulus_.begin(), modulus_.begin() + m_ + 1);
    std::vector<uint64_t> r1(a.c.begin(), a.c.begin() + m_);
    auto trim = [](std::vector<uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(r1);
    std::vector<uint64_t> s0{}, s1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<uint64_t> q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 0, 0);
        std::vector<uint64_t> rem = r0;
        uint64_t lead_inv = pinv(r1.back());
        for (int d = static_cast<int>(rem.size()) - 1; d >= static_cast<int>(r1.size()) - 1; --d) {
            uint64_t coef = pmul(rem[static_cast<std::size_t>(d)], lead_inv);
            if (!coef) continue;
            q[static_cast<std::size_t>(d - static_cast<int>(r1.size()) + 1)] = coef;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[static_cast<std::size_t>(d) - r1.size() + 1 + i] =
                    psub(rem[static_cast<std::size_t>(d) - r1.size() + 1 + i], pmul(coef, r1[i]));
        }
        trim(rem);
        // s_next = s0 - q * s1
        std::vector<uint64_t> s2 = s0;
        if (s2.size() < q.size() + s1.size()) s2.resize(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] = psub(s2[i + j], pmul(q[i], s1[j]));
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("modulus not irreducible");
    uint64_t scale = pinv(r0[0]);
    FqElem out;
    for (std::size_t i = 0; i < s0.size() && i < 4; ++i) out.c[i] = pmul(s0[i], scale);
    return out;
}

FqElem Fq::pow(FqElem base, uint64_t e) const {
    FqElem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FqElem Fq::frobenius(const FqElem& a) const { return m_ == 1 ? a : pow(a, p_); }

FqElem Fq::random(Rng& rng) const {
    FqElem e;
    for (int i = 0; i < m_; ++i) e.c[static_cast<std::size_t>(i)] = rng.below(p_);
    return e;
}

std::string Fq::to_string(const FqElem& a) const {
    if (m_ == 1) return std::to_string(a.c[0]);
    std::string out = "[";
    for (int i = 0; i < m_; ++i) {
        if (i) out += ",";
        out += std::to_string(a.c[static_cast<std::size_t>(i)]);
    }
    return out + "]";
}

Fq Fq::extension(uint64_t p, int m, Rng& rng) {
    Fq base = prime_field(p);
    if (m == 1) return base;
    if (m < 2 || m > 4) throw std::invalid_argument("extension degree must be in [2,4]");
    u128 q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    if (q >= (u128(1) << 63)) throw std::invalid_argument("extension requires p^m < 2^63");
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Poly cand;
        cand.c.resize(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i < m; ++i) cand.c[static_cast<std::size_t>(i)] = base.from_uint(rng.below(p));
        cand.c[static_cast<std::size_t>(m)] = base.one();
        if (!poly_is_irreducible(base, cand)) continue;
        Fq f;
        f.p_ = p;
        f.m_ = m;
        f.q_ = static_cast<uint64_t>(q);
        for (int i = 0; i <= m; ++i) f.modulus_[static_cast<std::size_t>(i)] = cand.c[static_cast<std::size_t>(i)].c[0];
        return f;
    }
    throw std::runtime_error("failed to find an irreducible modulus");
}

// --- matrices -------------------------------------------------------------

Matrix mat_identity(const Fq& f, int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = f.one();
    return I;
}

Matrix mat_mul(const Fq& f, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    Matrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int t = 0; t < A.cols; ++t) {
            const FqElem& a = A.at(i, t);
            if (f.is_zero(a)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = f.add(C.at(i, j), f.mul(a, B.at(t, j)));
        }
    return C;
}

Matrix mat_stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols != bottom.cols) throw std::invalid_argument("matrix width mismatch");
    Matrix M(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), M.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), M.a.begin() + top.a.size());
    return M;
}

std::vector<int> rref(const Fq& f, Matrix& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int sel = -1;
        for (int r = row; r < M.rows; ++r)
            if (!f.is_zero(M.at(r, col))) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        for (int c = 0; c < M.cols; ++c) std::swap(M.at(row, c), M.at(sel, c));
        FqElem inv = f.inv(M.at(row, col));
        for (int c = col; c < M.cols; ++c) M.at(row, c) = f.mul(M.at(row, c), inv);
        for (int r = 0; r < M.rows; ++r) {
            if (r == row || f.is_zero(M.at(r, col))) continue;
            FqElem factor = M.at(r, col);
            for (int c = col; c < M.cols; ++c)
                M.at(r, c) = f.sub(M.at(r, c), f.mul(factor, M.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Fq& f, Matrix M) { return static_cast<int>(rref(f, M).size()); }

Matrix kernel(const Fq& f, const Matrix& M) {
    Matrix R = M;
    std::vector<int> pivots = rref(f, R);
    std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Matrix K(M.cols - static_cast<int>(pivots.size()), M.cols);
    int out = 0;
    for (int fc = 0; fc < M.cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        K.at(out, fc) = f.one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            K.at(out, pivots[pr]) = f.neg(R.at(static_cast<int>(pr), fc));
        ++out;
    }
    rref(f, K);
    return K;
}

std::optional<Matrix> mat_inverse(const Fq& f, const Matrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(M.rows, 2 * M.cols);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols + i) = f.one();
    }
    std::vector<int> pivots = rref(f, aug);
    if (static_cast<int>(pivots.size()) != M.rows) return std::nullopt;
    Matrix inv(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) inv.at(i, j) = aug.at(i, M.cols + j);
    return inv;
}

// --- subspaces ------------------------------------------------------------

Subspace make_subspace(const Fq& f, int ambient, Matrix rows) {
    if (rows.cols != ambient) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<int> pivots = rref(f, rows);
    Matrix basis(static_cast<int>(pivots.size()), ambient);
    for (int r = 0; r < basis.rows; ++r)
        for (int c = 0; c < ambient; ++c) basis.at(r, c) = rows.at(r, c);
    return Subspace{ambient, std::move(basis)};
}

Subspace intersect(const Fq& f, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw std::invalid_argument("ambient dimension mismatch");
    const int n = A.ambient;
    // Zassenhaus: rref of [A | A; B | 0], rows with zero left half span A^B.
    Matrix Z(A.dim() + B.dim(), 2 * n);
    for (int r = 0; r < A.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            Z.at(r, c) = A.basis.at(r, c);
            Z.at(r, n + c) = A.basis.at(r, c);
        }
    for (int r = 0; r < B.dim(); ++r)
        for (int c = 0; c < n; ++c) Z.at(A.dim() + r, c) = B.basis.at(r, c);
    rref(f, Z);
    Matrix rows(0, n);
    for (int r = 0; r < Z.rows; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c) left_zero = f.is_zero(Z.at(r, c));
        if (!left_zero) continue;
        bool right_zero = true;
        for (int c = 0; c < n && right_zero; ++c) right_zero = f.is_zero(Z.at(r, n + c));
        if (right_zero) continue;
        Matrix row(1, n);
        for (int c = 0; c < n; ++c) row.at(0, c) = Z.at(r, n + c);
        rows = rows.rows ? mat_stack(rows, row) : row;
    }
    return rows.rows ? make_subspace(f, n, rows) : Subspace{n, Matrix(0, n)};
}

Subspace span_of(const Fq& f, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw std::invalid_argument("ambient dimension mismatch");
    if (!A.dim()) return B;
    if (!B.dim()) return A;
    return make_subspace(f, A.ambient, mat_stack(A.basis, B.basis));
}

bool subspace_contains(const Fq& f, const Subspace& A, const Subspace& B) {
    return span_of(f, A, B).dim() == A.dim();
}

Subspace frobenius_map(const Fq& f, const Subspace& S) {
    Matrix M = S.basis;
    for (FqElem& e : M.a) e = f.frobenius(e);
    return make_subspace(f, S.ambient, std::move(M));
}

Subspace random_subspace(const Fq& f, int dim, int ambient, Rng& rng) {
    if (dim < 0 || dim > ambient) throw std::invalid_argument("bad subspace dimension");
    for (;;) {
        Matrix M(dim, ambient);
        for (FqElem& e : M.a) e = f.random(rng);
        Subspace S = make_subspace(f, ambient, std::move(M));
        if (S.dim() == dim) return S;
    }
}

std::optional<Matrix> coordinates_in(const Fq& f, const Subspace& sub, const Subspace& amb) {
    if (sub.ambient != amb.ambient) throw std::invalid_argument("ambient dimension mismatch");
    Matrix pivots_only = amb.basis;
    std::vector<int> pivots = rref(f, pivots_only);  // already rref; recovers pivot columns
    Matrix X(sub.dim(), amb.dim());
    for (int i = 0; i < sub.dim(); ++i)
        for (int j = 0; j < amb.dim(); ++j) X.at(i, j) = sub.basis.at(i, pivots[static_cast<std::size_t>(j)]);
    if (mat_mul(f, X, amb.basis) != sub.basis) return std::nullopt;
    return X;
}

// --- polynomials ------------------------------------------------------------

namespace {
void poly_trim(const Fq& f, Poly& a) {
    while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}
}  // namespace

Poly poly_from(const Fq& f, std::span<const uint64_t> coeffs) {
    Poly a;
    for (uint64_t v : coeffs) a.c.push_back(f.from_uint(v));
    poly_trim(f, a);
    return a;
}

Poly poly_x(const Fq& f) {
    Poly a;
    a.c = {f.zero(), f.one()};
    return a;
}

Poly poly_add(const Fq& f, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        FqElem x = i < a.c.size() ? a.c[i] : f.zero();
        FqElem y = i < b.c.size() ? b.c[i] : f.zero();
        r.c[i] = f.add(x, y);
    }
    poly_trim(f, r);
    return r;
}

Poly poly_sub(const Fq& f, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        FqElem x = i < a.c.size() ? a.c[i] : f.zero();
        FqElem y = i < b.c.size() ? b.c[i] : f.zero();
        r.c[i] = f.sub(x, y);
    }
    poly_trim(f, r);
    return r;
}

Poly poly_mul(const Fq& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (f.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    poly_trim(f, r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Fq& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    Poly rem = a;
    Poly quot;
    quot.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f.zero());
    FqElem lead_inv = f.inv(b.c.back());
    for (int d = a.degree(); d >= b.degree(); --d) {
        if (f.is_zero(rem.c[static_cast<std::size_t>(d)])) continue;
        FqElem coef = f.mul(rem.c[static_cast<std::size_t>(d)], lead_inv);
        quot.c[static_cast<std::size_t>(d - b.degree())] = coef;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c[static_cast<std::size_t>(d - b.degree() + i)] =
                f.sub(rem.c[static_cast<std::size_t>(d - b.degree() + i)],
                      f.mul(coef, b.c[static_cast<std::size_t>(i)]));
    }
    poly_trim(f, rem);
    poly_trim(f, quot);
    return {std::move(quot), std::move(rem)};
}

Poly poly_make_monic(const Fq& f, const Poly& a) {
    if (a.is_zero()) return a;
    Poly r = a;
    FqElem inv = f.inv(a.c.back());
    for (FqElem& e : r.c) e = f.mul(e, inv);
    return r;
}

Poly poly_gcd(const Fq& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(f, a);
}

Poly poly_derivative(const Fq& f, const Poly& a) {
    Poly r;
    for (int i = 1; i <= a.degree(); ++i) {
        FqElem k = f.from_uint(static_cast<uint64_t>(i) % f.p());
        r.c.push_back(f.mul(k, a.c[static_cast<std::size_t>(i)]));
    }
    poly_trim(f, r);
    return r;
}

FqElem poly_eval(const Fq& f, const Poly& a, const FqElem& x) {
    FqElem acc = f.zero();
    for (int i = a.degree(); i >= 0; --i) acc = f.add(f.mul(acc, x), a.c[static_cast<std::size_t>(i)]);
    return acc;
}

Poly poly_powmod(const Fq& f, Poly base, uint64_t e, const Poly& mod) {
    base = poly_divmod(f, base, mod).second;
    Poly acc;
    acc.c = {f.one()};
    while (e) {
        if (e & 1) acc = poly_divmod(f, poly_mul(f, acc, base), mod).second;
        base = poly_divmod(f, poly_mul(f, base, base), mod).second;
        e >>= 1;
    }
    return acc;
}

std::string poly_to_string(const Fq& f, const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const FqElem& c = a.c[static_cast<std::size_t>(i)];
        if (f.is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !(c == f.one())) out += f.to_string(c);
        if (i >= 1) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

Poly char_poly(const Fq& f, const Matrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const int n = A.rows;
    Matrix H = A;
    // similarity reduction to upper Hessenberg form
    for (int j = 0; j + 2 < n; ++j) {
        int sel = -1;
        for (int r = j + 1; r < n; ++r)
            if (!f.is_zero(H.at(r, j))) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(H.at(j + 1, c), H.at(sel, c));
            for (int r = 0; r < n; ++r) std::swap(H.at(r, j + 1), H.at(r, sel));
        }
        FqElem pivot_inv = f.inv(H.at(j + 1, j));
        for (int r = j + 2; r < n; ++r) {
            FqElem factor = f.mul(H.at(r, j), pivot_inv);
            if (f.is_zero(factor)) continue;
            for (int c = 0; c < n; ++c) H.at(r, c) = f.sub(H.at(r, c), f.mul(factor, H.at(j + 1, c)));
            for (int r2 = 0; r2 < n; ++r2)
                H.at(r2, j + 1) = f.add(H.at(r2, j + 1), f.mul(factor, H.at(r2, r)));
        }
    }
    // leading-minor recurrence for Hessenberg characteristic polynomials
    std::vector<Poly> p(static_cast<std::size_t>(n) + 1);
    p[0].c = {f.one()};
    for (int k = 1; k <= n; ++k) {
        Poly xm;
        xm.c = {f.neg(H.at(k - 1, k - 1)), f.one()};
        Poly acc = poly_mul(f, xm, p[static_cast<std::size_t>(k - 1)]);
        FqElem run = f.one();
        for (int j = k - 1; j >= 1; --j) {
            run = f.mul(run, H.at(j, j - 1));
            FqElem coef = f.mul(H.at(j - 1, k - 1), run);
            if (f.is_zero(coef)) continue;
            Poly term = p[static_cast<std::size_t>(j - 1)];
            for (FqElem& e : term.c) e = f.mul(e, coef);
            acc = poly_sub(f, acc, term);
        }
        p[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return p[static_cast<std::size_t>(n)];
}

FactorDegrees factor_degrees(const Fq& f, const Poly& poly) {
    if (poly.degree() < 1) throw std::invalid_argument("factor_degrees needs a nonconstant polynomial");
    Poly fm = poly_make_monic(f, poly);
    Poly deriv = poly_derivative(f, fm);
    FactorDegrees out;
    Poly work;
    if (deriv.is_zero()) {
        out.squarefree = false;  // perfect p-th power
        return out;
    }
    Poly g = poly_gcd(f, fm, deriv);
    out.squarefree = g.degree() == 0;
    work = out.squarefree ? fm : poly_divmod(f, fm, g).first;

    Poly h = poly_divmod(f, poly_x(f), work).second;
    int d = 0;
    while (work.degree() > 0) {
        ++d;
        if (2 * d > work.degree()) {
            out.degrees.push_back(work.degree());
            break;
        }
        for (int i = 0; i < f.degree(); ++i) h = poly_powmod(f, h, f.p(), work);
        Poly diff = poly_sub(f, h, poly_x(f));
        Poly gd = poly_gcd(f, diff, work);
        if (gd.degree() > 0) {
            for (int i = 0; i < gd.degree() / d; ++i) out.degrees.push_back(d);
            work = poly_divmod(f, work, gd).first;
            h = poly_divmod(f, h, work).second;
        }
    }
    std::sort(out.degrees.rbegin(), out.degrees.rend());
    return out;
}

std::vector<FqElem> roots_in_field(const Fq& f, const Poly& poly, Rng& rng) {
    if (poly.degree() < 1) return {};
    Poly fm = poly_make_monic(f, poly);
    // product of the distinct linear factors: gcd(f, x^q - x)
    Poly h = poly_divmod(f, poly_x(f), fm).second;
    for (int i = 0; i < f.degree(); ++i) h = poly_powmod(f, h, f.p(), fm);
    Poly lin = poly_gcd(f, poly_sub(f, h, poly_x(f)), fm);

    std::vector<FqElem> roots;
    auto split = [&](auto&& self, Poly g) -> void {
        if (g.degree() == 0) return;
        if (g.degree() == 1) {
            roots.push_back(f.neg(g.c[0]));  // monic x + c0
            return;
        }
        const uint64_t half = (f.size() - 1) / 2;
        for (;;) {
            Poly shift;
            shift.c = {f.random(rng), f.one()};
            Poly t = poly_powmod(f, shift, half, g);
            t = poly_sub(f, t, Poly{{f.one()}});
            Poly d = poly_gcd(f, t, g);
            if (d.degree() > 0 && d.degree() < g.degree()) {
                self(self, d);
                self(self, poly_divmod(f, g, d).first);
                return;
            }
        }
    };
    split(split, lin);
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool poly_is_irreducible(const Fq& f, const Poly& poly) {
    const int m = poly.degree();
    if (m < 1) return false;
    Poly fm = poly_make_monic(f, poly);
    if (m == 1) return true;
    // x^(q^m) = x mod f, and x^(q^(m/l)) - x coprime to f for prime l | m
    Poly x = poly_x(f);
    auto frob_iterate = [&](int times) {
        Poly h = poly_divmod(f, x, fm).second;
        for (int i = 0; i < times * f.degree(); ++i) h = poly_powmod(f, h, f.p(), fm);
        return h;
    };
    Poly top = frob_iterate(m);
    if (!poly_sub(f, top, x).is_zero()) return false;
    for (int l = 2; l <= m; ++l) {
        if (m % l || !is_prime(static_cast<uint64_t>(l))) continue;
        Poly mid = frob_iterate(m / l);
        if (poly_gcd(f, poly_sub(f, mid, x), fm).degree() != 0) return false;
    }
    return true;
}

}  // namespace schubert
