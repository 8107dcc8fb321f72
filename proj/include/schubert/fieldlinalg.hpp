#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// Deterministic RNG; every randomized computation is reproducible from the
/// seed it echoes.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t u64() { return gen(); }
    uint64_t below(uint64_t n) { return n ? gen() % n : 0; }
};

/// Stable per-sample seed derivation, independent of thread schedule.
uint64_t mix_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c);

bool is_prime(uint64_t n);
uint64_t next_prime_at_least(uint64_t n);

/// Element of F_{p^m}: coefficients of the residue polynomial, low degree
/// first, entries reduced mod p.  m <= 4.
struct FqElem {
    std::array<uint64_t, 4> c{};
    auto operator<=>(const FqElem&) const = default;
};

/// A prime field F_p (p odd, p < 2^61) or an extension F_{p^m} given by a
/// monic irreducible modulus of degree m (verified at construction;
/// extensions additionally require p^m < 2^63).
class Fq {
public:
    static Fq prime_field(uint64_t p);
    /// Extension with a random monic irreducible modulus of degree m.
    static Fq extension(uint64_t p, int m, Rng& rng);

    uint64_t p() const { return p_; }
    int degree() const { return m_; }
    uint64_t size() const { return q_; }                  // p^m
    std::span<const uint64_t> modulus() const { return {modulus_.data(), static_cast<std::size_t>(m_ + 1)}; }

    FqElem zero() const { return {}; }
    FqElem one() const { return from_uint(1); }
    FqElem from_uint(uint64_t v) const;
    FqElem from_coeffs(std::span<const uint64_t> coeffs) const;
    FqElem generator_power_basis() const;                 // the class of x

    bool is_zero(const FqElem& a) const { return a == FqElem{}; }
    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem inv(const FqElem& a) const;
    FqElem pow(FqElem base, uint64_t e) const;
    /// x -> x^p, the arithmetic Frobenius.
    FqElem frobenius(const FqElem& a) const;
    FqElem random(Rng& rng) const;

    std::string to_string(const FqElem& a) const;

private:
    uint64_t p_ = 0;
    int m_ = 1;
    uint64_t q_ = 0;
    std::array<uint64_t, 5> modulus_{};  // monic of degree m (used when m >= 2)

    uint64_t padd(uint64_t a, uint64_t b) const;
    uint64_t psub(uint64_t a, uint64_t b) const;
    uint64_t pmul(uint64_t a, uint64_t b) const;
    uint64_t pinv(uint64_t a) const;
};

/// Dense matrix over one field; row-major.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<FqElem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    FqElem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const FqElem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    auto operator<=>(const Matrix&) const = default;
};

Matrix mat_identity(const Fq& f, int n);
Matrix mat_mul(const Fq& f, const Matrix& A, const Matrix& B);
Matrix mat_stack(const Matrix& top, const Matrix& bottom);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(const Fq& f, Matrix& M);
int rank(const Fq& f, Matrix M);
/// Basis of the right kernel {x : M x^T = 0}, rows canonical.
Matrix kernel(const Fq& f, const Matrix& M);
std::optional<Matrix> mat_inverse(const Fq& f, const Matrix& M);

/// Row span of a matrix in canonical reduced echelon form: two subspaces are
/// equal iff their representations compare equal.
struct Subspace {
    int ambient = 0;
    Matrix basis;  // rref, no zero rows

    int dim() const { return basis.rows; }
    auto operator<=>(const Subspace&) const = default;
};

Subspace make_subspace(const Fq& f, int ambient, Matrix rows);
Subspace intersect(const Fq& f, const Subspace& A, const Subspace& B);
Subspace span_of(const Fq& f, const Subspace& A, const Subspace& B);
bool subspace_contains(const Fq& f, const Subspace& A, const Subspace& B);  // B <= A
/// Entrywise p-th power followed by re-canonicalization.
Subspace frobenius_map(const Fq& f, const Subspace& S);
Subspace random_subspace(const Fq& f, int dim, int ambient, Rng& rng);
/// Coordinates of sub with respect to the rows of amb; nullopt when sub is
/// not contained in the row span of amb.
std::optional<Matrix> coordinates_in(const Fq& f, const Subspace& sub, const Subspace& amb);

/// Dense univariate polynomial over one field, low degree first; canonical
/// form has a nonzero leading coefficient.
struct Poly {
    std::vector<FqElem> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    auto operator<=>(const Poly&) const = default;
};

Poly poly_from(const Fq& f, std::span<const uint64_t> coeffs);
Poly poly_x(const Fq& f);
Poly poly_add(const Fq& f, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& f, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& f, const Poly& a, const Poly& b);
/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Fq& f, const Poly& a, const Poly& b);
Poly poly_gcd(const Fq& f, Poly a, Poly b);         // monic gcd
Poly poly_derivative(const Fq& f, const Poly& a);
Poly poly_make_monic(const Fq& f, const Poly& a);
FqElem poly_eval(const Fq& f, const Poly& a, const FqElem& x);
Poly poly_powmod(const Fq& f, Poly base, uint64_t e, const Poly& mod);
std::string poly_to_string(const Fq& f, const Poly& a);

/// Monic characteristic polynomial det(xI - A), exact, via Hessenberg
/// reduction.
Poly char_poly(const Fq& f, const Matrix& A);

/// Multiset of irreducible-factor degrees, plus the squarefree flag.  When
/// the input is not squarefree the degrees reported are those of its
/// distinct factors and the caller is expected to discard the sample.
struct FactorDegrees {
    std::vector<int> degrees;  // sorted descending
    bool squarefree = false;
};
FactorDegrees factor_degrees(const Fq& f, const Poly& poly);

/// All roots of the polynomial lying in the field, deterministically ordered;
/// uses equal-degree splitting driven by the supplied RNG.
std::vector<FqElem> roots_in_field(const Fq& f, const Poly& poly, Rng& rng);

/// True iff the monic polynomial is irreducible over the field.
bool poly_is_irreducible(const Fq& f, const Poly& poly);

}  // namespace schubert
