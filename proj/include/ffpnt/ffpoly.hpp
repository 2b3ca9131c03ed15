#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffpnt/arith.hpp"

// Brute-force side of the artifact: explicit finite fields F_q = F_p[y]/(g),
// polynomial arithmetic over them, two independent irreducibility tests and
// exhaustive enumeration of monic irreducibles. Everything is deterministic:
// the field modulus is the lexicographically first irreducible candidate, so
// counts and element encodings reproduce across runs.

namespace ffpnt {

// A validated prime power q = p^e.
struct PrimePower {
    std::int64_t q = 0;
    std::int64_t p = 0;
    int e = 0;

    // Factors q as p^e with p prime; throws std::invalid_argument otherwise.
    static PrimePower from_q(std::int64_t q);
    // Validates p prime, e >= 1.
    static PrimePower from_pe(std::int64_t p, int e);

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F_{p^e} with elements encoded as integers in [0, q): the digits of the
// index in base p are the coordinates in the power basis 1, y, .., y^(e-1).
// For e >= 2 the defining modulus is the lexicographically first monic
// irreducible of degree e over F_p (coefficient vectors compared from the
// constant term up), verified irreducible by trial division during
// construction. Multiplication uses discrete log tables built once here.
//
// Immutable after construction; FieldPoly stores a pointer to its context,
// so contexts are pinned in place (no copy, no move).
class FieldContext {
public:
    using Elem = std::uint32_t;

    static constexpr std::int64_t kSizeCap = 1 << 20;

    // p prime, e >= 1, p^e <= kSizeCap.
    static FieldContext build(std::int64_t p, int e);

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    std::int64_t q() const { return pp_.q; }
    std::int64_t p() const { return pp_.p; }
    int e() const { return pp_.e; }
    const PrimePower& prime_power() const { return pp_; }

    // Modulus coefficients c0..c_{e-1} (leading 1 implicit); empty for e == 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::domain_error on 0

    // Base-p digit view of an element (length e).
    std::vector<Elem> to_digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& digits) const;

    // Same field in the value sense: equal p, e and modulus.
    bool same_field(const FieldContext& other) const;

private:
    FieldContext(PrimePower pp, std::vector<Elem> modulus);

    Elem mul_digitwise(Elem a, Elem b) const;  // table-free path, used to bootstrap
    void build_log_tables();

    PrimePower pp_;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;  // exp_[i] = g^i, i in [0, 2(q-1)); empty for e == 1
    std::vector<std::int32_t> log_;
};

// Dense polynomial over a FieldContext, coefficients low to high in canonical
// form (no stored zero leading coefficient; the zero polynomial has an empty
// coefficient vector and degree kDegNegInf).
struct FieldPoly {
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    const FieldContext* ctx = nullptr;
    std::vector<FieldContext::Elem> c;

    static FieldPoly zero(const FieldContext& ctx);
    static FieldPoly one(const FieldContext& ctx);
    static FieldPoly x(const FieldContext& ctx);
    // Coefficients low to high; values must lie in [0, q). Trailing zeros are
    // stripped to keep the canonical form.
    static FieldPoly from_coeffs(const FieldContext& ctx, std::vector<FieldContext::Elem> coeffs);

    int degree() const { return c.empty() ? kDegNegInf : static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
        return a.c == b.c && a.ctx->same_field(*b.ctx);
    }
};

std::ostream& operator<<(std::ostream& os, const FieldPoly& f);

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_sub(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b);
// quotient/remainder with deg r < deg b; throws on b == 0.
std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& a, const FieldPoly& b);
// Monic gcd; poly_gcd(f, 0) is the monic normalization of f.
FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b);
// base^exponent mod modulus, square-and-multiply with reduction each step.
// exponent >= 0 as an arbitrary-precision integer; deg modulus >= 1.
FieldPoly poly_powmod(const FieldPoly& base, const Int& exponent, const FieldPoly& modulus);

// Irreducibility by exhaustive trial division over all monic divisors of
// degree 1..deg(f)/2. Requires f monic of degree >= 1.
bool is_irreducible_trial(const FieldPoly& f);

// Rabin's criterion: f irreducible iff x^(q^n) == x (mod f) and
// gcd(x^(q^(n/l)) - x, f) = 1 for every prime l | n. Same preconditions.
bool is_irreducible_rabin(const FieldPoly& f);

// Enumerates all q^n monic polynomials of degree n and counts the ones
// passing the Rabin test. Throws BudgetExceeded when q^n > budget.
Int count_irreducible_bruteforce(const FieldContext& ctx, unsigned n,
                                 std::int64_t budget = 10'000'000, unsigned threads = 0);

}  // namespace ffpnt
