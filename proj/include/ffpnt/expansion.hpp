#pragma once

#include <string>
#include <vector>

#include "ffpnt/arith.hpp"
#include "ffpnt/ffpoly.hpp"

// Exact count of monic irreducibles via Moebius inversion, the asymptotic
// expansion of pi_q with exact rational coefficients, a certified remainder
// bound, and the verification suites (bound grid, inequality suite, series
// consistency checks) behind the `verify` command.

namespace ffpnt {

// One expansion request: x = q^n (so log_q x = n), truncation order m.
struct CountQuery {
    PrimePower q;
    unsigned n = 0;
    unsigned m = 0;
};

// exact_count == leading_term + sum(correction_terms) + remainder, exactly;
// bound_holds <=> |remainder| <= bound.
struct ExpansionReport {
    CountQuery query;
    Int exact_count;
    Rat leading_term;
    std::vector<Rat> correction_terms;  // j = 1 .. m-1; empty when m == 1
    Rat remainder;
    Rat bound;
    bool bound_holds = false;
};

// Constants of the remainder bound, parameterized so a test harness can
// corrupt them and prove the certification can fail. Defaults are the real
// ones; never change them outside negative-control tests.
struct BoundConstants {
    Rat sqrt_coeff = Rat(11);  // coefficient of the sqrt(x)/log_q(x) term
    Rat scale = Rat(1);        // multiplies the whole bound
};

inline const Int kDefaultSqrtSlack = Int(1000000);

// (1/k) sum_{d|k} mu(k/d) q^d. Checks exact divisibility by k and positivity;
// a violation throws std::logic_error (it would mean an arithmetic bug).
Int count_degree_exact(const PrimePower& q, unsigned k);

// Number of monic irreducibles of norm <= q^n: sum of the per-degree counts.
Int pi_q(const PrimePower& q, unsigned n);

// Term j of the expansion at x = q^n: j = 0 gives (q/(q-1)) q^n/n, j >= 1
// gives S_j(q/(q-1))/(q-1) * q^n/n^(j+1).
Rat expansion_term(const PrimePower& q, unsigned n, unsigned j);

// Certified upper bound on |R_m|:
//   sqrt_coeff * u/n + m! (3^(m+3) q^n / (q n^(m+1)) + 2^(m+1)/n)
// with u >= sqrt(q^n) the outward-rounded root (exact for perfect squares).
Rat remainder_bound(const PrimePower& q, unsigned n, unsigned m,
                    const Int& sqrt_slack = kDefaultSqrtSlack,
                    const BoundConstants& constants = BoundConstants{});

ExpansionReport expand(const CountQuery& query, const Int& sqrt_slack = kDefaultSqrtSlack,
                       const BoundConstants& constants = BoundConstants{});

// sum_{k>=1} k^j / q^k in closed form: S_j(q/(q-1)) / (q-1). Requires j >= 1.
Rat power_sum_closed(const PrimePower& q, unsigned j);

// A_{p,j} = sum_{k>=1} k^(j-1) / p^(k-1): truncated partial sums plus the
// closed form (geometric for j = 1, p * power_sum_closed(p, j-1) otherwise).
struct PollackCoefficient {
    PrimePower p;
    unsigned j = 0;
    Rat closed_form;
    std::vector<Rat> partial_sums;  // t = 1 .. K
};

PollackCoefficient pollack_coefficient(const PrimePower& p, unsigned j, unsigned K);

// Computable majorant of the truncation tail of A_{p,j} after K terms:
// (K+1)^(j-1) (p/(p-1))^j / p^(K-1). Valid at the suite's scales (large K).
Rat pollack_tail_majorant(const PrimePower& p, unsigned j, unsigned K);

// First-order term (q/(q-1)) q^n / n (Kruse-Stichtenoth shape).
Rat ks_leading(const PrimePower& q, unsigned n);

// Two-term Wang-Kan value (q/(q-1)) q^n/n + (q/(q-1)^2) q^n/n^2, computed
// from its own published coefficients; agreement with the expansion terms is
// a tested identity, not an implementation shortcut.
Rat wang_kan_two_term(const PrimePower& q, unsigned n);

// |pi_q(q^n) / ks_leading(q, n) - 1| as an exact rational.
Rat ks_relative_gap(const PrimePower& q, unsigned n);

// One verification outcome. n and m are 0 when the check does not range over
// them. A false `pass` means the implementation (not the mathematics) broke,
// except under deliberately corrupted BoundConstants.
struct CheckRow {
    std::string family;
    std::int64_t q = 0;
    unsigned n = 0;
    unsigned m = 0;
    bool pass = true;
};

// One cell of the remainder-bound certification grid.
struct BoundCell {
    PrimePower q;
    unsigned n = 0;
    unsigned m = 0;
    Int exact;
    Rat remainder;
    Rat bound;
    bool holds = false;
};

std::vector<BoundCell> verify_bound_grid(const std::vector<PrimePower>& qs, unsigned n_lo,
                                         unsigned n_hi, unsigned m_lo, unsigned m_hi,
                                         const Int& sqrt_slack = kDefaultSqrtSlack,
                                         const BoundConstants& constants = BoundConstants{});

// The displayed estimates feeding the remainder bound, each verified in exact
// arithmetic over 1 <= n <= n_max, 1 <= m <= m_max:
//   sandwich        q^k - 2 q^(k/2) <= sum_{d|k} mu(k/d) q^d <= q^k
//   partial_sum_55  sum_{k<=n} q^(k/2)/k <= 5.5 q^(n/2)/n
//   power_sum       sum_k k^m/q^k <= m!/(q (1-1/q)^(m+1))
//   split_sum       sum_{k<n} (k^m/q^k)/(1-k/n) <= 3^(m+3) m!/q
//   numeric_ratio   (0.75q/(0.75q-1))^(m+1) <= 3^(m+1)
//   numeric_decay   n/1.3^(n/2) <= 3
// Square roots are eliminated by squaring or by the a + b sqrt(q) sign rule.
std::vector<CheckRow> verify_proof_inequalities(const PrimePower& q, unsigned n_max,
                                                unsigned m_max);

// Per n: the Wang-Kan value equals term0 + term1 exactly, and the j = 1
// coefficient equals q/(q-1)^2 exactly.
std::vector<CheckRow> verify_wang_kan(const PrimePower& q, unsigned n_max);

// Per j = 1..j_max: partial sums monotone, below the closed form, and the
// truncation tail at K within the computable majorant.
std::vector<CheckRow> verify_pollack(const PrimePower& p, unsigned j_max, unsigned K);

// Field sizes exercised by the certification defaults.
const std::vector<PrimePower>& certification_field_sizes();

}  // namespace ffpnt
