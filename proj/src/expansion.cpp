#include "ffpnt/expansion.hpp"

#include <stdexcept>

namespace ffpnt {

namespace {

Int ipow_i64(std::int64_t base, unsigned long exp) { return int_pow(Int(static_cast<long>(base)), exp); }

std::vector<Int> power_table(std::int64_t base, unsigned max_exp) {
    std::vector<Int> t(max_exp + 1);
    t[0] = 1;
    for (unsigned i = 1; i <= max_exp; ++i) t[i] = t[i - 1] * static_cast<long>(base);
    return t;
}

}  // namespace

Int count_degree_exact(const PrimePower& q, unsigned k) {
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    Int s = 0;
    for (std::int64_t d : divisors(static_cast<std::int64_t>(k)))
        s += mobius(static_cast<std::int64_t>(k) / d) * ipow_i64(q.q, static_cast<unsigned long>(d));
    if (s % k != 0) throw std::logic_error("degree count: divisor sum not divisible by the degree");
    Int c = s / k;
    if (c <= 0) throw std::logic_error("degree count: nonpositive result");
    return c;
}

Int pi_q(const PrimePower& q, unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Int total = 0;
    for (unsigned k = 1; k <= n; ++k) total += count_degree_exact(q, k);
    return total;
}

Rat expansion_term(const PrimePower& q, unsigned n, unsigned j) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Int x = ipow_i64(q.q, n);
    if (j == 0) return make_rat(q.q * x, Int(static_cast<long>(q.q - 1)) * n);
    Rat sj = eval_stirling_poly(j, make_rat(Int(static_cast<long>(q.q)), Int(static_cast<long>(q.q - 1))));
    return sj * make_rat(x, Int(static_cast<long>(q.q - 1)) * int_pow(Int(n), j + 1));
}

Rat remainder_bound(const PrimePower& q, unsigned n, unsigned m, const Int& sqrt_slack,
                    const BoundConstants& constants) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
    Int x = ipow_i64(q.q, n);
    Rat root = sqrt_upper_rational(x, sqrt_slack);
    Rat first = constants.sqrt_coeff * root / Rat(n);
    Rat mid = make_rat(int_pow(Int(3), m + 3) * x, Int(static_cast<long>(q.q)) * int_pow(Int(n), m + 1));
    Rat last = make_rat(int_pow(Int(2), m + 1), Int(n));
    return constants.scale * (first + factorial(m) * (mid + last));
}

ExpansionReport expand(const CountQuery& query, const Int& sqrt_slack,
                       const BoundConstants& constants) {
    if (query.n < 1 || query.m < 1) throw std::invalid_argument("n and m must be >= 1");
    ExpansionReport rep;
    rep.query = query;
    rep.exact_count = pi_q(query.q, query.n);
    rep.leading_term = expansion_term(query.q, query.n, 0);
    Rat sum = rep.leading_term;
    for (unsigned j = 1; j < query.m; ++j) {
        rep.correction_terms.push_back(expansion_term(query.q, query.n, j));
        sum += rep.correction_terms.back();
    }
    rep.remainder = Rat(rep.exact_count) - sum;
    rep.bound = remainder_bound(query.q, query.n, query.m, sqrt_slack, constants);
    rep.bound_holds = abs(rep.remainder) <= rep.bound;
    return rep;
}

Rat power_sum_closed(const PrimePower& q, unsigned j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    Rat sj = eval_stirling_poly(j, make_rat(Int(static_cast<long>(q.q)), Int(static_cast<long>(q.q - 1))));
    return sj / Rat(static_cast<long>(q.q - 1));
}

PollackCoefficient pollack_coefficient(const PrimePower& p, unsigned j, unsigned K) {
    if (j < 1 || K < 1) throw std::invalid_argument("j and K must be >= 1");
    PollackCoefficient pc;
    pc.p = p;
    pc.j = j;
    pc.partial_sums.reserve(K);
    Rat acc = 0;
    for (unsigned k = 1; k <= K; ++k) {
        acc += make_rat(int_pow(Int(k), j - 1), ipow_i64(p.q, k - 1));
        pc.partial_sums.push_back(acc);
    }
    if (j == 1)
        pc.closed_form = make_rat(Int(static_cast<long>(p.q)), Int(static_cast<long>(p.q - 1)));
    else
        pc.closed_form = Rat(static_cast<long>(p.q)) * power_sum_closed(p, j - 1);
    return pc;
}

Rat pollack_tail_majorant(const PrimePower& p, unsigned j, unsigned K) {
    if (j < 1 || K < 1) throw std::invalid_argument("j and K must be >= 1");
    Int num = int_pow(Int(K + 1), j - 1) * ipow_i64(p.q, j);
    Int den = int_pow(Int(static_cast<long>(p.q - 1)), j) * ipow_i64(p.q, K - 1);
    return make_rat(num, den);
}

Rat ks_leading(const PrimePower& q, unsigned n) { return expansion_term(q, n, 0); }

Rat wang_kan_two_term(const PrimePower& q, unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Int x = ipow_i64(q.q, n);
    Rat first = make_rat(q.q * x, Int(static_cast<long>(q.q - 1)) * n);
    Rat second = make_rat(q.q * x, int_pow(Int(static_cast<long>(q.q - 1)), 2) * Int(n) * Int(n));
    return first + second;
}

Rat ks_relative_gap(const PrimePower& q, unsigned n) {
    return abs(Rat(pi_q(q, n)) / ks_leading(q, n) - 1);
}

std::vector<BoundCell> verify_bound_grid(const std::vector<PrimePower>& qs, unsigned n_lo,
                                         unsigned n_hi, unsigned m_lo, unsigned m_hi,
                                         const Int& sqrt_slack, const BoundConstants& constants) {
    if (n_lo < 1 || m_lo < 1 || n_lo > n_hi || m_lo > m_hi)
        throw std::invalid_argument("empty or invalid grid ranges");
    std::vector<BoundCell> cells;
    cells.reserve(qs.size() * (n_hi - n_lo + 1) * (m_hi - m_lo + 1));
    for (const PrimePower& q : qs) {
        Int pi = 0;
        for (unsigned k = 1; k < n_lo; ++k) pi += count_degree_exact(q, k);
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            pi += count_degree_exact(q, n);  // pi == pi_q(q, n): lower degrees pre-summed
            std::vector<Rat> prefix(m_hi + 1);  // prefix[m] = sum of terms j = 0..m-1
            prefix[0] = 0;
            for (unsigned j = 0; j < m_hi; ++j) prefix[j + 1] = prefix[j] + expansion_term(q, n, j);
            for (unsigned m = m_lo; m <= m_hi; ++m) {
                BoundCell cell;
                cell.q = q;
                cell.n = n;
                cell.m = m;
                cell.exact = pi;
                cell.remainder = Rat(pi) - prefix[m];
                cell.bound = remainder_bound(q, n, m, sqrt_slack, constants);
                cell.holds = abs(cell.remainder) <= cell.bound;
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

std::vector<CheckRow> verify_proof_inequalities(const PrimePower& q, unsigned n_max,
                                                unsigned m_max) {
    if (n_max < 1 || m_max < 1) throw std::invalid_argument("n_max and m_max must be >= 1");
    std::vector<CheckRow> rows;
    const std::int64_t qi = q.q;
    const std::vector<Int> qpow = power_table(qi, n_max + 1);

    // sandwich: q^k - 2 q^(k/2) <= S_k <= q^k, the left side squared to
    // (q^k - S_k)^2 <= 4 q^k (valid once S_k <= q^k is known)
    for (unsigned k = 1; k <= n_max; ++k) {
        Int sk = 0;
        for (std::int64_t d : divisors(static_cast<std::int64_t>(k)))
            sk += mobius(static_cast<std::int64_t>(k) / d) * qpow[static_cast<unsigned>(d)];
        Int diff = qpow[k] - sk;
        bool pass = diff >= 0 && diff * diff <= 4 * qpow[k];
        rows.push_back({"sandwich", qi, k, 0, pass});
    }

    // partial_sum_55: running sum A + B sqrt(q) of q^(k/2)/k, compared with
    // 5.5 q^(n/2)/n through the surd sign rule
    {
        Rat A = 0, B = 0;
        for (unsigned n = 1; n <= n_max; ++n) {
            if (n % 2 == 0)
                A += make_rat(qpow[n / 2], Int(n));
            else
                B += make_rat(qpow[(n - 1) / 2], Int(n));
            Rat C = 0, D = 0;
            if (n % 2 == 0)
                C = make_rat(11 * qpow[n / 2], 2 * Int(n));
            else
                D = make_rat(11 * qpow[(n - 1) / 2], 2 * Int(n));
            bool pass = surd_nonneg(C - A, D - B, Int(static_cast<long>(qi)));
            rows.push_back({"partial_sum_55", qi, n, 0, pass});
        }
    }

    // power_sum: sum_k k^m/q^k <= m! q^m/(q-1)^(m+1)
    for (unsigned m = 1; m <= m_max; ++m) {
        Rat rhs = make_rat(factorial(m) * qpow[m], int_pow(Int(static_cast<long>(qi - 1)), m + 1));
        rows.push_back({"power_sum", qi, 0, m, power_sum_closed(q, m) <= rhs});
    }

    // split_sum: n sum_{k<n} k^m q^(n-1-k)/(n-k) <= 3^(m+3) m! q^(n-2),
    // cleared of denominators with L = lcm(1..n-1)
    {
        std::vector<std::vector<Int>> kpow(m_max + 1);
        for (unsigned m = 1; m <= m_max; ++m) {
            kpow[m].resize(n_max);
            for (unsigned k = 1; k < n_max; ++k) kpow[m][k] = int_pow(Int(k), m);
        }
        Int L = 1;
        std::vector<Int> weight;  // q^(n-1-k) * (L / (n-k)) for k = 1..n-1
        for (unsigned n = 1; n <= n_max; ++n) {
            if (n >= 2) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), n - 1);
            if (n == 1) {
                for (unsigned m = 1; m <= m_max; ++m)
                    rows.push_back({"split_sum", qi, n, m, true});  // empty sum
                continue;
            }
            weight.assign(n, Int(0));
            for (unsigned k = 1; k < n; ++k) weight[k] = qpow[n - 1 - k] * (L / (n - k));
            for (unsigned m = 1; m <= m_max; ++m) {
                Int lhs = 0;
                for (unsigned k = 1; k < n; ++k) lhs += kpow[m][k] * weight[k];
                lhs *= n;
                Int rhs = int_pow(Int(3), m + 3) * factorial(m) * qpow[n - 2] * L;
                rows.push_back({"split_sum", qi, n, m, lhs <= rhs});
            }
        }
    }

    // numeric_ratio: (0.75q/(0.75q-1))^(m+1) = (3q/(3q-4))^(m+1) <= 3^(m+1)
    for (unsigned m = 1; m <= m_max; ++m) {
        Rat base = make_rat(Int(3 * static_cast<long>(qi)), Int(3 * static_cast<long>(qi) - 4));
        bool pass = rat_pow(base, m + 1) <= Rat(int_pow(Int(3), m + 1));
        rows.push_back({"numeric_ratio", qi, 0, m, pass});
    }

    // numeric_decay: n/1.3^(n/2) <= 3, squared to n^2 10^n <= 9 * 13^n
    for (unsigned n = 1; n <= n_max; ++n) {
        bool pass = Int(n) * Int(n) * int_pow(Int(10), n) <= 9 * int_pow(Int(13), n);
        rows.push_back({"numeric_decay", qi, n, 0, pass});
    }

    return rows;
}

std::vector<CheckRow> verify_wang_kan(const PrimePower& q, unsigned n_max) {
    std::vector<CheckRow> rows;
    Rat target = make_rat(Int(static_cast<long>(q.q)),
                          int_pow(Int(static_cast<long>(q.q - 1)), 2));
    for (unsigned n = 1; n <= n_max; ++n) {
        Rat t0 = expansion_term(q, n, 0);
        Rat t1 = expansion_term(q, n, 1);
        rows.push_back({"wang_kan_sum", q.q, n, 0, wang_kan_two_term(q, n) == t0 + t1});
        Rat coeff = t1 * Int(n) * Int(n) / Rat(ipow_i64(q.q, n));
        rows.push_back({"wang_kan_coefficient", q.q, n, 0, coeff == target});
    }
    return rows;
}

std::vector<CheckRow> verify_pollack(const PrimePower& p, unsigned j_max, unsigned K) {
    std::vector<CheckRow> rows;
    for (unsigned j = 1; j <= j_max; ++j) {
        PollackCoefficient pc = pollack_coefficient(p, j, K);
        bool mono = true, bounded = true;
        for (std::size_t t = 0; t < pc.partial_sums.size(); ++t) {
            if (t > 0 && pc.partial_sums[t] < pc.partial_sums[t - 1]) mono = false;
            if (pc.partial_sums[t] > pc.closed_form) bounded = false;
        }
        rows.push_back({"pollack_monotone", p.q, 0, j, mono && bounded});
        Rat tail = pc.closed_form - pc.partial_sums.back();
        rows.push_back({"pollack_tail", p.q, 0, j, tail >= 0 && tail <= pollack_tail_majorant(p, j, K)});
    }
    return rows;
}

const std::vector<PrimePower>& certification_field_sizes() {
    static const std::vector<PrimePower> qs = [] {
        std::vector<PrimePower> v;
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) v.push_back(PrimePower::from_q(q));
        return v;
    }();
    return qs;
}

}  // namespace ffpnt
