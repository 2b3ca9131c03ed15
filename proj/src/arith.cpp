#include "ffpnt/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace ffpnt {

Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
    // powers of a canonical rational are canonical already
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int floor_sqrt(const Int& x) {
    if (x < 0) throw std::invalid_argument("floor_sqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: argument must be >= 1");
    int sign = 1;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be >= 1");
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d) high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

// Row-by-row table of S(n,k); rows[n][k] for 0 <= k <= n.
std::vector<std::vector<Int>>& stirling_rows() {
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    return rows;
}
std::mutex stirling_mutex;

void extend_stirling_rows(unsigned n) {
    auto& rows = stirling_rows();
    while (rows.size() <= n) {
        unsigned r = static_cast<unsigned>(rows.size());
        std::vector<Int> row(r + 1);
        row[0] = 0;
        for (unsigned k = 1; k < r; ++k)
            row[k] = Int(k) * rows[r - 1][k] + rows[r - 1][k - 1];
        row[r] = 1;
        rows.push_back(std::move(row));
    }
}

// t (t-1) ... (t-k+1), exact, any sign of t.
Int falling_factorial(const Int& t, unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= t - static_cast<long>(i);
    return r;
}

}  // namespace

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(stirling_mutex);
    extend_stirling_rows(n);
    return stirling_rows()[n][k];
}

bool stirling2_defining_identity_check(unsigned n, const Int& t) {
    // t^n == sum_k k! S(n,k) binom(t,k) == sum_k S(n,k) * t(t-1)...(t-k+1)
    Int rhs = 0;
    for (unsigned k = 0; k <= n; ++k)
        rhs += stirling2(n, k) * falling_factorial(t, k);
    Int lhs;
    mpz_pow_ui(lhs.get_mpz_t(), t.get_mpz_t(), n);
    return lhs == rhs;
}

StirlingPoly stirling_poly(unsigned j) {
    StirlingPoly p;
    p.j = j;
    p.coeffs.resize(j + 1);
    Int kfact = 1;
    for (unsigned k = 0; k <= j; ++k) {
        if (k > 0) kfact *= k;
        Int c = kfact * stirling2(j, k);
        p.coeffs[k] = ((j - k) % 2 == 0) ? c : -c;
    }
    return p;
}

Rat eval_stirling_poly(unsigned j, const Rat& x) {
    StirlingPoly p = stirling_poly(j);
    Rat acc(p.coeffs[j]);
    for (unsigned k = j; k-- > 0;) {
        acc *= x;
        acc += Rat(p.coeffs[k]);
    }
    return acc;
}

bool surd_nonneg(const Rat& a, const Rat& b, const Int& s) {
    if (s < 0) throw std::invalid_argument("surd_nonneg: negative radicand");
    if (a >= 0 && b >= 0) return true;
    if (a < 0 && b <= 0) return false;
    Rat a2 = a * a;
    Rat b2s = b * b * Rat(s);
    if (b < 0) return a2 >= b2s;  // a >= |b| sqrt(s)
    return b2s >= a2;             // b sqrt(s) >= |a|
}

Rat sqrt_upper_rational(const Int& x, const Int& slack_denominator) {
    if (x < 0) throw std::invalid_argument("sqrt_upper_rational: negative argument");
    if (slack_denominator < 1)
        throw std::invalid_argument("sqrt_upper_rational: slack denominator must be >= 1");
    Int root = floor_sqrt(x);
    if (root * root == x) return Rat(root);  // exact
    Int scaled = x * slack_denominator * slack_denominator;
    return make_rat(floor_sqrt(scaled) + 1, slack_denominator);
}

std::string decimal_string(const Rat& v, unsigned sig_digits) {
    if (sig_digits == 0) throw std::invalid_argument("decimal_string: need at least one digit");
    if (v == 0) return "0";
    Int a = abs(v.get_num());
    const Int& b = v.get_den();

    // decimal exponent e with 10^e * b <= a < 10^(e+1) * b
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto pow10 = [](unsigned long k) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
        return t;
    };
    auto cmp_shifted = [&](long exp) {
        // sign of a - 10^exp * b
        if (exp >= 0) return cmp(a, pow10(static_cast<unsigned long>(exp)) * b);
        return cmp(a * pow10(static_cast<unsigned long>(-exp)), b);
    };
    while (cmp_shifted(e) < 0) --e;
    while (cmp_shifted(e + 1) >= 0) ++e;

    long shift = static_cast<long>(sig_digits) - 1 - e;
    Int mant;
    if (shift >= 0)
        mant = a * pow10(static_cast<unsigned long>(shift)) / b;
    else
        mant = a / (b * pow10(static_cast<unsigned long>(-shift)));

    std::string digits = mant.get_str();
    std::string out;
    if (sgn(v) < 0) out += '-';
    out += digits[0];
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += (e < 0) ? '-' : '+';
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out += es;
    return out;
}

}  // namespace ffpnt
