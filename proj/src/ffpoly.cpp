#include "ffpnt/ffpoly.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <ostream>
#include <sstream>

#include "ffpnt/parallel.hpp"

namespace ffpnt {

namespace {

using Elem = FieldContext::Elem;

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    mpz_class t(static_cast<long>(n));
    return mpz_probab_prime_p(t.get_mpz_t(), 32) > 0;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            ps.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

void trim(std::vector<Elem>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// ---------------------------------------------------------------------------
// raw polynomial layer: canonical coefficient vectors, no FieldPoly wrapping,
// reusable scratch buffers. The public operations and the enumeration loop
// both sit on top of these.
// ---------------------------------------------------------------------------

struct PolyScratch {
    std::vector<Elem> g, gn, h, f2, t1, t2, rem;
};

// dst = a * b mod f, f monic of degree n >= 1. dst must not alias a or b.
void mul_mod_raw(const FieldContext& F, const std::vector<Elem>& a, const std::vector<Elem>& b,
                 const std::vector<Elem>& f, int n, std::vector<Elem>& dst) {
    if (a.empty() || b.empty()) {
        dst.clear();
        return;
    }
    dst.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Elem ai = a[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) dst[i + j] = F.add(dst[i + j], F.mul(ai, b[j]));
    }
    for (int i = static_cast<int>(dst.size()) - 1; i >= n; --i) {
        Elem coef = dst[i];
        if (!coef) continue;
        dst[i] = 0;
        for (int j = 0; j < n; ++j)
            if (f[j]) dst[i - n + j] = F.sub(dst[i - n + j], F.mul(coef, f[j]));
    }
    if (static_cast<int>(dst.size()) > n) dst.resize(n);
    trim(dst);
}

// out = base^exp mod f (exp fits u64; used for Frobenius steps with exp = q).
void powmod_u64_raw(const FieldContext& F, const std::vector<Elem>& base, std::uint64_t exp,
                    const std::vector<Elem>& f, int n, std::vector<Elem>& out,
                    std::vector<Elem>& tmp) {
    if (exp == 0) {
        out.assign(1, 1);
        return;
    }
    int top = 63 - __builtin_clzll(exp);
    out = base;
    for (int bit = top - 1; bit >= 0; --bit) {
        mul_mod_raw(F, out, out, f, n, tmp);
        out.swap(tmp);
        if ((exp >> bit) & 1) {
            mul_mod_raw(F, out, base, f, n, tmp);
            out.swap(tmp);
        }
    }
}

// a = a mod b (b nonzero, not necessarily monic)
void rem_in_place(const FieldContext& F, std::vector<Elem>& a, const std::vector<Elem>& b) {
    int db = static_cast<int>(b.size()) - 1;
    Elem lead_inv = F.inv(b.back());
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        Elem coef = F.mul(a.back(), lead_inv);
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j)
            if (b[j]) a[shift + j] = F.sub(a[shift + j], F.mul(coef, b[j]));
        trim(a);
    }
}

// destroys both arguments; true iff gcd is a nonzero constant
bool gcd_is_one(const FieldContext& F, std::vector<Elem>& a, std::vector<Elem>& b) {
    while (!b.empty()) {
        rem_in_place(F, a, b);
        a.swap(b);
    }
    return a.size() == 1;
}

// f: monic, coefficient vector of size n+1 with f[n] == 1
bool rabin_raw(const FieldContext& F, const std::vector<Elem>& f, PolyScratch& ws) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return true;
    bool scanned_roots = false;
    if (F.q() <= 64) {
        for (Elem a = 0; a < static_cast<Elem>(F.q()); ++a) {
            Elem acc = 1;
            for (int i = n - 1; i >= 0; --i) acc = F.add(F.mul(acc, a), f[i]);
            if (acc == 0) return false;
        }
        scanned_roots = true;
    }
    int cps[16];
    int ncp = 0;
    {
        int m = n;
        for (int pf = 2; pf * pf <= m; ++pf) {
            if (m % pf == 0) {
                cps[ncp++] = n / pf;
                while (m % pf == 0) m /= pf;
            }
        }
        if (m > 1) cps[ncp++] = n / m;
        std::sort(cps, cps + ncp);
    }
    ws.g.assign(2, 0);
    ws.g[1] = 1;  // x, already reduced since n >= 2
    int ci = 0;
    if (scanned_roots)
        while (ci < ncp && cps[ci] == 1) ++ci;  // degree-1 factors already ruled out
    for (int t = 1; t <= n; ++t) {
        powmod_u64_raw(F, ws.g, static_cast<std::uint64_t>(F.q()), f, n, ws.gn, ws.t1);
        ws.g.swap(ws.gn);
        if (ci < ncp && cps[ci] == t) {
            ++ci;
            ws.h = ws.g;
            if (ws.h.size() < 2) ws.h.resize(2, 0);
            ws.h[1] = F.sub(ws.h[1], 1);
            trim(ws.h);
            if (ws.h.empty()) return false;  // gcd would be f itself
            ws.f2 = f;
            if (!gcd_is_one(F, ws.h, ws.f2)) return false;
        }
    }
    return ws.g.size() == 2 && ws.g[0] == 0 && ws.g[1] == 1;
}

// true iff the monic divisor given by low coefficients div[0..d-1] plus an
// implicit leading 1 divides f
bool monic_divides(const FieldContext& F, const std::vector<Elem>& f, const Elem* div, int d,
                   std::vector<Elem>& rem) {
    rem = f;
    for (int i = static_cast<int>(f.size()) - 1; i >= d; --i) {
        Elem coef = rem[i];
        if (!coef) continue;
        rem[i] = 0;
        for (int j = 0; j < d; ++j)
            if (div[j]) rem[i - d + j] = F.sub(rem[i - d + j], F.mul(coef, div[j]));
    }
    for (int j = 0; j < d; ++j)
        if (rem[j]) return false;
    return true;
}

bool trial_raw(const FieldContext& F, const std::vector<Elem>& f, PolyScratch& ws) {
    int n = static_cast<int>(f.size()) - 1;
    const Elem q = static_cast<Elem>(F.q());
    std::vector<Elem> div;
    for (int d = 1; d <= n / 2; ++d) {
        div.assign(d, 0);
        for (;;) {
            if (monic_divides(F, f, div.data(), d, ws.rem)) return false;
            int i = 0;
            while (i < d && div[i] == q - 1) div[i++] = 0;
            if (i == d) break;
            ++div[i];
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// F_2 fast path: polynomials as bit masks, squaring by bit spreading
// ---------------------------------------------------------------------------

namespace f2 {

constexpr std::array<std::uint16_t, 256> kSpread = [] {
    std::array<std::uint16_t, 256> t{};
    for (int i = 0; i < 256; ++i) {
        std::uint16_t v = 0;
        for (int b = 0; b < 8; ++b)
            if ((i >> b) & 1) v = static_cast<std::uint16_t>(v | (1u << (2 * b)));
        t[static_cast<std::size_t>(i)] = v;
    }
    return t;
}();

inline std::uint64_t square(std::uint64_t a) {
    return static_cast<std::uint64_t>(kSpread[a & 0xff]) |
           static_cast<std::uint64_t>(kSpread[(a >> 8) & 0xff]) << 16 |
           static_cast<std::uint64_t>(kSpread[(a >> 16) & 0xff]) << 32 |
           static_cast<std::uint64_t>(kSpread[(a >> 24) & 0xff]) << 48;
}

inline int deg(std::uint64_t a) { return 63 - __builtin_clzll(a); }

inline std::uint64_t mod_f(std::uint64_t a, std::uint64_t f, int n) {
    while (a >> n) a ^= f << (deg(a) - n);
    return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
        std::swap(a, b);
    }
    return a;
}

bool rabin(std::uint64_t f, int n, const int* cps, int ncp) {
    if (n == 1) return true;
    if (!(f & 1)) return false;                        // f(0) == 0
    if (__builtin_parityll(f) == 0) return false;      // f(1) == 0
    std::uint64_t g = 2;                               // x
    int ci = 0;
    while (ci < ncp && cps[ci] == 1) ++ci;             // linear factors handled above
    for (int t = 1; t <= n; ++t) {
        g = mod_f(square(g), f, n);
        if (ci < ncp && cps[ci] == t) {
            ++ci;
            std::uint64_t h = g ^ 2;
            if (h == 0 || gcd(h, f) != 1) return false;
        }
    }
    return g == 2;
}

}  // namespace f2

void require_valid_monic(const FieldPoly& f) {
    if (!f.ctx) throw std::invalid_argument("polynomial has no field context");
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("irreducibility test requires a monic polynomial of degree >= 1");
}

void require_same_field(const FieldPoly& a, const FieldPoly& b) {
    if (!a.ctx || !b.ctx || !a.ctx->same_field(*b.ctx))
        throw std::invalid_argument("operands belong to different fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimePower
// ---------------------------------------------------------------------------

PrimePower PrimePower::from_q(std::int64_t q) {
    if (q >= 2) {
        mpz_class Q(static_cast<long>(q));
        for (int e = 1; e <= 62; ++e) {
            mpz_class root;
            int exact = mpz_root(root.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(e));
            if (root < 2) break;
            if (exact && mpz_probab_prime_p(root.get_mpz_t(), 32) > 0)
                return PrimePower{q, root.get_si(), e};
        }
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

PrimePower PrimePower::from_pe(std::int64_t p, int e) {
    if (!is_prime_i64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("exponent must be >= 1");
    Int q = int_pow(Int(static_cast<long>(p)), static_cast<unsigned long>(e));
    if (!q.fits_slong_p()) throw std::invalid_argument("prime power overflows the supported range");
    return PrimePower{q.get_si(), p, e};
}

// ---------------------------------------------------------------------------
// FieldContext
// ---------------------------------------------------------------------------

FieldContext::FieldContext(PrimePower pp, std::vector<Elem> modulus)
    : pp_(pp), modulus_(std::move(modulus)) {
    if (pp_.e >= 2) build_log_tables();
}

FieldContext FieldContext::build(std::int64_t p, int e) {
    if (!is_prime_i64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kSizeCap)
            throw std::invalid_argument("field size exceeds the oracle cap 2^20");
    }
    PrimePower pp{q, p, e};
    if (e == 1) return FieldContext(pp, {});

    // lexicographically first monic irreducible of degree e over F_p,
    // coefficient vectors compared starting at the constant term
    FieldContext base(PrimePower{p, p, 1}, {});
    PolyScratch ws;
    std::vector<Elem> cand(static_cast<std::size_t>(e) + 1, 0);
    cand[static_cast<std::size_t>(e)] = 1;
    std::vector<std::int64_t> place(static_cast<std::size_t>(e));
    place[static_cast<std::size_t>(e) - 1] = 1;
    for (int i = e - 2; i >= 0; --i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i) + 1] * p;
    for (std::int64_t v = 0; v < q; ++v) {
        for (int i = 0; i < e; ++i)
            cand[static_cast<std::size_t>(i)] = static_cast<Elem>((v / place[static_cast<std::size_t>(i)]) % p);
        if (trial_raw(base, cand, ws))
            return FieldContext(pp, std::vector<Elem>(cand.begin(), cand.end() - 1));
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable: they always exist
}

FieldContext::Elem FieldContext::mul_digitwise(Elem a, Elem b) const {
    const std::uint64_t p = static_cast<std::uint64_t>(pp_.p);
    const int e = pp_.e;
    std::uint64_t da[20], db[20], acc[39];
    std::uint64_t ua = a, ub = b;
    for (int i = 0; i < e; ++i) {
        da[i] = ua % p;
        ua /= p;
        db[i] = ub % p;
        ub /= p;
    }
    std::memset(acc, 0, sizeof(std::uint64_t) * static_cast<std::size_t>(2 * e - 1));
    for (int i = 0; i < e; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < e; ++j) acc[i + j] += da[i] * db[j];
    }
    for (int i = 2 * e - 2; i >= e; --i) {
        std::uint64_t c = acc[i] % p;
        if (!c) continue;
        std::uint64_t nc = p - c;
        for (int j = 0; j < e; ++j) acc[i - e + j] += nc * modulus_[static_cast<std::size_t>(j)];
    }
    Elem r = 0;
    std::uint64_t shift = 1;
    for (int i = 0; i < e; ++i) {
        r += static_cast<Elem>((acc[i] % p) * shift);
        shift *= p;
    }
    return r;
}

void FieldContext::build_log_tables() {
    const std::int64_t q = pp_.q;
    auto pow_dw = [this](Elem base, std::int64_t exp) {
        Elem r = 1;
        Elem b = base;
        while (exp) {
            if (exp & 1) r = mul_digitwise(r, b);
            b = mul_digitwise(b, b);
            exp >>= 1;
        }
        return r;
    };
    Elem gen = 0;
    const auto primes = distinct_prime_factors(q - 1);
    for (std::int64_t cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (std::int64_t ell : primes) {
            if (pow_dw(static_cast<Elem>(cand), (q - 1) / ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = static_cast<Elem>(cand);
            break;
        }
    }
    exp_.resize(static_cast<std::size_t>(2 * (q - 1)));
    log_.assign(static_cast<std::size_t>(q), -1);
    Elem cur = 1;
    for (std::int64_t i = 0; i < q - 1; ++i) {
        exp_[static_cast<std::size_t>(i)] = cur;
        log_[cur] = static_cast<std::int32_t>(i);
        cur = mul_digitwise(cur, gen);
    }
    for (std::int64_t i = q - 1; i < 2 * (q - 1); ++i)
        exp_[static_cast<std::size_t>(i)] = exp_[static_cast<std::size_t>(i - (q - 1))];
}

FieldContext::Elem FieldContext::add(Elem a, Elem b) const {
    if (pp_.e == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= static_cast<std::uint64_t>(pp_.p) ? s - static_cast<std::uint64_t>(pp_.p) : s);
    }
    if (pp_.p == 2) return a ^ b;
    const Elem p = static_cast<Elem>(pp_.p);
    Elem r = 0, shift = 1, ua = a, ub = b;
    for (int i = 0; i < pp_.e; ++i) {
        Elem s = ua % p + ub % p;
        if (s >= p) s -= p;
        r += s * shift;
        shift *= p;
        ua /= p;
        ub /= p;
    }
    return r;
}

FieldContext::Elem FieldContext::neg(Elem a) const {
    if (pp_.e == 1) return a == 0 ? 0 : static_cast<Elem>(pp_.p) - a;
    if (pp_.p == 2) return a;
    const Elem p = static_cast<Elem>(pp_.p);
    Elem r = 0, shift = 1, ua = a;
    for (int i = 0; i < pp_.e; ++i) {
        Elem d = ua % p;
        if (d) d = p - d;
        r += d * shift;
        shift *= p;
        ua /= p;
    }
    return r;
}

FieldContext::Elem FieldContext::sub(Elem a, Elem b) const {
    if (pp_.e == 1) {
        return a >= b ? a - b : a + static_cast<Elem>(pp_.p) - b;
    }
    if (pp_.p == 2) return a ^ b;
    return add(a, neg(b));
}

FieldContext::Elem FieldContext::mul(Elem a, Elem b) const {
    if (pp_.e == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % static_cast<std::uint64_t>(pp_.p));
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + static_cast<std::size_t>(log_[b])];
}

FieldContext::Elem FieldContext::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (pp_.e == 1) {
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = pp_.p, newr = a;
        while (newr != 0) {
            std::int64_t quo = r / newr;
            t = std::exchange(newt, t - quo * newt);
            r = std::exchange(newr, r - quo * newr);
        }
        if (t < 0) t += pp_.p;
        return static_cast<Elem>(t);
    }
    std::int64_t l = log_[a];
    return exp_[static_cast<std::size_t>((pp_.q - 1 - l) % (pp_.q - 1))];
}

std::vector<FieldContext::Elem> FieldContext::to_digits(Elem a) const {
    std::vector<Elem> d(static_cast<std::size_t>(pp_.e));
    const Elem p = static_cast<Elem>(pp_.p);
    for (int i = 0; i < pp_.e; ++i) {
        d[static_cast<std::size_t>(i)] = a % p;
        a /= p;
    }
    return d;
}

FieldContext::Elem FieldContext::from_digits(const std::vector<Elem>& digits) const {
    if (digits.size() != static_cast<std::size_t>(pp_.e))
        throw std::invalid_argument("digit vector has wrong length");
    Elem r = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= static_cast<Elem>(pp_.p)) throw std::invalid_argument("digit out of range");
        r = r * static_cast<Elem>(pp_.p) + digits[i];
    }
    return r;
}

bool FieldContext::same_field(const FieldContext& other) const {
    if (this == &other) return true;
    return pp_ == other.pp_ && modulus_ == other.modulus_;
}

// ---------------------------------------------------------------------------
// FieldPoly
// ---------------------------------------------------------------------------

FieldPoly FieldPoly::zero(const FieldContext& ctx) { return FieldPoly{&ctx, {}}; }

FieldPoly FieldPoly::one(const FieldContext& ctx) { return FieldPoly{&ctx, {1}}; }

FieldPoly FieldPoly::x(const FieldContext& ctx) { return FieldPoly{&ctx, {0, 1}}; }

FieldPoly FieldPoly::from_coeffs(const FieldContext& ctx, std::vector<FieldContext::Elem> coeffs) {
    for (Elem c : coeffs)
        if (c >= static_cast<Elem>(ctx.q())) throw std::invalid_argument("coefficient out of range");
    trim(coeffs);
    return FieldPoly{&ctx, std::move(coeffs)};
}

std::ostream& operator<<(std::ostream& os, const FieldPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Elem c = f.c[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            if (c != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os;
}

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b) {
    require_same_field(a, b);
    const FieldContext& F = *a.ctx;
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return FieldPoly{&F, std::move(r)};
}

FieldPoly poly_sub(const FieldPoly& a, const FieldPoly& b) {
    require_same_field(a, b);
    const FieldContext& F = *a.ctx;
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(r);
    return FieldPoly{&F, std::move(r)};
}

FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b) {
    require_same_field(a, b);
    const FieldContext& F = *a.ctx;
    if (a.is_zero() || b.is_zero()) return FieldPoly::zero(F);
    std::vector<Elem> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    trim(r);
    return FieldPoly{&F, std::move(r)};
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& a, const FieldPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const FieldContext& F = *a.ctx;
    int db = b.degree();
    if (a.degree() < db) return {FieldPoly::zero(F), a};
    std::vector<Elem> rem = a.c;
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    Elem lead_inv = F.inv(b.c.back());
    for (int i = a.degree(); i >= db; --i) {
        Elem coef = rem[static_cast<std::size_t>(i)];
        if (!coef) continue;
        coef = F.mul(coef, lead_inv);
        quo[static_cast<std::size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j)
            if (b.c[static_cast<std::size_t>(j)])
                rem[static_cast<std::size_t>(i - db + j)] =
                    F.sub(rem[static_cast<std::size_t>(i - db + j)], F.mul(coef, b.c[static_cast<std::size_t>(j)]));
    }
    trim(rem);
    trim(quo);
    return {FieldPoly{&F, std::move(quo)}, FieldPoly{&F, std::move(rem)}};
}

FieldPoly poly_gcd(const FieldPoly& a, const FieldPoly& b) {
    require_same_field(a, b);
    const FieldContext& F = *a.ctx;
    std::vector<Elem> u = a.c, v = b.c;
    while (!v.empty()) {
        rem_in_place(F, u, v);
        u.swap(v);
    }
    if (!u.empty() && u.back() != 1) {
        Elem s = F.inv(u.back());
        for (Elem& c : u) c = F.mul(c, s);
    }
    return FieldPoly{&F, std::move(u)};
}

FieldPoly poly_powmod(const FieldPoly& base, const Int& exponent, const FieldPoly& modulus) {
    require_same_field(base, modulus);
    if (modulus.degree() < 1) throw std::invalid_argument("powmod modulus must have degree >= 1");
    if (exponent < 0) throw std::invalid_argument("powmod exponent must be >= 0");
    const FieldContext& F = *base.ctx;
    int n = modulus.degree();
    std::vector<Elem> b = poly_divmod(base, modulus).second.c;
    std::vector<Elem> r{1}, tmp;
    std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    if (exponent == 0) return FieldPoly{&F, std::move(r)};
    for (std::size_t i = bits; i-- > 0;) {
        mul_mod_raw(F, r, r, modulus.c, n, tmp);
        r.swap(tmp);
        if (mpz_tstbit(exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            mul_mod_raw(F, r, b, modulus.c, n, tmp);
            r.swap(tmp);
        }
    }
    return FieldPoly{&F, std::move(r)};
}

bool is_irreducible_trial(const FieldPoly& f) {
    require_valid_monic(f);
    PolyScratch ws;
    return trial_raw(*f.ctx, f.c, ws);
}

bool is_irreducible_rabin(const FieldPoly& f) {
    require_valid_monic(f);
    PolyScratch ws;
    return rabin_raw(*f.ctx, f.c, ws);
}

Int count_irreducible_bruteforce(const FieldContext& ctx, unsigned n, std::int64_t budget,
                                 unsigned threads) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    Int total_z = int_pow(Int(static_cast<long>(ctx.q())), n);
    if (total_z > budget)
        throw BudgetExceeded("enumeration budget exceeded: q^n = " + total_z.get_str() +
                             " > " + std::to_string(budget));
    const std::uint64_t total = total_z.get_ui();
    std::atomic<std::uint64_t> count{0};

    if (ctx.q() == 2 && n <= 31) {
        int cps[16];
        int ncp = 0;
        int m = static_cast<int>(n);
        for (int pf = 2; pf * pf <= m; ++pf)
            if (m % pf == 0) {
                cps[ncp++] = static_cast<int>(n) / pf;
                while (m % pf == 0) m /= pf;
            }
        if (m > 1) cps[ncp++] = static_cast<int>(n) / m;
        std::sort(cps, cps + ncp);
        parallel_chunks(0, total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t local = 0;
            const std::uint64_t top = 1ull << n;
            for (std::uint64_t idx = lo; idx < hi; ++idx)
                if (f2::rabin(top | idx, static_cast<int>(n), cps, ncp)) ++local;
            count.fetch_add(local, std::memory_order_relaxed);
        });
        return Int(static_cast<unsigned long>(count.load()));
    }

    const Elem q = static_cast<Elem>(ctx.q());
    parallel_chunks(0, total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        PolyScratch ws;
        std::vector<Elem> f(n + 1, 0);
        f[n] = 1;
        std::uint64_t v = lo;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = static_cast<Elem>(v % q);
            v /= q;
        }
        std::uint64_t local = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (rabin_raw(ctx, f, ws)) ++local;
            unsigned i = 0;
            while (i < n && f[i] == q - 1) f[i++] = 0;
            if (i < n) ++f[i];
        }
        count.fetch_add(local, std::memory_order_relaxed);
    });
    return Int(static_cast<unsigned long>(count.load()));
}

}  // namespace ffpnt
