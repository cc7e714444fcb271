#include "ccr/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ccr {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- polynomial helpers over Q (dense, constant term first) ----

void poly_trim(std::vector<Rational>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// exact division f / g (g monic up to leading unit); remainder must be zero
std::vector<Rational> poly_div_exact(std::vector<Rational> f, const std::vector<Rational>& g) {
    poly_trim(f);
    std::vector<Rational> q;
    if (f.size() < g.size()) {
        if (!f.empty()) throw MathError("poly_div_exact: nonzero remainder");
        return q;
    }
    q.assign(f.size() - g.size() + 1, Rational(0));
    const Rational& lead = g.back();
    for (size_t i = f.size(); i-- >= g.size();) {
        Rational c = f[i] / lead;
        q[i - (g.size() - 1)] = c;
        if (c != 0)
            for (size_t j = 0; j < g.size(); ++j) f[i - (g.size() - 1) + j] -= c * g[j];
        if (i == 0) break;
    }
    poly_trim(f);
    if (!f.empty()) throw MathError("poly_div_exact: nonzero remainder");
    return q;
}

// f mod g in place (g monic)
void poly_mod(std::vector<Rational>& f, const std::vector<Rational>& g) {
    poly_trim(f);
    while (f.size() >= g.size()) {
        Rational c = f.back() / g.back();
        size_t off = f.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j) f[off + j] -= c * g[j];
        poly_trim(f);
    }
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// extended gcd over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic
struct XGcd {
    std::vector<Rational> g, s, t;
};
XGcd poly_xgcd(std::vector<Rational> a, std::vector<Rational> b) {
    std::vector<Rational> s0{Rational(1)}, s1, t0, t1{Rational(1)};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // quotient of a by b
        std::vector<Rational> q, r = a;
        if (r.size() >= b.size()) {
            q.assign(r.size() - b.size() + 1, Rational(0));
            while (r.size() >= b.size()) {
                Rational c = r.back() / b.back();
                size_t off = r.size() - b.size();
                q[off] = c;
                for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
                poly_trim(r);
            }
        }
        auto comb = [&q](const std::vector<Rational>& x0, const std::vector<Rational>& x1) {
            auto qx1 = poly_mul(q, x1);
            std::vector<Rational> out = x0;
            if (out.size() < qx1.size()) out.resize(qx1.size(), Rational(0));
            for (size_t i = 0; i < qx1.size(); ++i) out[i] -= qx1[i];
            poly_trim(out);
            return out;
        };
        auto ns = comb(s0, s1), nt = comb(t0, t1);
        a = b;
        b = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (a.empty()) throw MathError("poly_xgcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
    return {a, s0, t0};
}

long fp_norm(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = fp_norm(a, p);
    if (nr == 0) throw MathError("division by zero in F_p");
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return fp_norm(t, p);
}

}  // namespace

long euler_phi(long m) {
    if (m < 1) throw InputError("euler_phi: m must be positive");
    long r = m;
    long n = m;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

const std::vector<Rational>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Rational>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
    // without re-locking: build all needed divisors iteratively.
    std::vector<long> todo{m};
    for (size_t i = 0; i < todo.size(); ++i)
        for (long d = 1; d <= todo[i]; ++d)
            if (todo[i] % d == 0 && !cache.count(d) &&
                std::find(todo.begin(), todo.end(), d) == todo.end())
                todo.push_back(d);
    std::sort(todo.begin(), todo.end());
    for (long k : todo) {
        if (cache.count(k)) continue;
        std::vector<Rational> num(k + 1, Rational(0));
        num[0] = -1;
        num[k] = 1;  // x^k - 1
        for (long d = 1; d < k; ++d)
            if (k % d == 0) num = poly_div_exact(num, cache.at(d));
        cache.emplace(k, std::move(num));
    }
    return cache.at(m);
}

FieldSpec FieldSpec::Fp(long p) {
    if (!is_prime(p)) throw InputError("prime field modulus must be prime, got " + std::to_string(p));
    FieldSpec f;
    f.kind = Kind::PrimeField;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::Cyc(long m) {
    if (m < 1) throw InputError("cyclotomic conductor must be >= 1");
    FieldSpec f;
    f.kind = Kind::Cyclotomic;
    f.m = m;
    return f;
}

std::string FieldSpec::str() const {
    switch (kind) {
        case Kind::Rational: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(p);
        case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(m) + ")";
    }
    return "?";
}

FieldSpec Scalar::field() const {
    FieldSpec f;
    f.kind = kind_;
    f.p = p_;
    f.m = m_;
    return f;
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
    return from_rational(f, Rational(v));
}

Scalar Scalar::from_rational(const FieldSpec& f, const Rational& v) {
    Scalar s;
    s.kind_ = f.kind;
    s.p_ = f.p;
    s.m_ = f.m;
    switch (f.kind) {
        case Kind::Rational: s.q_ = v; break;
        case Kind::PrimeField: {
            long num = fp_norm(static_cast<long>(mpz_fdiv_ui(v.get_num().get_mpz_t(), f.p)), f.p);
            long den = fp_norm(static_cast<long>(mpz_fdiv_ui(v.get_den().get_mpz_t(), f.p)), f.p);
            if (den == 0) throw MathError("rational with denominator divisible by p in F_p");
            s.r_ = fp_norm(num * fp_inv(den, f.p) % f.p, f.p);
            break;
        }
        case Kind::Cyclotomic:
            s.c_.assign(euler_phi(f.m), Rational(0));
            s.c_[0] = v;
            break;
    }
    return s;
}

Scalar Scalar::fp(long p, long r) {
    FieldSpec f = FieldSpec::Fp(p);
    Scalar s;
    s.kind_ = Kind::PrimeField;
    s.p_ = p;
    s.m_ = f.m;
    s.r_ = fp_norm(r, p);
    return s;
}

Scalar Scalar::cyc(long m, std::vector<Rational> coeffs) {
    FieldSpec f = FieldSpec::Cyc(m);
    poly_mod(coeffs, cyclotomic_polynomial(m));
    coeffs.resize(euler_phi(m), Rational(0));
    Scalar s;
    s.kind_ = Kind::Cyclotomic;
    s.m_ = m;
    s.p_ = f.p;
    s.c_ = std::move(coeffs);
    return s;
}

Scalar Scalar::root_of_unity(const FieldSpec& f, long d, long e) {
    if (d < 1) throw InputError("root_of_unity: order must be >= 1");
    long r = ((e % d) + d) % d;
    switch (f.kind) {
        case Kind::Rational:
            if (d == 1 || r == 0) return one(f);
            if (d == 2) return from_int(f, -1);
            throw TypeError("root of unity of order " + std::to_string(d) +
                            " does not live in Q; use a cyclotomic field");
        case Kind::Cyclotomic: {
            if (f.m % d != 0)
                throw TypeError("zeta_" + std::to_string(d) + " does not embed in " + f.str());
            long expo = r * (f.m / d);
            std::vector<Rational> c(expo + 1, Rational(0));
            c[expo] = 1;
            return cyc(f.m, std::move(c));
        }
        case Kind::PrimeField:
            throw TypeError("root_of_unity is not provided over prime fields");
    }
    throw TypeError("root_of_unity: bad field");
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
    if (kind_ != o.kind_ || p_ != o.p_ || m_ != o.m_)
        throw TypeError(std::string("scalar ") + op + " across different coefficient fields: " +
                        field().str() + " vs " + o.field().str());
}

bool Scalar::is_zero() const {
    switch (kind_) {
        case Kind::Rational: return q_ == 0;
        case Kind::PrimeField: return r_ == 0;
        case Kind::Cyclotomic:
            return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field()); }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o, "addition");
    Scalar s = *this;
    switch (kind_) {
        case Kind::Rational: s.q_ += o.q_; break;
        case Kind::PrimeField: s.r_ = (r_ + o.r_) % p_; break;
        case Kind::Cyclotomic:
            for (size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
            break;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    switch (kind_) {
        case Kind::Rational: s.q_ = -q_; break;
        case Kind::PrimeField: s.r_ = r_ == 0 ? 0 : p_ - r_; break;
        case Kind::Cyclotomic:
            for (auto& c : s.c_) c = -c;
            break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o, "multiplication");
    Scalar s = *this;
    switch (kind_) {
        case Kind::Rational: s.q_ *= o.q_; break;
        case Kind::PrimeField: s.r_ = (r_ * o.r_) % p_; break;  // p < 2^31, fits
        case Kind::Cyclotomic: {
            auto prod = poly_mul(c_, o.c_);
            poly_mod(prod, cyclotomic_polynomial(m_));
            prod.resize(c_.size(), Rational(0));
            s.c_ = std::move(prod);
            break;
        }
    }
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw MathError("division by zero (" + field().str() + ")");
    Scalar s = *this;
    switch (kind_) {
        case Kind::Rational: s.q_ = 1 / q_; break;
        case Kind::PrimeField: s.r_ = fp_inv(r_, p_); break;
        case Kind::Cyclotomic: {
            std::vector<Rational> f = c_;
            poly_trim(f);
            XGcd x = poly_xgcd(f, cyclotomic_polynomial(m_));
            if (x.g.size() != 1) throw MathError("cyclotomic inverse: gcd not constant");
            // s*f + t*Phi = 1  =>  f^{-1} = s mod Phi
            poly_mod(x.s, cyclotomic_polynomial(m_));
            x.s.resize(c_.size(), Rational(0));
            s.c_ = std::move(x.s);
            break;
        }
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Scalar acc = one(field());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o, "comparison");
    switch (kind_) {
        case Kind::Rational: return q_ == o.q_;
        case Kind::PrimeField: return r_ == o.r_;
        case Kind::Cyclotomic: return c_ == o.c_;
    }
    return false;
}

int Scalar::cmp(const Scalar& o) const {
    require_same_field(o, "ordering");
    switch (kind_) {
        case Kind::Rational: return ::cmp(q_, o.q_);
        case Kind::PrimeField: return r_ < o.r_ ? -1 : r_ > o.r_ ? 1 : 0;
        case Kind::Cyclotomic:
            for (size_t i = 0; i < c_.size(); ++i) {
                int c = ::cmp(c_[i], o.c_[i]);
                if (c != 0) return c;
            }
            return 0;
    }
    return 0;
}

std::optional<long> Scalar::as_integer() const {
    switch (kind_) {
        case Kind::PrimeField: return r_;
        case Kind::Rational:
            if (q_.get_den() != 1 || !q_.get_num().fits_slong_p()) return std::nullopt;
            return q_.get_num().get_si();
        case Kind::Cyclotomic: {
            auto r = as_rational();
            if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
            return r->get_num().get_si();
        }
    }
    return std::nullopt;
}

std::optional<Rational> Scalar::as_rational() const {
    switch (kind_) {
        case Kind::Rational: return q_;
        case Kind::PrimeField: return std::nullopt;
        case Kind::Cyclotomic:
            for (size_t i = 1; i < c_.size(); ++i)
                if (c_[i] != 0) return std::nullopt;
            return c_.empty() ? Rational(0) : c_[0];
    }
    return std::nullopt;
}

std::string Scalar::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Rational: os << q_.get_str(); break;
        case Kind::PrimeField: os << r_; break;
        case Kind::Cyclotomic: {
            bool first = true;
            for (size_t i = 0; i < c_.size(); ++i) {
                if (c_[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0) {
                    os << c_[i].get_str();
                } else {
                    if (c_[i] != 1) os << c_[i].get_str() << "*";
                    os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
                }
            }
            if (first) os << "0";
            break;
        }
    }
    return os.str();
}

}  // namespace ccr
