#include "cherednik/cyclotomic.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cherednik {

namespace {

// Exact division of integer polynomials (low degree first); divisor monic.
std::vector<long> poly_divide(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long coef = num[i];
        q[i - dn] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
    }
    return q;
}

// Q(zeta_{2m}) = Q(zeta_m) for m odd; keep conductors off 2 mod 4.
int normal_conductor(int n) {
    if (n % 4 == 2) return n / 2;
    return n;
}

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n) {
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = poly_divide(p, get(d).cyclo_);
    }
    cyclo_ = p;
    phi_ = static_cast<int>(cyclo_.size()) - 1;

    powers_.resize(static_cast<std::size_t>(n));
    std::vector<long> cur(static_cast<std::size_t>(phi_), 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        powers_[static_cast<std::size_t>(k)] = cur;
        // multiply by z, reduce with z^phi = -sum cyclo_i z^i
        long top = cur[static_cast<std::size_t>(phi_ - 1)];
        for (int i = phi_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        for (int i = 0; i < phi_; ++i) cur[static_cast<std::size_t>(i)] -= top * cyclo_[static_cast<std::size_t>(i)];
    }
}

namespace {

const CyclotomicField* rationals() {
    static const CyclotomicField* q = &CyclotomicField::get(1);
    return q;
}

}  // namespace

const CyclotomicField& CyclotomicField::get(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    thread_local std::map<int, const CyclotomicField*> local;
    if (auto it = local.find(n); it != local.end()) return *it->second;
    const CyclotomicField& f = lookup(n);
    local.emplace(n, &f);
    return f;
}

const CyclotomicField& CyclotomicField::lookup(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = fields.find(n);
        if (it != fields.end()) return *it->second;
    }
    // Construction may recurse into get() for divisors, so build unlocked.
    auto f = std::unique_ptr<CyclotomicField>(new CyclotomicField(n));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = fields.emplace(n, std::move(f));
    return *it->second;
}

const std::vector<long>& CyclotomicField::power(long k) const {
    long r = k % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------

Cyc::Cyc() : field_(rationals()), c_(1) {}
Cyc::Cyc(long v) : field_(rationals()), c_{Rational(v)} {}
Cyc::Cyc(const Rational& q) : field_(rationals()), c_{q} { c_[0].canonicalize(); }
Cyc::Cyc(long num, long den) : field_(rationals()), c_{Rational(num, den)} {
    if (den == 0) throw std::domain_error("zero denominator");
    c_[0].canonicalize();
}

Cyc::Cyc(const CyclotomicField* f, std::vector<Rational> c) : field_(f), c_(std::move(c)) {
    for (auto& q : c_) q.canonicalize();
    normalize();
}

Cyc Cyc::root_of_unity(int n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    const int m = normal_conductor(n);
    if (m != n) {
        // n = 2m, m odd: zeta_n = -zeta_m^{(m+1)/2}
        long kk = k % n;
        if (kk < 0) kk += n;
        Cyc r = root_of_unity(m, kk * ((m + 1) / 2));
        return (kk % 2 == 1) ? -r : r;
    }
    const auto& f = CyclotomicField::get(n);
    const auto& p = f.power(k);
    std::vector<Rational> c(p.begin(), p.end());
    return Cyc(&f, std::move(c));
}

Cyc Cyc::from_coefficients(int n, std::vector<Rational> coeffs) {
    const auto& f = CyclotomicField::get(n);
    if (static_cast<int>(coeffs.size()) != f.degree())
        throw std::invalid_argument("from_coefficients: wrong coefficient count");
    if (normal_conductor(n) != n) {
        Cyc acc;
        for (int j = 0; j < f.degree(); ++j)
            if (coeffs[static_cast<std::size_t>(j)] != 0) acc += Cyc(coeffs[static_cast<std::size_t>(j)]) * root_of_unity(n, j);
        return acc;
    }
    return Cyc(&f, std::move(coeffs));
}

void Cyc::normalize() {
    if (field_->conductor() == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rational q = c_[0];
    field_ = &CyclotomicField::get(1);
    c_.assign(1, q);
}

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

const Rational& Cyc::rational() const {
    if (!is_rational()) throw std::domain_error("Cyc::rational on irrational value " + to_string());
    return c_[0];
}

Cyc Cyc::embed(int n) const {
    const int from = field_->conductor();
    if (n % from != 0) throw std::invalid_argument("embed: target conductor not a multiple");
    if (n == from) return *this;
    const auto& g = CyclotomicField::get(n);
    const long step = n / from;
    std::vector<Rational> out(static_cast<std::size_t>(g.degree()));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = g.power(static_cast<long>(j) * step);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) out[i] += c_[j] * p[i];
    }
    Cyc r;
    r.field_ = &g;
    r.c_ = std::move(out);
    return r;  // not normalized on purpose: caller operates in Q(zeta_n)
}

void Cyc::align(Cyc& other) {
    const int a = field_->conductor();
    const int b = other.field_->conductor();
    if (a == b) return;
    const int l = std::lcm(a, b);
    if (a != l) *this = embed(l);
    if (b != l) other = other.embed(l);
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.is_rational()) {
        c_[0] += o.c_[0];
        normalize();
        return *this;
    }
    Cyc b = o;
    align(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    normalize();
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (o.is_rational()) {
        c_[0] -= o.c_[0];
        normalize();
        return *this;
    }
    Cyc b = o;
    align(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    normalize();
    return *this;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_rational()) {
        if (a.c_[0] == 0) return Cyc();
        Cyc r = b;
        for (auto& q : r.c_) q *= a.c_[0];
        return r;
    }
    if (b.is_rational()) {
        if (b.c_[0] == 0) return Cyc();
        Cyc r = a;
        for (auto& q : r.c_) q *= b.c_[0];
        return r;
    }
    Cyc x = a, y = b;
    x.align(y);
    const auto& f = *x.field_;
    const int phi = f.degree();
    std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (x.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (y.c_[static_cast<std::size_t>(j)] == 0) continue;
            prod[static_cast<std::size_t>(i + j)] += x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        const auto& q = prod[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        const auto& p = f.power(k);
        for (int i = 0; i < phi; ++i)
            if (p[static_cast<std::size_t>(i)] != 0) out[static_cast<std::size_t>(i)] += q * p[static_cast<std::size_t>(i)];
    }
    return Cyc(&f, std::move(out));
}

Cyc& Cyc::operator*=(const Cyc& o) {
    *this = *this * o;
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) {
    *this = *this * o.inverse();
    return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.field_ == b.field_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

Cyc Cyc::conj() const {
    if (is_rational()) return *this;
    const auto& f = *field_;
    const int n = f.conductor();
    std::vector<Rational> out(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = f.power(n - static_cast<long>(j));
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) out[i] += c_[j] * p[i];
    }
    return Cyc(field_, std::move(out));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse of zero");
    if (is_rational()) return Cyc(Rational(1) / c_[0]);
    // Solve (multiplication by *this) v = e_0 over Q.
    const auto& f = *field_;
    const int phi = f.degree();
    const auto sz = static_cast<std::size_t>(phi);
    std::vector<std::vector<Rational>> m(sz, std::vector<Rational>(sz + 1));
    for (int j = 0; j < phi; ++j) {
        Cyc col = *this * Cyc(&f, [&] {
            std::vector<Rational> e(sz);
            e[static_cast<std::size_t>(j)] = 1;
            return e;
        }());
        Cyc full = col.embed(f.conductor());
        for (std::size_t i = 0; i < sz; ++i) m[i][static_cast<std::size_t>(j)] = full.c_[i];
    }
    m[0][sz] = 1;
    for (std::size_t col = 0, row = 0; col < sz; ++col, ++row) {
        std::size_t piv = row;
        while (piv < sz && m[piv][col] == 0) ++piv;
        if (piv == sz) throw std::logic_error("Cyc::inverse: singular multiplication map");
        std::swap(m[piv], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& q : m[row]) q *= inv;
        for (std::size_t r = 0; r < sz; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational fct = m[r][col];
            for (std::size_t k = col; k <= sz; ++k) m[r][k] -= fct * m[row][k];
        }
    }
    std::vector<Rational> out(sz);
    for (std::size_t i = 0; i < sz; ++i) out[i] = m[i][sz];
    return Cyc(field_, std::move(out));
}

std::string Cyc::to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    const int n = field_->conductor();
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& q = c_[k];
        if (q == 0) continue;
        Rational a = abs(q);
        if (q < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (k == 0)
            os << a.get_str();
        else
            os << a.get_str() << "*z" << n << "^" << k;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& z) { return os << z.to_string(); }

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Cyc parse() {
        Cyc v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar \"" + std::string(s_) + "\": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    Cyc expr() {
        skip();
        Cyc acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
    Cyc term() {
        Cyc acc = factor();
        for (;;) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/'))
                acc /= factor();
            else
                break;
        }
        return acc;
    }
    Cyc factor() {
        skip();
        if (eat('(')) {
            Cyc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && s_[pos_] == 'z') {
            ++pos_;
            long n = integer();
            if (n < 1) fail("bad conductor");
            long k = 1;
            if (eat('^')) k = integer();
            return Cyc::root_of_unity(static_cast<int>(n), k);
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Cyc(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Cyc Cyc::parse(std::string_view text) { return ScalarParser(text).parse(); }

double Cyc::real_approx() const {
    const double n = field_->conductor();
    double v = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) v += c_[k].get_d() * std::cos(2 * std::numbers::pi * static_cast<double>(k) / n);
    return v;
}

double Cyc::imag_approx() const {
    const double n = field_->conductor();
    double v = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) v += c_[k].get_d() * std::sin(2 * std::numbers::pi * static_cast<double>(k) / n);
    return v;
}

std::pair<int, long> root_of_unity_form(const Cyc& z) {
    const int n = z.conductor();
    const int l = std::lcm(2, n);
    for (long j = 0; j < l; ++j) {
        if (Cyc::root_of_unity(l, j) == z) {
            const long g = std::gcd(j, static_cast<long>(l));
            const long m = l / g;
            return {static_cast<int>(m), j / g};
        }
    }
    throw std::domain_error("not a root of unity: " + z.to_string());
}

Cyc sqrt_root_of_unity(const Cyc& z) {
    auto [m, k] = root_of_unity_form(z);
    return Cyc::root_of_unity(2 * m, k);
}

Sign certified_sign(const Cyc& z) {
    if (z.is_zero()) return Sign::zero;
    if (z != z.conj()) throw std::domain_error("certified_sign: value is not real: " + z.to_string());
    if (z.is_rational()) return z.rational() > 0 ? Sign::positive : Sign::negative;

    const auto& c = z.coefficients();
    const long n = z.conductor();
    Rational abs_sum = 0;
    for (const auto& q : c) abs_sum += abs(q);

    for (mpfr_prec_t prec = 64; prec <= 16384; prec *= 2) {
        mpfr_t acc, term, arg, q;
        mpfr_inits2(prec, acc, term, arg, q, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(acc, 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            mpfr_const_pi(arg, MPFR_RNDN);
            mpfr_mul_ui(arg, arg, 2 * static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_div_ui(arg, arg, static_cast<unsigned long>(n), MPFR_RNDN);
            mpfr_cos(term, arg, MPFR_RNDN);
            mpfr_set_q(q, c[k].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term, term, q, MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
        }
        // Every term carries O(2^-prec) relative error from pi, the argument
        // scaling, cos, the coefficient conversion and the product; each
        // addition adds another. 2^10 covers the bookkeeping with room.
        mpfr_t bound;
        mpfr_init2(bound, 64);
        mpfr_set_q(bound, abs_sum.get_mpq_t(), MPFR_RNDU);
        mpfr_mul_ui(bound, bound, static_cast<unsigned long>(c.size()) + 16, MPFR_RNDU);
        mpfr_mul_2si(bound, bound, -static_cast<long>(prec) + 10, MPFR_RNDU);
        const int cmp = mpfr_cmpabs(acc, bound);
        const int sgn = mpfr_sgn(acc);
        mpfr_clears(acc, term, arg, q, bound, static_cast<mpfr_ptr>(nullptr));
        if (cmp > 0) return sgn > 0 ? Sign::positive : Sign::negative;
    }
    throw std::runtime_error("certified_sign: precision ladder exhausted for " + z.to_string());
}

}  // namespace cherednik
