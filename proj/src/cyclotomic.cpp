#include "superq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace superq {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int nd = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<Int> quot(nd - dd + 1);
    for (int k = nd - dd; k >= 0; --k) {
        Int c = num[dd + k] / den[dd];
        quot[k] = c;
        for (int i = 0; i <= dd; ++i) num[i + k] -= c * den[i];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

// Phi_d via Phi_d(q) = (q^d - 1) / prod_{e|d, e<d} Phi_e(q).
std::vector<Int> cyclotomic_poly(int d) {
    std::vector<Int> num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly(e));
    }
    return num;
}

} // namespace

const FieldContext& FieldContext::get(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, std::unique_ptr<FieldContext>(new FieldContext(d))).first;
    return *it->second;
}

FieldContext::FieldContext(int d) : d_(d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    phi_ = cyclotomic_poly(d);
    degree_ = (int)phi_.size() - 1;
    // q^(degree+k) mod Phi for every k a product or a q-power shift can
    // produce: products reach q^(2 degree - 2), shifts reach q^(degree+d-2).
    int rows = std::max(degree_ - 1, d - 1);
    red_rows_.assign(rows, {});
    std::vector<Int> cur(degree_);
    for (int i = 0; i < degree_; ++i) cur[i] = -phi_[i];
    if (rows > 0) red_rows_[0] = cur;
    for (int k = 1; k < rows; ++k) {
        std::vector<Int> next(degree_);
        for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
        Int top = cur[degree_ - 1];
        for (int i = 0; i < degree_; ++i) next[i] -= top * phi_[i];
        red_rows_[k] = next;
        cur = std::move(next);
    }
}

Scalar::Scalar(const FieldContext& ctx, const Rat& constant) : ctx_(&ctx), c_(ctx.degree()) {
    c_[0] = constant;
    c_[0].canonicalize();
}

Scalar::Scalar(const FieldContext& ctx, std::vector<Rat> coeffs) : ctx_(&ctx) {
    for (Rat& c : coeffs) c.canonicalize(); // guard against raw num/den input
    if ((int)coeffs.size() <= ctx.degree()) {
        coeffs.resize(ctx.degree());
        c_ = std::move(coeffs);
    } else {
        reduce(coeffs);
        c_ = std::move(coeffs);
    }
}

void Scalar::reduce(std::vector<Rat>& raw) const {
    int n = ctx_->degree();
    for (int k = (int)raw.size() - 1; k >= n; --k) {
        if (raw[k] == 0) continue;
        const auto& row = ctx_->reduction_row(k - n);
        for (int i = 0; i < n; ++i)
            if (row[i] != 0) raw[i] += raw[k] * row[i];
        raw[k] = 0;
    }
    raw.resize(n);
}

bool Scalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar r(*ctx_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r(*this);
    r += o;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r(*this);
    r -= o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
    int n = ctx_->degree();
    std::vector<Rat> raw(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    Scalar r(*ctx_);
    r.reduce(raw);
    r.c_ = std::move(raw);
    return r;
}

bool Scalar::operator==(const Scalar& o) const { return c_ == o.c_; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    int n = ctx_->degree();
    // Extended Euclid in Q[q] for gcd(this, Phi_d) = 1.
    std::vector<Rat> r0(n + 1), r1 = c_, s0(n + 1), s1(n + 1);
    for (int i = 0; i <= n; ++i) r0[i] = Rat(ctx_->phi()[i]);
    s1[0] = 1;
    auto deg = [](const std::vector<Rat>& p) {
        for (int i = (int)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("Phi_d not coprime with nonzero scalar");
        if (d1 == 0) break;
        int d0 = deg(r0);
        while (d0 >= d1) {
            Rat f = r0[d0] / r1[d1];
            for (int i = 0; i <= d1; ++i) r0[i + d0 - d1] -= f * r1[i];
            for (int i = 0; i + d0 - d1 <= n; ++i) s0[i + d0 - d1] -= f * s1[i];
            d0 = deg(r0);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    Rat lead = r1[0];
    std::vector<Rat> out(n);
    for (int i = 0; i < n; ++i) out[i] = s1[i] / lead;
    return Scalar(*ctx_, std::move(out));
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar acc = Scalar::one(*ctx_);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Scalar Scalar::times_q_power(long n) const {
    int d = ctx_->d();
    long e = ((n % d) + d) % d;
    int deg = ctx_->degree();
    std::vector<Rat> raw(deg + e);
    for (int i = 0; i < deg; ++i) raw[i + e] = c_[i];
    Scalar r(*ctx_);
    r.reduce(raw);
    r.c_ = std::move(raw);
    return r;
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace superq
