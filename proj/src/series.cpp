#include "ferrers/series.hpp"

#include <algorithm>
#include <sstream>

namespace ferrers {

namespace {

long long clamp_order(long long v)
{
    return std::min<long long>(v, kExactOrder);
}

std::string power_str(const char* var, int e)
{
    std::ostringstream out;
    out << var;
    if (e != 1) out << '^' << e;
    return out.str();
}

}  // namespace

Monomial mono(long long coeff, int y, int z, int q)
{
    return Monomial{Int(coeff), y, z, q};
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    return Monomial{a.coeff * b.coeff, a.y + b.y, a.z + b.z, a.q + b.q};
}

Monomial mono_pow(const Monomial& m, int n)
{
    if (n < 0) throw domain_error("mono_pow: negative exponent");
    Monomial out = mono(1, 0, 0, 0);
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

YZPoly YZPoly::constant(Int c)
{
    YZPoly p;
    if (c != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
}

bool YZPoly::is_constant(const Int& c) const
{
    if (c == 0) return is_zero();
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == c;
}

void YZPoly::add(const Key& k, const Int& c)
{
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

YZPoly& YZPoly::operator+=(const YZPoly& o)
{
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

YZPoly& YZPoly::operator-=(const YZPoly& o)
{
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

YZPoly YZPoly::negated() const
{
    YZPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

YZPoly operator*(const YZPoly& a, const YZPoly& b)
{
    YZPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

std::string YZPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1 || (k.first == 0 && k.second == 0))
            factors.push_back(mag.str());
        if (k.first != 0) factors.push_back(power_str("y", k.first));
        if (k.second != 0) factors.push_back(power_str("z", k.second));
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << '*';
            out << factors[i];
        }
    }
    return out.str();
}

LaurentSeries::LaurentSeries(int order) : order_(order) {}

LaurentSeries LaurentSeries::constant(const Int& c, int order)
{
    LaurentSeries s(order);
    s.add_term(0, 0, 0, c);
    return s;
}

LaurentSeries LaurentSeries::from_monomial(const Monomial& m, int order)
{
    LaurentSeries s(order);
    s.add_term(m.q, m.y, m.z, m.coeff);
    return s;
}

int LaurentSeries::min_degree() const noexcept
{
    return terms_.empty() ? order_ + 1 : terms_.begin()->first;
}

const YZPoly& LaurentSeries::at(int qdeg) const
{
    if (qdeg > order_)
        throw order_error("series access above truncation order");
    static const YZPoly zero_poly;
    auto it = terms_.find(qdeg);
    return it == terms_.end() ? zero_poly : it->second;
}

Int LaurentSeries::coefficient(int qdeg, int y, int z) const
{
    const YZPoly& p = at(qdeg);
    auto it = p.terms().find({y, z});
    return it == p.terms().end() ? Int(0) : it->second;
}

void LaurentSeries::add_term(int qdeg, int y, int z, const Int& c)
{
    if (qdeg > order_ || c == 0) return;
    auto& poly = terms_[qdeg];
    poly.add({y, z}, c);
    if (poly.is_zero()) terms_.erase(qdeg);
}

void LaurentSeries::add_poly(int qdeg, const YZPoly& p)
{
    if (qdeg > order_ || p.is_zero()) return;
    auto& poly = terms_[qdeg];
    poly += p;
    if (poly.is_zero()) terms_.erase(qdeg);
}

LaurentSeries LaurentSeries::truncated(int new_order) const
{
    if (new_order > order_)
        throw order_error("cannot truncate to a higher order");
    LaurentSeries out(new_order);
    for (const auto& [d, p] : terms_) {
        if (d > new_order) break;
        out.terms_.emplace(d, p);
    }
    return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
{
    LaurentSeries out(std::min(a.order_, b.order_));
    for (const auto& [d, p] : a.terms_) out.add_poly(d, p);
    for (const auto& [d, p] : b.terms_) out.add_poly(d, p);
    return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b)
{
    LaurentSeries out(std::min(a.order_, b.order_));
    for (const auto& [d, p] : a.terms_) out.add_poly(d, p);
    for (const auto& [d, p] : b.terms_) out.add_poly(d, p.negated());
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    const long long da = a.is_zero() ? a.order_ + 1LL : a.min_degree();
    const long long db = b.is_zero() ? b.order_ + 1LL : b.min_degree();
    const long long ord =
        std::min(clamp_order(a.order_ + db), clamp_order(b.order_ + da));
    LaurentSeries out(static_cast<int>(clamp_order(ord)));
    for (const auto& [dx, px] : a.terms_) {
        for (const auto& [dy, py] : b.terms_) {
            if (static_cast<long long>(dx) + dy > out.order_) break;
            out.add_poly(dx + dy, px * py);
        }
    }
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const Monomial& m)
{
    if (m.coeff == 0)
        return LaurentSeries(static_cast<int>(clamp_order(
            static_cast<long long>(a.order_) + m.q)));
    LaurentSeries out(static_cast<int>(clamp_order(
        static_cast<long long>(a.order_) + m.q)));
    for (const auto& [d, p] : a.terms_) {
        YZPoly shifted;
        for (const auto& [k, c] : p.terms())
            shifted.add({k.first + m.y, k.second + m.z}, c * m.coeff);
        out.add_poly(d + m.q, shifted);
    }
    return out;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    if (a.order_ != b.order_)
        throw order_error("comparing series of different truncation orders");
    return a.terms_ == b.terms_;
}

LaurentSeries poch(const Monomial& a, int step, int n, int order)
{
    if (step < 1) throw domain_error("poch: step must be positive");
    if (n < 0) throw domain_error("poch: negative factor count");
    if (a.coeff == 0 || n == 0)
        return LaurentSeries::constant(1, order);

    // Factors whose monomial sits at negative q-degree shrink the exact
    // order of the running product; start high enough that the final result
    // is still exact at the requested order.
    long long slack = 0;
    for (int k = 0; k < n; ++k) {
        long long shift = a.q + static_cast<long long>(step) * k;
        if (shift >= 0) break;
        slack += -shift;
    }
    LaurentSeries result =
        LaurentSeries::constant(1, static_cast<int>(clamp_order(order + slack)));
    for (int k = 0; k < n; ++k) {
        long long shift = a.q + static_cast<long long>(step) * k;
        if (shift > result.order()) break;  // all further factors are 1 here
        LaurentSeries factor = LaurentSeries::constant(1, kExactOrder);
        factor.add_term(static_cast<int>(shift), a.y, a.z, -a.coeff);
        result = result * factor;
    }
    if (result.order() < order)
        throw order_error("poch: internal order underflow");
    return result.truncated(order);
}

LaurentSeries poch_inf(const Monomial& a, int step, int order)
{
    if (step < 1) throw domain_error("poch_inf: step must be positive");
    if (a.coeff == 0) return LaurentSeries::constant(1, order);
    if (a.q <= 0)
        throw nonconvergent_error(
            "poch_inf: factor monomial must have positive q-degree");
    if (a.q > order) return LaurentSeries::constant(1, order);
    const int n = (order - a.q) / step + 1;
    return poch(a, step, n, order);
}

LaurentSeries geom_inverse(const LaurentSeries& f, int order)
{
    if (f.order() < order)
        throw order_error("geom_inverse: series not exact to requested order");
    if (f.is_zero() || f.min_degree() != 0)
        throw not_invertible_error("geom_inverse: support must start at q^0");
    const YZPoly& c0 = f.at(0);
    Int unit;
    if (c0.is_constant(1))
        unit = 1;
    else if (c0.is_constant(-1))
        unit = -1;
    else
        throw not_invertible_error("geom_inverse: constant term is not a unit");

    // f*g = 1 gives g_d = -unit * sum_{k=1..d} f_k g_{d-k} with g_0 = unit.
    std::vector<YZPoly> g(static_cast<size_t>(order) + 1);
    g[0] = YZPoly::constant(unit);
    for (int d = 1; d <= order; ++d) {
        YZPoly acc;
        for (int k = 1; k <= d; ++k) {
            const YZPoly& fk = f.at(k);
            if (fk.is_zero()) continue;
            acc += fk * g[static_cast<size_t>(d - k)];
        }
        if (unit == 1) acc = acc.negated();
        g[static_cast<size_t>(d)] = std::move(acc);
    }
    LaurentSeries out(order);
    for (int d = 0; d <= order; ++d) out.add_poly(d, g[static_cast<size_t>(d)]);
    return out;
}

LaurentSeries sum_series(const std::function<LaurentSeries(int)>& term,
                         const std::function<long long(int)>& min_qdeg,
                         int order)
{
    const int cap = 8 * (order + 2) + 64;
    LaurentSeries acc(kExactOrder);
    long long prev = min_qdeg(0);
    for (int n = 0;; ++n) {
        const long long bound = min_qdeg(n);
        if (bound < prev)
            throw divergence_guard_error("sum_series: degree bound decreased");
        prev = bound;
        if (bound > order) break;
        if (n > cap)
            throw divergence_guard_error(
                "sum_series: degree bound did not clear the order in time");
        acc = acc + term(n);
    }
    if (acc.order() < order)
        throw order_error("sum_series: terms were not exact to requested order");
    return acc.truncated(order);
}

LaurentSeries substitute_q_negate(const LaurentSeries& f)
{
    LaurentSeries out(f.order());
    for (const auto& [d, p] : f.terms())
        out.add_poly(d, (d % 2 == 0) ? p : p.negated());
    return out;
}

LaurentSeries substitute_yz(const LaurentSeries& f, const Monomial& y_image,
                            const Monomial& z_image)
{
    if (y_image.q != 0 || z_image.q != 0)
        throw domain_error("substitute_yz: images must be q-free");
    if ((y_image.coeff != 1 && y_image.coeff != -1) ||
        (z_image.coeff != 1 && z_image.coeff != -1))
        throw domain_error("substitute_yz: image coefficients must be +-1");
    LaurentSeries out(f.order());
    for (const auto& [d, p] : f.terms()) {
        for (const auto& [k, c] : p.terms()) {
            const auto [a, b] = k;
            Int sign = 1;
            if (y_image.coeff == -1 && a % 2 != 0) sign = -sign;
            if (z_image.coeff == -1 && b % 2 != 0) sign = -sign;
            out.add_term(d, a * y_image.y + b * z_image.y,
                         a * y_image.z + b * z_image.z, c * sign);
        }
    }
    return out;
}

std::string to_canonical_text(const LaurentSeries& f)
{
    if (f.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [d, p] : f.terms())
        out << "q^" << d << ": " << p.str() << '\n';
    return out.str();
}

}  // namespace ferrers
