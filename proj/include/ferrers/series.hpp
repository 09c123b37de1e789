#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ferrers/errors.hpp"

namespace ferrers {

using Int = boost::multiprecision::cpp_int;

// c * y^a z^b q^d; all exponents may be negative.
struct Monomial {
    Int coeff = 0;
    int y = 0;
    int z = 0;
    int q = 0;
};

Monomial mono(long long coeff, int y, int z, int q);
Monomial operator*(const Monomial&, const Monomial&);
Monomial mono_pow(const Monomial&, int n);  // n >= 0

// Laurent polynomial in y and z with Int coefficients, keys sorted by
// (y-exponent, z-exponent).  No zero coefficients are stored.
class YZPoly {
public:
    using Key = std::pair<int, int>;

    YZPoly() = default;
    static YZPoly constant(Int c);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant(const Int& c) const;
    const std::map<Key, Int>& terms() const noexcept { return terms_; }

    void add(const Key& k, const Int& c);

    YZPoly& operator+=(const YZPoly&);
    YZPoly& operator-=(const YZPoly&);
    YZPoly negated() const;
    friend YZPoly operator*(const YZPoly&, const YZPoly&);

    friend bool operator==(const YZPoly&, const YZPoly&) = default;

    std::string str() const;

private:
    std::map<Key, Int> terms_;
};

// Order of values that are exact polynomials rather than truncations.
inline constexpr int kExactOrder = 1 << 28;

// Truncated Laurent series in q whose coefficients are YZPoly values.
// order() is the largest q-degree the series is exact to (inclusive); terms
// above it are never stored.  Arithmetic propagates exactness honestly: the
// order of a product is min(Nf + dmin(g), Ng + dmin(f)), which equals the
// common order whenever both supports start at q-degree >= 0.
class LaurentSeries {
public:
    explicit LaurentSeries(int order);
    static LaurentSeries zero(int order) { return LaurentSeries(order); }
    static LaurentSeries constant(const Int& c, int order);
    static LaurentSeries from_monomial(const Monomial& m, int order = kExactOrder);

    int order() const noexcept { return order_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Smallest stored q-degree; order()+1 for the zero series.
    int min_degree() const noexcept;
    const std::map<int, YZPoly>& terms() const noexcept { return terms_; }

    // Zero polynomial when no term of that degree is stored; throws
    // order_error above the truncation order.
    const YZPoly& at(int qdeg) const;
    Int coefficient(int qdeg, int y, int z) const;

    // Accumulate c*y^a z^b q^qdeg; degrees above order() are dropped.
    void add_term(int qdeg, int y, int z, const Int& c);
    void add_poly(int qdeg, const YZPoly& p);

    LaurentSeries truncated(int new_order) const;

    friend LaurentSeries operator+(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries operator-(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries operator*(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries operator*(const LaurentSeries&, const Monomial&);

    // Defined only between series of equal truncation order.
    friend bool operator==(const LaurentSeries&, const LaurentSeries&);

private:
    int order_;
    std::map<int, YZPoly> terms_;
};

// Finite product prod_{k=0}^{n-1} (1 - a q^{step*k}) truncated to the given
// order.
LaurentSeries poch(const Monomial& a, int step, int n, int order);

// Infinite product; requires the q-degree of a to be positive so that all
// but finitely many factors are 1 at the truncation order.
LaurentSeries poch_inf(const Monomial& a, int step, int order);

// Inverse of a series with support starting at q-degree 0 and constant
// coefficient +-1.
LaurentSeries geom_inverse(const LaurentSeries& f, int order);

// Sum of term(0) + term(1) + ... truncated at the given order.  min_qdeg
// must be a nondecreasing certified lower bound on the q-degree of term n;
// exactly the n with min_qdeg(n) <= order are summed.
LaurentSeries sum_series(const std::function<LaurentSeries(int)>& term,
                         const std::function<long long(int)>& min_qdeg,
                         int order);

// q -> -q, applied coefficient-wise.
LaurentSeries substitute_q_negate(const LaurentSeries&);

// y -> y_image, z -> z_image where the images are q-free monomials with
// coefficient +-1.
LaurentSeries substitute_yz(const LaurentSeries&, const Monomial& y_image,
                            const Monomial& z_image);

// Deterministic text form: one "q^d: poly" line per stored degree,
// ascending, with the poly terms sorted by (y,z).
std::string to_canonical_text(const LaurentSeries&);

}  // namespace ferrers
