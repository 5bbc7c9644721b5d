#pragma once

// Exact arithmetic for codimension certificates.
//
// Certified inequalities have the shape
//
//     log2(b)  <=  f^k( log2(a) )         f(x) = x*(x+1)
//
// with a, b positive integers. When a is a power of two the right side is an
// exact integer and the comparison reduces to integer arithmetic. Otherwise
// log2(a) is irrational; the comparison is decided with exact rational
// enclosures of log2 obtained by binary digit extraction (square, compare
// with 2, halve) carried out in integer fixed point with directed rounding.
// Enclosures are refined until the two sides separate. No floating point is
// involved anywhere.

#include "kmforge/bigint.hpp"
#include "kmforge/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kmforge {

// f^k as a polynomial with non-negative integer coefficients, degree 2^k.
// poly[i] is the coefficient of x^i.
using Poly = std::vector<BigInt>;

inline Poly bound_poly(int k) {
    Poly p = {0, 1};
    for (int step = 0; step < k; ++step) {
        Poly sq(2 * p.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                sq[i + j] += p[i] * p[j];
        for (std::size_t i = 0; i < p.size(); ++i) sq[i] += p[i];
        p = std::move(sq);
    }
    return p;
}

// Exact integer iterate f^k(x), x >= 0.
inline BigInt f_iter(int k, BigInt x) {
    for (int i = 0; i < k; ++i) x = x * (x + 1);
    return x;
}

struct RatInterval {
    BigRat lo, hi;  // lo <= value <= hi
};

// Rational enclosure of log2(a), a >= 1. Width is at most 2^(1-frac_bits)
// except in the (never yet observed) case where digit extraction stalls on a
// value too close to a dyadic rational; the enclosure is still correct then,
// just wider, and callers refine with more bits.
inline RatInterval log2_bounds(const BigInt& a, long frac_bits) {
    if (a <= 0) throw CertificateError("log2 of non-positive value");
    long m = static_cast<long>(bit_length(a)) - 1;
    if (is_power_of_two(a)) return {BigRat(static_cast<long>(m)), BigRat(static_cast<long>(m))};

    const long P = frac_bits + 64;
    // y = a / 2^m in (1,2), tracked as [lo,hi] scaled by 2^P with outward rounding
    BigInt lo = (a << P) >> m;
    BigInt hi = lo + 1;
    const BigInt thr = BigInt(1) << (P + 1);  // represents 2.0
    BigInt acc = 0;
    long bits = 0;
    for (long i = 0; i < frac_bits; ++i) {
        lo = (lo * lo) >> P;
        hi = ((hi * hi) >> P) + 1;
        if (lo >= thr) {          // both tracks certainly >= 2: next bit is 1
            lo >>= 1;
            hi = (hi + 1) >> 1;
            acc = (acc << 1) + 1;
            ++bits;
        } else if (hi < thr) {    // both tracks certainly < 2: next bit is 0
            acc <<= 1;
            ++bits;
        } else {
            break;                // tracks straddle 2; stop with a wider enclosure
        }
    }
    // true fraction = 0.b1..b_bits + 2^-bits * log2(y_final), y_final in [1,4)
    BigRat den(BigInt(1) << bits);
    BigRat flo = BigRat(acc) / den;
    BigRat fhi = BigRat(acc + 2) / den;
    return {BigRat(static_cast<long>(m)) + flo, BigRat(static_cast<long>(m)) + fhi};
}

// Interval evaluation; valid because every coefficient and the argument are
// non-negative, so the polynomial is monotone on the interval.
inline RatInterval poly_eval(const Poly& p, const RatInterval& x) {
    BigRat lo(0), hi(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        lo = lo * x.lo + BigRat(p[i]);
        hi = hi * x.hi + BigRat(p[i]);
    }
    return {lo, hi};
}

// An exact codimension value: either a small integer (PRank, or Log2Index of
// a power-of-two index) or log2 of an integer index.
struct CodimValue {
    bool integral = true;
    BigInt int_value = 0;  // when integral
    BigInt log_arg = 1;    // value = log2(log_arg) when !integral

    static CodimValue integer(BigInt v) { return {true, std::move(v), 1}; }
    static CodimValue log2_of(BigInt arg) {
        if (is_power_of_two(arg))
            return {true, BigInt(static_cast<long>(bit_length(arg)) - 1), 1};
        CodimValue c;
        c.integral = false;
        c.int_value = 0;
        c.log_arg = std::move(arg);
        return c;
    }
    // the value as log2 of an integer (2^v for integral values)
    BigInt as_log_arg() const {
        if (!integral) return log_arg;
        if (int_value < 0 || int_value > 4096)
            throw CertificateError("codim value out of range");
        return BigInt(1) << int_value.get_ui();
    }
    std::string str() const {
        if (integral) return int_value.get_str();
        return "log2(" + log_arg.get_str() + ")";
    }
    bool operator==(const CodimValue& o) const {
        return integral == o.integral && int_value == o.int_value && log_arg == o.log_arg;
    }
};

namespace detail {
inline const long kPrecisionSchedule[] = {48, 96, 192, 384, 768};
}

// Decides  lhs <= f^k(base)  exactly.
inline bool codim_leq_bound(const CodimValue& lhs, int k, const CodimValue& base) {
    if (base.integral) {
        BigInt rhs = f_iter(k, base.int_value);
        if (lhs.integral) return lhs.int_value <= rhs;
        return leq_pow2(lhs.log_arg, rhs);  // log2(b) <= R  <=>  b <= 2^R
    }
    BigInt b = lhs.as_log_arg();
    if (b == 1) return true;  // lhs == 0, rhs >= 0
    Poly p = bound_poly(k);
    for (long prec : detail::kPrecisionSchedule) {
        RatInterval ai = log2_bounds(base.log_arg, prec);
        RatInterval rhs = poly_eval(p, ai);
        RatInterval li = log2_bounds(b, prec);
        if (li.hi <= rhs.lo) return true;
        if (li.lo > rhs.hi) return false;
    }
    throw CertificateError("exact log comparison did not separate");
}

// Decides  c <= base  exactly (c a non-negative integer).
inline bool int_leq_codim(const BigInt& c, const CodimValue& base) {
    if (base.integral) return c <= base.int_value;
    // c <= log2(a)  <=>  2^c <= a  <=>  c + 1 <= bit_length(a)
    return c + 1 <= static_cast<long>(bit_length(base.log_arg));
}

// Decides  x <= y  exactly.
inline bool codim_leq(const CodimValue& x, const CodimValue& y) {
    if (x.integral) return int_leq_codim(x.int_value, y);
    if (y.integral) return leq_pow2(x.log_arg, y.int_value);  // log2(a) <= r  <=>  a <= 2^r
    return x.log_arg <= y.log_arg;
}

// Exact sum: log2(a) + log2(b) = log2(a*b), r + log2(a) = log2(2^r * a).
inline CodimValue codim_add(const CodimValue& x, const CodimValue& y) {
    if (x.integral && y.integral) return CodimValue::integer(x.int_value + y.int_value);
    return CodimValue::log2_of(x.as_log_arg() * y.as_log_arg());
}

// ceil(f^k(base)) as an exact integer.
inline BigInt bound_ceil(int k, const CodimValue& base) {
    if (base.integral) return f_iter(k, base.int_value);
    Poly p = bound_poly(k);
    for (long prec : detail::kPrecisionSchedule) {
        RatInterval v = poly_eval(p, log2_bounds(base.log_arg, prec));
        BigInt clo, chi;
        mpz_cdiv_q(clo.get_mpz_t(), v.lo.get_num_mpz_t(), v.lo.get_den_mpz_t());
        mpz_cdiv_q(chi.get_mpz_t(), v.hi.get_num_mpz_t(), v.hi.get_den_mpz_t());
        if (clo == chi) return clo;
    }
    throw CertificateError("exact log comparison did not separate");
}

// Deterministic 6-digit decimal lower approximation of f^k(base), for
// display only; certificates never depend on it.
inline std::string bound_approx(int k, const CodimValue& base) {
    if (base.integral) return f_iter(k, base.int_value).get_str();
    RatInterval v = poly_eval(bound_poly(k), log2_bounds(base.log_arg, 192));
    BigInt scaled;
    BigInt num = v.lo.get_num() * 1000000;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.lo.get_den().get_mpz_t());
    BigInt whole = scaled / 1000000;
    BigInt frac = scaled % 1000000;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), 6 - fs.size(), '0');
    return whole.get_str() + "." + fs;
}

} // namespace kmforge
