#pragma once
// Exact coefficient fields: prime fields with int64 elements and the
// rationals with arbitrary-precision elements. No floating point anywhere.

#include "kmforge/bigint.hpp"
#include "kmforge/errors.hpp"

#include <cstdint>
#include <string>

namespace kmforge {

class PrimeField {
public:
    using Element = std::int64_t;

    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p < 2) throw InputError("invalid field: characteristic must be prime");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw InputError("invalid field: characteristic must be prime");
    }

    std::int64_t prime() const { return p_; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }

    Element from_int(std::int64_t n) const {
        Element r = n % p_;
        return r < 0 ? r + p_ : r;
    }

    Element add(Element a, Element b) const {
        Element r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Element sub(Element a, Element b) const {
        Element r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<__int128>(a) * b % p_);
    }
    Element inv(Element a) const {
        // extended euclid; nonzero input is the caller's invariant
        Element t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            Element q = r / nr;
            Element tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p_ : t;
    }

    std::string str(Element a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }
    std::int64_t characteristic() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::int64_t p_;
};

class RationalField {
public:
    using Element = BigRat;

    Element zero() const { return BigRat(0); }
    Element one() const { return BigRat(1); }
    bool is_zero(const Element& a) const { return a == 0; }

    Element from_int(std::int64_t n) const { return BigRat(static_cast<long>(n)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return 1 / a; }

    std::string str(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }
};

}  // namespace kmforge
