#pragma once

#include <projstab/projline.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace projstab {

// An element of PGL_2(K): z -> (a*z+b)/(c*z+d) with ad - bc != 0, extended to
// infinity. Stored scalar-normalized: the first nonzero coefficient in the
// order (a, b, c, d) equals 1, so equality is coefficient-wise. Determinant
// normalization would need square roots, which the supported fields lack.
class Moebius {
public:
    Moebius(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        const FieldElement det = a_ * d_ - b_ * c_;
        if (det.is_zero()) throw std::domain_error("singular matrix: ad - bc = 0");
        normalize();
    }

    static Moebius identity(const Field& K) {
        return Moebius(K.one(), K.zero(), K.zero(), K.one());
    }
    static Moebius identity_like(const FieldElement& sample) {
        return Moebius(sample.one_like(), sample.zero_like(), sample.zero_like(),
                       sample.one_like());
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    // Total on P^1(K): all four branches of the defining formula.
    ProjPoint operator()(const ProjPoint& x) const {
        if (x.is_infinity()) {
            if (c_.is_zero()) return ProjPoint::infinity();
            return ProjPoint::finite(a_ / c_);
        }
        const FieldElement& z = x.value();
        const FieldElement den = c_ * z + d_;
        if (den.is_zero()) return ProjPoint::infinity();
        return ProjPoint::finite((a_ * z + b_) / den);
    }

    // composition: (g * h)(x) = g(h(x))
    friend Moebius operator*(const Moebius& g, const Moebius& h) {
        return Moebius(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                       g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
    }

    Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }

    bool is_identity() const {
        return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
    }

    friend bool operator==(const Moebius& g, const Moebius& h) {
        return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
    }
    friend bool operator!=(const Moebius& g, const Moebius& h) { return !(g == h); }

    int cmp(const Moebius& o) const {
        if (int r = a_.cmp(o.a_)) return r;
        if (int r = b_.cmp(o.b_)) return r;
        if (int r = c_.cmp(o.c_)) return r;
        return d_.cmp(o.d_);
    }
    friend bool operator<(const Moebius& g, const Moebius& h) { return g.cmp(h) < 0; }

    std::array<std::string, 4> coeff_strings() const {
        return {a_.to_string(), b_.to_string(), c_.to_string(), d_.to_string()};
    }

    // (a*z+b)/(c*z+d); coefficients that are sums or negative get parenthesized
    std::string to_string() const {
        const auto wrap = [](std::string s) {
            if (s.find('+') == std::string::npos && s.front() != '-') return s;
            return "(" + s + ")";
        };
        return "(" + wrap(a_.to_string()) + "*z+" + wrap(b_.to_string()) + ")/(" +
               wrap(c_.to_string()) + "*z+" + wrap(d_.to_string()) + ")";
    }

private:
    void normalize() {
        for (FieldElement* lead : {&a_, &b_, &c_, &d_}) {
            if (!lead->is_zero()) {
                const FieldElement k = lead->inv();
                a_ = a_ * k;
                b_ = b_ * k;
                c_ = c_ * k;
                d_ = d_ * k;
                return;
            }
        }
    }

    FieldElement a_, b_, c_, d_;
};

inline bool is_involution(const Moebius& h) {
    return !h.is_identity() && (h * h).is_identity();
}

// Least n <= bound with h^n = id, or nullopt when the order exceeds the bound.
// Translations over Q have infinite order, hence the explicit bound.
inline std::optional<int> order(const Moebius& h, int bound) {
    if (bound < 1) throw std::invalid_argument("order bound must be >= 1");
    Moebius acc = h;
    for (int n = 1; n <= bound; ++n) {
        if (acc.is_identity()) return n;
        acc = acc * h;
    }
    return std::nullopt;
}

// The unique homography sending (x1, x2, x3) to (inf, 0, 1). For finite
// frames this is w -> ((w-x2)(x3-x1)) / ((w-x1)(x3-x2)); a frame point at
// infinity drops the two differences involving it.
inline Moebius frame_to_standard(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3) {
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw std::invalid_argument("frame points must be pairwise distinct");

    if (x1.is_infinity()) {
        const FieldElement& u2 = x2.value();
        const FieldElement& u3 = x3.value();
        const FieldElement one = u2.one_like();
        return Moebius(one, -u2, one.zero_like(), u3 - u2);
    }
    if (x2.is_infinity()) {
        const FieldElement& u1 = x1.value();
        const FieldElement& u3 = x3.value();
        const FieldElement one = u1.one_like();
        return Moebius(one.zero_like(), u3 - u1, one, -u1);
    }
    if (x3.is_infinity()) {
        const FieldElement& u1 = x1.value();
        const FieldElement& u2 = x2.value();
        const FieldElement one = u1.one_like();
        return Moebius(one, -u2, one, -u1);
    }
    const FieldElement& u1 = x1.value();
    const FieldElement& u2 = x2.value();
    const FieldElement& u3 = x3.value();
    return Moebius(u3 - u1, -u2 * (u3 - u1), u3 - u2, -u1 * (u3 - u2));
}

// The unique homography with h(src[i]) = dst[i], built by passing through the
// standard frame (inf, 0, 1).
inline Moebius interpolate3(const std::array<ProjPoint, 3>& src,
                            const std::array<ProjPoint, 3>& dst) {
    const Moebius fs = frame_to_standard(src[0], src[1], src[2]);
    const Moebius fd = frame_to_standard(dst[0], dst[1], dst[2]);
    return fd.inverse() * fs;
}

}  // namespace projstab
