#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace projstab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The three supported coefficient fields: Q, F_p, and F_p[X]/(X^2+X+1).
enum class FieldKind { Rationals, PrimeField, QuadExt };

namespace detail {

// Trial division; moduli are capped well below 2^31 so this is cheap.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

// residues < 2^31, so products fit in uint64_t
inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return (x + y) % p;
}
inline std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return (x + p - y) % p;
}
inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return (x * y) % p;
}
inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return acc;
}
inline std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
    if (x == 0) throw std::domain_error("division by zero");
    return pow_mod(x, p - 2, p);  // Fermat; p is prime
}

inline std::uint64_t reduce_big(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

}  // namespace detail

// An exact element of one of the supported fields. Values are immutable and
// canonical: rationals are reduced with positive denominator, residues lie in
// [0, p), and QuadExt elements are coefficient pairs a + b*j with j a root of
// X^2 + X + 1 (so j^2 = -j - 1).
class FieldElement {
public:
    FieldElement() = default;  // rational zero

    static FieldElement rational(Rational v) {
        FieldElement e;
        e.kind_ = FieldKind::Rationals;
        e.p_ = 0;
        e.rat_ = std::move(v);
        return e;
    }
    static FieldElement prime_residue(std::uint64_t p, std::uint64_t r) {
        FieldElement e;
        e.kind_ = FieldKind::PrimeField;
        e.p_ = p;
        e.a_ = r % p;
        return e;
    }
    static FieldElement quad(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
        FieldElement e;
        e.kind_ = FieldKind::QuadExt;
        e.p_ = p;
        e.a_ = a % p;
        e.b_ = b % p;
        return e;
    }

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }

    bool is_zero() const {
        switch (kind_) {
            case FieldKind::Rationals: return rat_ == 0;
            case FieldKind::PrimeField: return a_ == 0;
            case FieldKind::QuadExt: return a_ == 0 && b_ == 0;
        }
        return false;
    }
    bool is_one() const {
        switch (kind_) {
            case FieldKind::Rationals: return rat_ == 1;
            case FieldKind::PrimeField: return a_ == 1;
            case FieldKind::QuadExt: return a_ == 1 && b_ == 0;
        }
        return false;
    }

    FieldElement zero_like() const { return from_int_like(0); }
    FieldElement one_like() const { return from_int_like(1); }

    FieldElement from_int_like(long long n) const {
        switch (kind_) {
            case FieldKind::Rationals: return rational(Rational(n));
            case FieldKind::PrimeField: return prime_residue(p_, detail::reduce_big(BigInt(n), p_));
            case FieldKind::QuadExt: return quad(p_, detail::reduce_big(BigInt(n), p_), 0);
        }
        throw std::logic_error("bad field kind");
    }

    const Rational& rational_value() const {
        require_kind(FieldKind::Rationals);
        return rat_;
    }
    std::uint64_t residue() const {
        require_kind(FieldKind::PrimeField);
        return a_;
    }
    std::pair<std::uint64_t, std::uint64_t> quad_parts() const {
        require_kind(FieldKind::QuadExt);
        return {a_, b_};
    }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        x.require_same_field(y);
        switch (x.kind_) {
            case FieldKind::Rationals: return rational(x.rat_ + y.rat_);
            case FieldKind::PrimeField: return prime_residue(x.p_, detail::add_mod(x.a_, y.a_, x.p_));
            case FieldKind::QuadExt:
                return quad(x.p_, detail::add_mod(x.a_, y.a_, x.p_), detail::add_mod(x.b_, y.b_, x.p_));
        }
        throw std::logic_error("bad field kind");
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        x.require_same_field(y);
        switch (x.kind_) {
            case FieldKind::Rationals: return rational(x.rat_ - y.rat_);
            case FieldKind::PrimeField: return prime_residue(x.p_, detail::sub_mod(x.a_, y.a_, x.p_));
            case FieldKind::QuadExt:
                return quad(x.p_, detail::sub_mod(x.a_, y.a_, x.p_), detail::sub_mod(x.b_, y.b_, x.p_));
        }
        throw std::logic_error("bad field kind");
    }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        x.require_same_field(y);
        switch (x.kind_) {
            case FieldKind::Rationals: return rational(x.rat_ * y.rat_);
            case FieldKind::PrimeField: return prime_residue(x.p_, detail::mul_mod(x.a_, y.a_, x.p_));
            case FieldKind::QuadExt: {
                // (a1 + b1 j)(a2 + b2 j) with j^2 = -j - 1
                const auto p = x.p_;
                const auto aa = detail::mul_mod(x.a_, y.a_, p);
                const auto bb = detail::mul_mod(x.b_, y.b_, p);
                const auto cross = detail::add_mod(detail::mul_mod(x.a_, y.b_, p),
                                                   detail::mul_mod(x.b_, y.a_, p), p);
                return quad(p, detail::sub_mod(aa, bb, p), detail::sub_mod(cross, bb, p));
            }
        }
        throw std::logic_error("bad field kind");
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inv(); }

    FieldElement operator-() const {
        switch (kind_) {
            case FieldKind::Rationals: return rational(-rat_);
            case FieldKind::PrimeField: return prime_residue(p_, detail::sub_mod(0, a_, p_));
            case FieldKind::QuadExt:
                return quad(p_, detail::sub_mod(0, a_, p_), detail::sub_mod(0, b_, p_));
        }
        throw std::logic_error("bad field kind");
    }

    FieldElement inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        switch (kind_) {
            case FieldKind::Rationals: return rational(Rational(1) / rat_);
            case FieldKind::PrimeField: return prime_residue(p_, detail::inv_mod(a_, p_));
            case FieldKind::QuadExt: {
                // 1/(a+bj) = conj/norm, conj = (a-b) - b j, norm = a^2 - ab + b^2.
                // The norm is nonzero: X^2+X+1 has no root in F_p when p = 2 mod 3.
                const auto p = p_;
                const auto norm = detail::add_mod(
                    detail::sub_mod(detail::mul_mod(a_, a_, p), detail::mul_mod(a_, b_, p), p),
                    detail::mul_mod(b_, b_, p), p);
                const auto ninv = detail::inv_mod(norm, p);
                return quad(p, detail::mul_mod(detail::sub_mod(a_, b_, p), ninv, p),
                            detail::mul_mod(detail::sub_mod(0, b_, p), ninv, p));
            }
        }
        throw std::logic_error("bad field kind");
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        if (x.kind_ != y.kind_ || x.p_ != y.p_) return false;
        switch (x.kind_) {
            case FieldKind::Rationals: return x.rat_ == y.rat_;
            case FieldKind::PrimeField: return x.a_ == y.a_;
            case FieldKind::QuadExt: return x.a_ == y.a_ && x.b_ == y.b_;
        }
        return false;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    // Total order on elements of one field; used for deterministic output.
    // QuadExt sorts in enumeration order (b-major): 0, 1, ..., j, 1+j, ...
    int cmp(const FieldElement& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_ ? -1 : 1;
        if (p_ != o.p_) return p_ < o.p_ ? -1 : 1;
        switch (kind_) {
            case FieldKind::Rationals:
                if (rat_ < o.rat_) return -1;
                return rat_ == o.rat_ ? 0 : 1;
            case FieldKind::PrimeField:
                if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
                return 0;
            case FieldKind::QuadExt:
                if (b_ != o.b_) return b_ < o.b_ ? -1 : 1;
                if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
                return 0;
        }
        return 0;
    }
    friend bool operator<(const FieldElement& x, const FieldElement& y) { return x.cmp(y) < 0; }

    std::string to_string() const {
        switch (kind_) {
            case FieldKind::Rationals: {
                std::string s = numerator(rat_).str();
                if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
                return s;
            }
            case FieldKind::PrimeField:
                return std::to_string(a_);
            case FieldKind::QuadExt: {
                if (b_ == 0) return std::to_string(a_);
                std::string jpart = (b_ == 1) ? "j" : std::to_string(b_) + "*j";
                if (a_ == 0) return jpart;
                return std::to_string(a_) + "+" + jpart;
            }
        }
        throw std::logic_error("bad field kind");
    }

private:
    void require_kind(FieldKind k) const {
        if (kind_ != k) throw std::invalid_argument("field element has wrong representation kind");
    }
    void require_same_field(const FieldElement& o) const {
        if (kind_ != o.kind_ || p_ != o.p_)
            throw std::invalid_argument("mixed-field operands");
    }

    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
    Rational rat_;
    std::uint64_t a_ = 0, b_ = 0;
};

// Which field is in play. Carries the characteristic, whether X^2+X+1 splits,
// and the roots (j, j^2) when it does.
class Field {
public:
    static Field rationals() {
        Field K;
        K.kind_ = FieldKind::Rationals;
        K.p_ = 0;
        K.splits_ = false;
        return K;
    }

    static Field prime(std::uint64_t p) {
        check_prime(p);
        Field K;
        K.kind_ = FieldKind::PrimeField;
        K.p_ = p;
        K.splits_ = (p == 3 || p % 3 == 1);
        if (K.splits_) {
            // exhaustive root search for X^2 + X + 1; in F_3 the root 1 is double
            std::vector<std::uint64_t> roots;
            for (std::uint64_t r = 0; r < p; ++r)
                if (detail::add_mod(detail::add_mod(detail::mul_mod(r, r, p), r, p), 1, p) == 0)
                    roots.push_back(r);
            if (p == 3) {
                K.j_a_ = K.j2_a_ = roots.at(0);
            } else {
                K.j_a_ = roots.at(0);
                K.j2_a_ = roots.at(1);
                if (detail::mul_mod(K.j_a_, K.j_a_, p) != K.j2_a_)
                    throw std::logic_error("root search produced inconsistent pair");
            }
        }
        return K;
    }

    static Field quad_ext(std::uint64_t p) {
        check_prime(p);
        if (p % 3 != 2)
            throw std::invalid_argument(
                "F" + std::to_string(p) + "^2 unavailable: X^2+X+1 is reducible mod " +
                std::to_string(p) + ", so the quotient is not a field");
        Field K;
        K.kind_ = FieldKind::QuadExt;
        K.p_ = p;
        K.splits_ = true;
        K.j_b_ = 1;                         // j itself
        K.j2_a_ = p - 1;                    // j^2 = -1 - j
        K.j2_b_ = p - 1;
        return K;
    }

    // Field specifier grammar: Q | F<p> | F<p>^2
    static Field parse(std::string_view spec) {
        if (spec == "Q") return rationals();
        if (spec.size() >= 2 && spec.front() == 'F') {
            std::string_view body = spec.substr(1);
            bool quad = false;
            if (body.size() > 2 && body.substr(body.size() - 2) == "^2") {
                quad = true;
                body = body.substr(0, body.size() - 2);
            }
            std::uint64_t p = 0;
            if (!body.empty() && body.find_first_not_of("0123456789") == std::string_view::npos) {
                for (char ch : body) {
                    p = p * 10 + static_cast<std::uint64_t>(ch - '0');
                    if (p > detail::kMaxPrime) throw std::invalid_argument("prime too large (must be < 2^31)");
                }
                return quad ? quad_ext(p) : prime(p);
            }
        }
        throw std::invalid_argument("bad field specifier '" + std::string(spec) +
                                    "' (expected Q, F<p>, or F<p>^2)");
    }

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_finite() const { return kind_ != FieldKind::Rationals; }
    std::uint64_t size() const {
        if (!is_finite()) throw std::domain_error("field is infinite");
        return kind_ == FieldKind::PrimeField ? p_ : p_ * p_;
    }
    bool splits_x2_x_1() const { return splits_; }

    std::pair<FieldElement, FieldElement> omega_roots() const {
        if (!splits_) throw std::domain_error("X^2+X+1 does not split in this field");
        if (kind_ == FieldKind::PrimeField)
            return {FieldElement::prime_residue(p_, j_a_), FieldElement::prime_residue(p_, j2_a_)};
        return {FieldElement::quad(p_, j_a_, j_b_), FieldElement::quad(p_, j2_a_, j2_b_)};
    }

    FieldElement zero() const { return from_int(0); }
    FieldElement one() const { return from_int(1); }

    FieldElement from_int(long long n) const {
        switch (kind_) {
            case FieldKind::Rationals: return FieldElement::rational(Rational(n));
            case FieldKind::PrimeField:
                return FieldElement::prime_residue(p_, detail::reduce_big(BigInt(n), p_));
            case FieldKind::QuadExt:
                return FieldElement::quad(p_, detail::reduce_big(BigInt(n), p_), 0);
        }
        throw std::logic_error("bad field kind");
    }

    FieldElement from_rational(const Rational& q) const {
        if (kind_ != FieldKind::Rationals)
            throw std::invalid_argument("rational literal in a finite field");
        return FieldElement::rational(q);
    }

    FieldElement quad_element(std::uint64_t a, std::uint64_t b) const {
        if (kind_ != FieldKind::QuadExt)
            throw std::invalid_argument("quadratic coefficients outside F_p^2");
        return FieldElement::quad(p_, a, b);
    }

    bool contains(const FieldElement& x) const {
        return x.kind() == kind_ && x.characteristic() == p_;
    }

    // Element literals: Q: -3/4, 7; F_p: 3; F_p^2: a+b*j (e.g. 1+2*j, j, 0).
    FieldElement parse_element(std::string_view text) const;

    // Every element of a finite field exactly once, in canonical order.
    std::vector<FieldElement> enumerate() const {
        if (!is_finite()) throw std::domain_error("cannot enumerate an infinite field");
        std::vector<FieldElement> out;
        if (kind_ == FieldKind::PrimeField) {
            out.reserve(p_);
            for (std::uint64_t r = 0; r < p_; ++r) out.push_back(FieldElement::prime_residue(p_, r));
        } else {
            out.reserve(p_ * p_);
            for (std::uint64_t b = 0; b < p_; ++b)
                for (std::uint64_t a = 0; a < p_; ++a) out.push_back(FieldElement::quad(p_, a, b));
        }
        return out;
    }

    std::string spec_string() const {
        switch (kind_) {
            case FieldKind::Rationals: return "Q";
            case FieldKind::PrimeField: return "F" + std::to_string(p_);
            case FieldKind::QuadExt: return "F" + std::to_string(p_) + "^2";
        }
        throw std::logic_error("bad field kind");
    }

    friend bool operator==(const Field& x, const Field& y) {
        return x.kind_ == y.kind_ && x.p_ == y.p_;
    }
    friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

private:
    static void check_prime(std::uint64_t p) {
        if (p > detail::kMaxPrime) throw std::invalid_argument("prime too large (must be < 2^31)");
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
    bool splits_ = false;
    std::uint64_t j_a_ = 0, j_b_ = 0, j2_a_ = 0, j2_b_ = 0;
};

namespace detail {

inline bool scan_uint(std::string_view& s, BigInt& out) {
    std::size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == 0) return false;
    out = BigInt(std::string(s.substr(0, i)));
    s.remove_prefix(i);
    return true;
}

inline int scan_sign(std::string_view& s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        int sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
        return sign;
    }
    return 1;
}

}  // namespace detail

inline FieldElement Field::parse_element(std::string_view text) const {
    std::string_view s = text;
    const auto fail = [&] {
        throw std::invalid_argument("bad element literal '" + std::string(text) + "' for " +
                                    spec_string());
    };
    if (s.empty()) fail();

    if (kind_ == FieldKind::Rationals || kind_ == FieldKind::PrimeField) {
        int sign = detail::scan_sign(s);
        BigInt num;
        if (!detail::scan_uint(s, num)) fail();
        BigInt den = 1;
        if (!s.empty() && s.front() == '/') {
            if (kind_ == FieldKind::PrimeField) fail();  // F_p literals are plain integers
            s.remove_prefix(1);
            if (!detail::scan_uint(s, den) || den == 0) fail();
        }
        if (!s.empty()) fail();
        if (kind_ == FieldKind::Rationals)
            return FieldElement::rational(Rational(sign * num, den));
        return FieldElement::prime_residue(p_, detail::reduce_big(sign * num, p_));
    }

    // QuadExt: [sign] term [(+|-) term], term := INT | INT '*' 'j' | 'j'
    BigInt a = 0, b = 0;
    bool saw_j = false, saw_int = false;
    const auto parse_term = [&](int sign) {
        BigInt mag = 1;
        bool is_j = false;
        if (detail::scan_uint(s, mag)) {
            if (!s.empty() && s.front() == '*') {
                s.remove_prefix(1);
                if (s.empty() || s.front() != 'j') fail();
                s.remove_prefix(1);
                is_j = true;
            }
        } else if (!s.empty() && s.front() == 'j') {
            s.remove_prefix(1);
            is_j = true;
        } else {
            fail();
        }
        if (is_j) {
            if (saw_j) fail();
            saw_j = true;
            b += sign * mag;
        } else {
            if (saw_int) fail();
            saw_int = true;
            a += sign * mag;
        }
    };
    parse_term(detail::scan_sign(s));
    if (!s.empty()) {
        if (s.front() != '+' && s.front() != '-') fail();
        const int sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
        parse_term(sign);
    }
    if (!s.empty()) fail();
    return FieldElement::quad(p_, detail::reduce_big(a, p_), detail::reduce_big(b, p_));
}

}  // namespace projstab
