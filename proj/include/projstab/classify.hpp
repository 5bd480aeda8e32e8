#pragma once

#include <projstab/stabgroup.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace projstab {

enum class TheoremCase { GenericV4, CaseI_S4, CaseII_A4, CaseIII_D4, CaseIV_A4 };

inline std::string theorem_case_name(TheoremCase c) {
    switch (c) {
        case TheoremCase::GenericV4: return "generic-V4";
        case TheoremCase::CaseI_S4: return "case-i-S4";
        case TheoremCase::CaseII_A4: return "case-ii-A4";
        case TheoremCase::CaseIII_D4: return "case-iii-D4";
        case TheoremCase::CaseIV_A4: return "case-iv-A4";
    }
    return "?";
}

// Closed-form classification of the stabilizer of {inf, 0, 1, lam}:
// no brute force, just the characteristic, the splitting of X^2+X+1, and
// membership of lam in the exceptional sets.
struct Classification {
    Field field;
    FieldElement lam;
    GroupType group_type;
    TheoremCase theorem_case;
    CrossRatioOrbit orbit;
};

inline Classification classify_lambda(const Field& K, const FieldElement& lam) {
    if (K.kind() == FieldKind::PrimeField && K.characteristic() == 2)
        throw std::invalid_argument("F2 excluded: its projective line has only 3 points");
    if (!K.contains(lam)) throw std::invalid_argument("lambda does not belong to the field");
    if (lam.is_zero() || lam.is_one()) throw std::domain_error("lambda must avoid 0 and 1");

    const auto ch = K.characteristic();
    const bool splits = K.splits_x2_x_1();

    GroupType type{GroupKind::V4, 4};
    TheoremCase tcase = TheoremCase::GenericV4;

    // In characteristic 3, -1 equals -j (j = 1 is the double root), so the
    // S4 branch must come before any j-based test.
    if (ch == 3 && lam == K.from_int(-1)) {
        type = GroupType{GroupKind::S4, 24};
        tcase = TheoremCase::CaseI_S4;
    } else if (ch == 2 && splits) {
        const auto [j, j2] = K.omega_roots();
        if (lam == j || lam == j2) {
            type = GroupType{GroupKind::A4, 12};
            tcase = TheoremCase::CaseII_A4;
        }
    } else if (ch != 2 && ch != 3) {
        if (lam == K.from_int(-1) || lam == K.from_int(2) || lam == K.from_int(2).inv()) {
            type = GroupType{GroupKind::D4, 8};
            tcase = TheoremCase::CaseIII_D4;
        } else if (splits) {
            const auto [j, j2] = K.omega_roots();
            if (lam == -j || lam == -j2) {
                type = GroupType{GroupKind::A4, 12};
                tcase = TheoremCase::CaseIV_A4;
            }
        }
    }

    return Classification{K, lam, type, tcase, cross_ratio_orbit(lam)};
}

// Classification of G_E for an arbitrary 4-set, via reduction to the frame
// {inf, 0, 1, lam}. Independent of the ordering of E.
inline Classification classify_set(const Field& K, const PointSet& E) {
    if (E.size() != 4) throw std::invalid_argument("classify_set needs exactly 4 points");
    for (const auto& pt : E.points())
        if (!pt.is_infinity() && !K.contains(pt.value()))
            throw std::invalid_argument("point set does not lie in the given field");
    return classify_lambda(K, conjugate_reduce(E).lam);
}

// Rational D4 detector: for distinct rationals x1..x4, G_E is D4 iff one of
// the three index triples satisfies (-2*xk + xi + xj)*x4 = 2*xi*xj - xk*(xi + xj),
// and V4 otherwise (over Q these are the only possibilities).
struct RationalD4Result {
    bool is_d4 = false;
    std::array<int, 3> witness{};  // (i, j, k), 1-based, valid when is_d4
};

inline RationalD4Result rational_d4_test(const FieldElement& x1, const FieldElement& x2,
                                         const FieldElement& x3, const FieldElement& x4) {
    const std::array<const FieldElement*, 4> xs = {&x1, &x2, &x3, &x4};
    for (const auto* x : xs)
        if (x->kind() != FieldKind::Rationals)
            throw std::invalid_argument("rational D4 test needs rational inputs");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k)
            if (*xs[i] == *xs[k]) throw std::invalid_argument("repeated values");

    const FieldElement two = x1.from_int_like(2);
    constexpr std::array<std::array<int, 3>, 3> triples = {{{1, 2, 3}, {1, 3, 2}, {3, 2, 1}}};
    for (const auto& t : triples) {
        const FieldElement& xi = *xs[t[0] - 1];
        const FieldElement& xj = *xs[t[1] - 1];
        const FieldElement& xk = *xs[t[2] - 1];
        const FieldElement lhs = (-(two * xk) + xi + xj) * x4;
        const FieldElement rhs = two * xi * xj - xk * (xi + xj);
        if (lhs == rhs) return RationalD4Result{true, t};
    }
    return RationalD4Result{false, {}};
}

}  // namespace projstab
