#pragma once

#include <projstab/moebius.hpp>

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

namespace projstab {

// [x1,x2,x3,x4]: the image of x4 under the unique homography sending
// (x1,x2,x3) to (inf,0,1). Total in x4; the result lands in {inf,0,1}
// exactly when x4 coincides with a frame point.
inline ProjPoint cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3,
                             const ProjPoint& x4) {
    return frame_to_standard(x1, x2, x3)(x4);
}

// The six cross-ratio values of a quadruple with ratio lam, one per coset of
// the Klein subgroup in S4, in the fixed order
//   c1..c6 = lam, 1/lam, 1-lam, lam/(lam-1), 1/(1-lam), (lam-1)/lam
// corresponding to the coset representatives
//   id, (3 4), (2 3), (2 4), (2 3 4), (2 4 3)
// acting on the frame (inf, 0, 1, lam). All six are finite for lam outside
// {0, 1}. The stabilizer of a 4-set with ratio lam has index |{c1..c6}| in
// S4, so its order is 24 / distinct_count.
struct CrossRatioOrbit {
    std::array<FieldElement, 6> values;
    int distinct_count = 0;
};

inline CrossRatioOrbit cross_ratio_orbit(const FieldElement& lam) {
    if (lam.is_zero() || lam.is_one()) throw std::domain_error("lambda must avoid 0 and 1");
    const FieldElement one = lam.one_like();
    CrossRatioOrbit orbit;
    orbit.values = {lam,
                    one / lam,
                    one - lam,
                    lam / (lam - one),
                    one / (one - lam),
                    (lam - one) / lam};
    std::set<FieldElement> distinct(orbit.values.begin(), orbit.values.end());
    orbit.distinct_count = static_cast<int>(distinct.size());
    return orbit;
}

// The lambda values with stabilizer larger than the Klein four-group,
// labeled by the group they produce. Empty sets where the characteristic
// rules the case out.
struct ExceptionalLambdas {
    std::vector<FieldElement> s4;  // char 3: {-1}
    std::vector<FieldElement> a4;  // char 2 split: {j, j^2}; char not in {2,3} split: {-j, -j^2}
    std::vector<FieldElement> d4;  // char not in {2,3}: {-1, 2, 1/2}
};

inline ExceptionalLambdas exceptional_lambdas(const Field& K) {
    ExceptionalLambdas ex;
    const auto ch = K.characteristic();
    if (ch == 3) {
        ex.s4.push_back(K.from_int(-1));
        return ex;
    }
    if (ch == 2) {
        if (K.splits_x2_x_1()) {
            const auto [j, j2] = K.omega_roots();
            ex.a4 = {j, j2};
        }
        return ex;
    }
    ex.d4 = {K.from_int(-1), K.from_int(2), K.from_int(2).inv()};
    if (K.splits_x2_x_1()) {
        const auto [j, j2] = K.omega_roots();
        ex.a4 = {-j, -j2};
    }
    return ex;
}

}  // namespace projstab
