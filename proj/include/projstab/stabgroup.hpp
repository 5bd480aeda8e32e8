#pragma once

#include <projstab/crossratio.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace projstab {

// A permutation of {1..n} for n <= 4: the action of a stabilizer element on
// the base set, by position. Stored 0-based; printed 1-based.
class Perm4 {
public:
    Perm4() = default;

    explicit Perm4(std::vector<std::uint8_t> images) : n_(images.size()) {
        if (n_ < 1 || n_ > 4) throw std::invalid_argument("permutation degree must be 1..4");
        std::array<bool, 4> seen{};
        for (std::size_t i = 0; i < n_; ++i) {
            if (images[i] >= n_ || seen[images[i]])
                throw std::invalid_argument("images do not form a permutation");
            seen[images[i]] = true;
            img_[i] = images[i];
        }
    }

    static Perm4 identity(std::size_t n) {
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), std::uint8_t{0});
        return Perm4(std::move(img));
    }

    std::size_t degree() const { return n_; }
    std::uint8_t image(std::size_t i) const { return img_.at(i); }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (img_[i] != i) return false;
        return true;
    }

    int order() const {
        int ord = 1;
        for (int len : cycle_lengths()) ord = std::lcm(ord, len);
        return ord;
    }

    // parity: +1 even, -1 odd
    int sign() const {
        int transpositions = 0;
        for (int len : cycle_lengths()) transpositions += len - 1;
        return transpositions % 2 == 0 ? 1 : -1;
    }

    // "id" or cycles like "(1 2)(3 4)", each cycle led by its least point
    std::string cycle_string() const {
        std::string out;
        std::array<bool, 4> done{};
        for (std::size_t i = 0; i < n_; ++i) {
            if (done[i] || img_[i] == i) continue;
            out += "(" + std::to_string(i + 1);
            done[i] = true;
            for (std::size_t k = img_[i]; k != i; k = img_[k]) {
                out += " " + std::to_string(k + 1);
                done[k] = true;
            }
            out += ")";
        }
        return out.empty() ? "id" : out;
    }

    friend bool operator==(const Perm4& x, const Perm4& y) {
        return x.n_ == y.n_ && x.img_ == y.img_;
    }
    friend bool operator!=(const Perm4& x, const Perm4& y) { return !(x == y); }

private:
    std::vector<int> cycle_lengths() const {
        std::vector<int> lens;
        std::array<bool, 4> done{};
        for (std::size_t i = 0; i < n_; ++i) {
            if (done[i]) continue;
            int len = 0;
            for (std::size_t k = i; !done[k]; k = img_[k]) {
                done[k] = true;
                ++len;
            }
            lens.push_back(len);
        }
        return lens;
    }

    std::size_t n_ = 0;
    std::array<std::uint8_t, 4> img_{};
};

enum class GroupKind { V4, D4, A4, S4, S3, C2xUnits, AffineLike, Infinite, FiniteOther };

// The recognized isomorphism type, with its order (0 means infinite).
struct GroupType {
    GroupKind kind = GroupKind::FiniteOther;
    std::uint64_t order = 0;

    std::string name() const {
        switch (kind) {
            case GroupKind::V4: return "V4";
            case GroupKind::D4: return "D4";
            case GroupKind::A4: return "A4";
            case GroupKind::S4: return "S4";
            case GroupKind::S3: return "S3";
            case GroupKind::C2xUnits: return "C2xK*";
            case GroupKind::AffineLike: return "AffineLike";
            case GroupKind::Infinite: return "Infinite";
            case GroupKind::FiniteOther: return "FiniteOther(" + std::to_string(order) + ")";
        }
        return "?";
    }

    friend bool operator==(const GroupType& x, const GroupType& y) {
        return x.kind == y.kind && x.order == y.order;
    }
    friend bool operator!=(const GroupType& x, const GroupType& y) { return !(x == y); }
};

// G_E = { h in PGL_2(K) : h(E) = E }, enumerated when finite, with the
// permutation each element induces on E. Elements are kept sorted by
// canonical coefficient tuple; perms is parallel to elements.
struct StabilizerGroup {
    Field field;
    PointSet base_set;
    std::vector<Moebius> elements;
    std::vector<Perm4> perms;
    GroupType group_type;
    std::string witness;  // family description when infinite
};

// The permutation h induces on E, with a hard check that h(E) = E.
inline Perm4 induced_permutation(const Moebius& h, const PointSet& E) {
    std::vector<std::uint8_t> img(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        const ProjPoint y = h(E[i]);
        bool found = false;
        for (std::size_t k = 0; k < E.size(); ++k) {
            if (E[k] == y) {
                img[i] = static_cast<std::uint8_t>(k);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("homography " + h.to_string() + " does not stabilize {" +
                                   E.to_string() + "}");
    }
    return Perm4(std::move(img));
}

namespace detail {

inline void sort_group(std::vector<Moebius>& els, std::vector<Perm4>& perms) {
    std::vector<std::size_t> idx(els.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return els[x] < els[y]; });
    std::vector<Moebius> els2;
    std::vector<Perm4> perms2;
    els2.reserve(els.size());
    perms2.reserve(perms.size());
    for (std::size_t i : idx) {
        els2.push_back(els[i]);
        perms2.push_back(perms[i]);
    }
    els = std::move(els2);
    perms = std::move(perms2);
}

}  // namespace detail

GroupType recognize_group(const StabilizerGroup& g);

// The Klein four-group J <= G_E guaranteed for every 4-set: the identity plus
// the three involutions acting as (1 2)(3 4), (1 3)(2 4), (1 4)(2 3).
inline StabilizerGroup klein_subgroup(const PointSet& E) {
    if (E.size() != 4) throw std::invalid_argument("Klein subgroup needs exactly 4 points");
    const auto& x = E.points();

    const Moebius h0 = Moebius::identity_like(E.sample_value());
    const Moebius h1 = interpolate3({x[0], x[1], x[2]}, {x[1], x[0], x[3]});
    const Moebius h2 = interpolate3({x[0], x[1], x[2]}, {x[2], x[3], x[0]});
    const Moebius h3 = interpolate3({x[0], x[1], x[2]}, {x[3], x[2], x[1]});

    // each h_i is an involution (it swaps a pair), which forces the fourth image
    if (!is_involution(h1) || !is_involution(h2) || !is_involution(h3))
        throw std::logic_error("Klein element is not an involution");
    if (h1(x[3]) != x[2] || h2(x[3]) != x[1] || h3(x[3]) != x[0])
        throw std::logic_error("Klein element misses its fourth image");
    if (h3 != h2 * h1 || h3 != h1 * h2)
        throw std::logic_error("Klein multiplication table does not close");

    std::vector<Moebius> els = {h0, h1, h2, h3};
    std::vector<Perm4> perms;
    perms.reserve(4);
    for (const auto& h : els) perms.push_back(induced_permutation(h, E));
    detail::sort_group(els, perms);

    StabilizerGroup g{field_of_points(E), E, std::move(els), std::move(perms),
                      GroupType{GroupKind::V4, 4}, ""};
    return g;
}

// Brute force over all 24 permutations of a 4-set: sigma is realized by a
// homography iff it preserves the cross-ratio; the homography is then the
// unique one interpolating the first three pairs, and it must hit the fourth.
inline StabilizerGroup stabilizer_of_four(const PointSet& E) {
    if (E.size() != 4) throw std::invalid_argument("stabilizer_of_four needs exactly 4 points");
    const auto& x = E.points();
    const ProjPoint base = cross_ratio(x[0], x[1], x[2], x[3]);

    std::vector<Moebius> els;
    std::vector<Perm4> perms;
    std::array<std::uint8_t, 4> sigma{0, 1, 2, 3};
    do {
        const ProjPoint c = cross_ratio(x[sigma[0]], x[sigma[1]], x[sigma[2]], x[sigma[3]]);
        if (c != base) continue;
        const Moebius h =
            interpolate3({x[0], x[1], x[2]}, {x[sigma[0]], x[sigma[1]], x[sigma[2]]});
        if (h(x[3]) != x[sigma[3]])
            throw std::logic_error("equal cross-ratios must admit a 4-point transport");
        els.push_back(h);
        perms.push_back(Perm4(std::vector<std::uint8_t>(sigma.begin(), sigma.end())));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    detail::sort_group(els, perms);
    StabilizerGroup g{field_of_points(E), E, std::move(els), std::move(perms),
                      GroupType{}, ""};
    g.group_type = recognize_group(g);
    return g;
}

// G_E for a 3-set: the conjugate f^-1 G_F f of the six maps stabilizing
// F = {inf, 0, 1}, where f sends E to F.
inline StabilizerGroup stabilizer_of_three(const PointSet& E) {
    if (E.size() != 3) throw std::invalid_argument("stabilizer_of_three needs exactly 3 points");
    const FieldElement one = E.sample_value().one_like();
    const FieldElement zero = one.zero_like();

    // z, 1/z, 1-z, 1/(1-z), (z-1)/z, z/(z-1)
    const std::array<Moebius, 6> standard = {
        Moebius(one, zero, zero, one),  Moebius(zero, one, one, zero),
        Moebius(-one, one, zero, one),  Moebius(zero, one, -one, one),
        Moebius(one, -one, one, zero),  Moebius(one, zero, one, -one)};

    const auto& x = E.points();
    const Moebius f = frame_to_standard(x[0], x[1], x[2]);
    const Moebius finv = f.inverse();

    std::vector<Moebius> els;
    std::vector<Perm4> perms;
    els.reserve(6);
    for (const auto& g : standard) els.push_back(finv * g * f);
    for (const auto& h : els) perms.push_back(induced_permutation(h, E));
    detail::sort_group(els, perms);

    StabilizerGroup g{field_of_points(E), E, std::move(els), std::move(perms), GroupType{}, ""};
    g.group_type = recognize_group(g);
    return g;
}

namespace detail {

// First `count` points of P^1(K) outside E, in canonical order (inf first).
inline std::vector<ProjPoint> auxiliary_points(const Field& K, const PointSet& E,
                                               std::size_t count) {
    std::vector<ProjPoint> out;
    const auto consider = [&](const ProjPoint& cand) {
        if (out.size() < count && !E.contains(cand)) out.push_back(cand);
    };
    consider(ProjPoint::infinity());
    if (K.is_finite()) {
        for (const auto& v : K.enumerate()) {
            if (out.size() == count) break;
            consider(ProjPoint::finite(v));
        }
    } else {
        for (long long n = 0; out.size() < count; ++n) consider(ProjPoint::finite(K.from_int(n)));
    }
    if (out.size() != count) throw std::logic_error("projective line too small for frame completion");
    return out;
}

}  // namespace detail

// G_E for |E| <= 2. Infinite over infinite fields (reported with a witness
// family, not enumerated); over F_q the transported standard-frame groups of
// sizes q^2 - q and 2(q - 1).
inline StabilizerGroup stabilizer_small(const Field& K, const PointSet& E) {
    if (E.size() > 2) throw std::invalid_argument("stabilizer_small needs |E| in {1, 2}");
    for (const auto& pt : E.points())
        if (!pt.is_infinity() && !K.contains(pt.value()))
            throw std::invalid_argument("point set does not lie in the given field");

    // conjugator from E to the standard frame {inf} / {inf, 0}
    const ProjPoint inf = ProjPoint::infinity();
    const ProjPoint zero_pt = ProjPoint::finite(K.zero());
    const ProjPoint one_pt = ProjPoint::finite(K.one());
    Moebius f = Moebius::identity(K);
    if (E.size() == 1) {
        const auto aux = detail::auxiliary_points(K, E, 2);
        f = interpolate3({E[0], aux[0], aux[1]}, {inf, zero_pt, one_pt});
    } else {
        const auto aux = detail::auxiliary_points(K, E, 1);
        f = interpolate3({E[0], E[1], aux[0]}, {inf, zero_pt, one_pt});
    }

    if (!K.is_finite()) {
        const std::string family = E.size() == 1 ? "{z -> a*z+b : a != 0}"
                                                 : "{z -> a*z : a != 0} U {z -> b/z : b != 0}";
        StabilizerGroup g{K, E, {}, {}, GroupType{GroupKind::Infinite, 0},
                          "f^-1 . g . f for g in " + family + ", f = " + f.to_string()};
        return g;
    }

    const std::uint64_t q = K.size();
    std::vector<Moebius> standard;
    GroupType type;
    const FieldElement one = K.one();
    const FieldElement zero = K.zero();
    if (E.size() == 1) {
        standard.reserve(q * (q - 1));
        for (const auto& a : K.enumerate()) {
            if (a.is_zero()) continue;
            for (const auto& b : K.enumerate()) standard.emplace_back(a, b, zero, one);
        }
        type = GroupType{GroupKind::AffineLike, q * q - q};
    } else {
        standard.reserve(2 * (q - 1));
        for (const auto& a : K.enumerate()) {
            if (a.is_zero()) continue;
            standard.emplace_back(a, zero, zero, one);
            standard.emplace_back(zero, a, one, zero);
        }
        type = GroupType{GroupKind::C2xUnits, 2 * (q - 1)};
    }

    const Moebius finv = f.inverse();
    std::set<Moebius> conjugated;
    for (const auto& g : standard) conjugated.insert(finv * g * f);
    if (conjugated.size() != type.order)
        throw std::logic_error("small-set stabilizer count does not match q^2-q / 2(q-1)");

    std::vector<Moebius> els(conjugated.begin(), conjugated.end());
    std::vector<Perm4> perms;
    perms.reserve(els.size());
    for (const auto& h : els) perms.push_back(induced_permutation(h, E));
    StabilizerGroup g{K, E, std::move(els), std::move(perms), type, ""};
    return g;
}

// Order plus structural cross-checks pin the type: at these orders each
// subgroup of S4 is unique up to isomorphism (order 8 = Sylow 2 = D4,
// order 12 = A4).
inline GroupType recognize_group(const StabilizerGroup& g) {
    const std::size_t n = g.base_set.size();
    if (n != 3 && n != 4)
        throw std::invalid_argument("group recognition applies to |E| in {3, 4}");
    const std::uint64_t ord = g.elements.size();

    bool has_order3 = false, has_order4 = false, has_odd = false;
    std::uint64_t involutions = 0;
    for (const auto& perm : g.perms) {
        const int po = perm.order();
        has_order3 |= po == 3;
        has_order4 |= po == 4;
        has_odd |= perm.sign() < 0;
        involutions += po == 2;
    }

    const auto inconsistent = [&](const char* what) {
        return std::logic_error("stabilizer of {" + g.base_set.to_string() +
                                "} is structurally inconsistent: " + what);
    };

    if (n == 3) {
        if (ord != 6) throw inconsistent("|E| = 3 forces order 6");
        if (involutions != 3 || !has_order3) throw inconsistent("order 6 group is not S3");
        return GroupType{GroupKind::S3, 6};
    }
    switch (ord) {
        case 4:
            if (involutions != 3) throw inconsistent("order 4 with a non-involution");
            return GroupType{GroupKind::V4, 4};
        case 8:
            if (!has_order4) throw inconsistent("order 8 without a 4-cycle");
            return GroupType{GroupKind::D4, 8};
        case 12:
            if (!has_order3 || has_order4) throw inconsistent("order 12 is not A4");
            return GroupType{GroupKind::A4, 12};
        case 24:
            if (!has_order4 || !has_odd) throw inconsistent("order 24 is not S4");
            return GroupType{GroupKind::S4, 24};
        default:
            throw inconsistent("order outside {4, 8, 12, 24}");
    }
}

// f sending (x1,x2,x3) to (inf,0,1) and lam = f(x4) = [x1,x2,x3,x4]:
// G_E is the f-conjugate of the stabilizer of {inf, 0, 1, lam}.
struct ConjugateReduction {
    Moebius f;
    FieldElement lam;
};

inline ConjugateReduction conjugate_reduce(const PointSet& E) {
    if (E.size() != 4) throw std::invalid_argument("conjugate_reduce needs exactly 4 points");
    const auto& x = E.points();
    const Moebius f = frame_to_standard(x[0], x[1], x[2]);
    const ProjPoint image = f(x[3]);
    if (image.is_infinity() || image.value().is_zero() || image.value().is_one())
        throw std::logic_error("reduced lambda landed on a frame point");
    return ConjugateReduction{f, image.value()};
}

// Exhaustive group-axiom audit: identity, closure, inverses, stabilization,
// and (for |E| >= 3) faithfulness of the permutation action.
inline void check_group_axioms(const StabilizerGroup& g) {
    if (g.group_type.kind == GroupKind::Infinite) return;
    const std::set<Moebius> members(g.elements.begin(), g.elements.end());
    if (members.size() != g.elements.size()) throw std::logic_error("duplicate group elements");
    if (!members.count(Moebius::identity(g.field))) throw std::logic_error("identity missing");
    for (const auto& h : g.elements) {
        if (!members.count(h.inverse())) throw std::logic_error("inverse missing");
        induced_permutation(h, g.base_set);  // throws unless h(E) = E
        for (const auto& k : g.elements)
            if (!members.count(h * k)) throw std::logic_error("composition escapes the group");
    }
    if (g.base_set.size() >= 3) {
        for (std::size_t i = 0; i < g.perms.size(); ++i)
            for (std::size_t k = i + 1; k < g.perms.size(); ++k)
                if (g.perms[i] == g.perms[k])
                    throw std::logic_error("permutation action is not faithful");
    }
}

// Dispatcher over |E|.
inline StabilizerGroup stabilizer(const Field& K, const PointSet& E) {
    for (const auto& pt : E.points())
        if (!pt.is_infinity() && !K.contains(pt.value()))
            throw std::invalid_argument("point set does not lie in the given field");
    switch (E.size()) {
        case 1:
        case 2: return stabilizer_small(K, E);
        case 3: return stabilizer_of_three(E);
        default: return stabilizer_of_four(E);
    }
}

}  // namespace projstab
