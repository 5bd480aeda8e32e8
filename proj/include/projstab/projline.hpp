#pragma once

#include <projstab/fields.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace projstab {

// A point of P^1(K) = K union {inf}.
class ProjPoint {
public:
    ProjPoint() = default;  // infinity

    static ProjPoint infinity() { return ProjPoint(); }
    static ProjPoint finite(FieldElement v) {
        ProjPoint pt;
        pt.inf_ = false;
        pt.v_ = std::move(v);
        return pt;
    }

    bool is_infinity() const { return inf_; }
    const FieldElement& value() const {
        if (inf_) throw std::domain_error("the point at infinity has no field value");
        return v_;
    }

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
        if (x.inf_ || y.inf_) return x.inf_ == y.inf_;
        return x.v_ == y.v_;
    }
    friend bool operator!=(const ProjPoint& x, const ProjPoint& y) { return !(x == y); }

    // infinity sorts first, then field-element order
    int cmp(const ProjPoint& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_ ? 0 : (inf_ ? -1 : 1);
        return v_.cmp(o.v_);
    }
    friend bool operator<(const ProjPoint& x, const ProjPoint& y) { return x.cmp(y) < 0; }

    std::string to_string() const { return inf_ ? "inf" : v_.to_string(); }

    static ProjPoint parse(const Field& K, std::string_view text) {
        if (text == "inf") return infinity();
        return finite(K.parse_element(text));
    }

private:
    bool inf_ = true;
    FieldElement v_;
};

// An ordered tuple of 1-4 pairwise distinct points of one projective line.
// Repeated points are rejected here, never deduplicated: the cardinality of E
// drives everything downstream.
class PointSet {
public:
    explicit PointSet(std::vector<ProjPoint> pts) : pts_(std::move(pts)) {
        if (pts_.empty() || pts_.size() > 4)
            throw std::invalid_argument("point set must contain between 1 and 4 points");
        for (std::size_t i = 0; i < pts_.size(); ++i)
            for (std::size_t k = i + 1; k < pts_.size(); ++k)
                if (pts_[i] == pts_[k])
                    throw std::invalid_argument("repeated point '" + pts_[i].to_string() +
                                                "' in point set");
        const FieldElement* sample = nullptr;
        for (const auto& pt : pts_) {
            if (pt.is_infinity()) continue;
            if (sample == nullptr) {
                sample = &pt.value();
            } else if (sample->kind() != pt.value().kind() ||
                       sample->characteristic() != pt.value().characteristic()) {
                throw std::invalid_argument("points of a set must lie on one projective line");
            }
        }
    }

    static PointSet parse(const Field& K, std::string_view csv) {
        std::vector<ProjPoint> pts;
        std::size_t start = 0;
        std::string text(csv);
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
            pts.push_back(ProjPoint::parse(K, tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return PointSet(std::move(pts));
    }

    std::size_t size() const { return pts_.size(); }
    const ProjPoint& operator[](std::size_t i) const { return pts_.at(i); }
    const std::vector<ProjPoint>& points() const { return pts_; }

    bool contains(const ProjPoint& pt) const {
        for (const auto& q : pts_)
            if (q == pt) return true;
        return false;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (i) s += ",";
            s += pts_[i].to_string();
        }
        return s;
    }

    // Some finite element of the set, for deriving field constants.
    // Exists whenever |E| >= 2 (at most one point is infinity).
    const FieldElement& sample_value() const {
        for (const auto& pt : pts_)
            if (!pt.is_infinity()) return pt.value();
        throw std::domain_error("point set {inf} carries no field element");
    }

private:
    std::vector<ProjPoint> pts_;
};

// Reconstructs the field a point set lives on. Needs at least one finite
// point, so it works for every set of size >= 2.
inline Field field_of_points(const PointSet& E) {
    const FieldElement& s = E.sample_value();
    switch (s.kind()) {
        case FieldKind::Rationals: return Field::rationals();
        case FieldKind::PrimeField: return Field::prime(s.characteristic());
        case FieldKind::QuadExt: return Field::quad_ext(s.characteristic());
    }
    throw std::logic_error("bad field kind");
}

}  // namespace projstab
