#pragma once

#include <projstab/classify.hpp>

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace projstab {

// Exhaustive comparison of the closed-form classification against the
// 24-permutation brute force, across every lambda of every scanned field.
// A correct build reports zero mismatches.

struct ScanMismatch {
    std::string lambda;
    std::string expected;     // closed-form classification
    std::string brute_force;  // recognized type of the enumerated stabilizer
};

struct ScanLambdaRow {
    std::string lambda;
    GroupType group_type;
    TheoremCase theorem_case;
};

struct ScanRow {
    std::string field_spec;
    std::uint64_t q = 0;
    std::map<std::string, std::uint64_t> counts;  // group type name -> number of lambdas
    std::vector<ScanLambdaRow> lambdas;
    std::vector<ScanMismatch> mismatches;
};

struct ScanReport {
    std::uint64_t max_p = 0;
    bool include_quadratic = false;
    std::vector<ScanRow> rows;

    std::size_t total_mismatches() const {
        std::size_t n = 0;
        for (const auto& row : rows) n += row.mismatches.size();
        return n;
    }
};

// F_p for every prime 3 <= p <= max_p, always F4 (the char-2 split witness),
// and with include_quadratic the extensions F_p^2 for p = 2 mod 3. Ordered by
// field size.
inline std::vector<Field> scan_field_list(std::uint64_t max_p, bool include_quadratic) {
    if (max_p < 3) throw std::invalid_argument("scan needs max-p >= 3");
    std::vector<Field> fields;
    fields.push_back(Field::quad_ext(2));
    for (std::uint64_t p = 3; p <= max_p; ++p) {
        if (!detail::is_prime_u64(p)) continue;
        fields.push_back(Field::prime(p));
        if (include_quadratic && p % 3 == 2) fields.push_back(Field::quad_ext(p));
    }
    std::sort(fields.begin(), fields.end(), [](const Field& x, const Field& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.spec_string() < y.spec_string();
    });
    return fields;
}

inline ScanRow scan_field(const Field& K) {
    ScanRow row;
    row.field_spec = K.spec_string();
    row.q = K.size();

    const ProjPoint inf = ProjPoint::infinity();
    const ProjPoint zero = ProjPoint::finite(K.zero());
    const ProjPoint one = ProjPoint::finite(K.one());
    for (const auto& lam : K.enumerate()) {
        if (lam.is_zero() || lam.is_one()) continue;
        const Classification cls = classify_lambda(K, lam);
        const PointSet frame({inf, zero, one, ProjPoint::finite(lam)});
        const GroupType brute = stabilizer_of_four(frame).group_type;

        row.counts[cls.group_type.name()] += 1;
        row.lambdas.push_back(ScanLambdaRow{lam.to_string(), cls.group_type, cls.theorem_case});
        if (brute != cls.group_type)
            row.mismatches.push_back(
                ScanMismatch{lam.to_string(), cls.group_type.name(), brute.name()});
    }
    return row;
}

// workers = 0 picks hardware concurrency. Each field row is computed by a
// pure worker; rows are merged in field order.
inline ScanReport run_scan(std::uint64_t max_p, bool include_quadratic, unsigned workers = 0) {
    const std::vector<Field> fields = scan_field_list(max_p, include_quadratic);
    ScanReport report;
    report.max_p = max_p;
    report.include_quadratic = include_quadratic;
    report.rows.resize(0);
    report.rows.reserve(fields.size());

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || fields.size() <= 1) {
        for (const auto& K : fields) report.rows.push_back(scan_field(K));
        return report;
    }

    std::vector<std::future<ScanRow>> pending;
    pending.reserve(fields.size());
    for (const auto& K : fields)
        pending.push_back(std::async(std::launch::async, [K] { return scan_field(K); }));
    for (auto& fut : pending) report.rows.push_back(fut.get());
    return report;
}

}  // namespace projstab
