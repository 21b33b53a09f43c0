#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dlsched/errors.hpp"

namespace dlsched {

// Linear chain P_1..P_m. Link i connects P_i to P_{i+1}. All internal
// indices are 0-based; file formats and reports are 1-based.
struct Platform {
    int m = 0;
    std::vector<double> w;   // seconds per unit of computation, one per processor
    std::vector<double> z;   // seconds per unit of data, one per link (m-1)
    std::vector<double> tau; // availability date of each processor, seconds

    int links() const { return m - 1; }
};

struct Load {
    double vcomm = 0.0; // data volume shipped down the chain
    double vcomp = 0.0; // computation volume
};

struct Workload {
    std::vector<Load> loads;

    int size() const { return static_cast<int>(loads.size()); }
};

struct InstallmentCounts {
    std::vector<int> q; // q[n] >= 1

    int total() const {
        int t = 0;
        for (int qn : q) t += qn;
        return t;
    }
};

using Table3 = std::vector<std::vector<std::vector<double>>>;

// Fully timed schedule. Time tables may be empty ("fractions-only"); the
// simulator can derive them.
struct Schedule {
    InstallmentCounts q;
    Table3 fractions;  // [processor][load][installment]
    Table3 comm_start; // [link][load][installment]
    Table3 comm_end;
    Table3 comp_start; // [processor][load][installment]
    Table3 comp_end;
    double makespan = 0.0;

    bool has_times() const { return !comp_start.empty(); }
};

struct Violation {
    int family = 0; // constraint family 1..13
    int i = 0;      // 1-based processor/link index, 0 when not applicable
    int n = 0;      // 1-based load index, 0 when not applicable
    int j = 0;      // 1-based installment index, 0 when not applicable
    double residual = 0.0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct ValidateOptions {
    // Constraint (6): computation waits for the data arriving on link i-1.
    // When set, additionally require P_i (2 <= i <= m-1) to finish
    // forwarding an installment before computing it.
    bool strict_forward_before_compute = false;
};

inline Table3 make_table(int outer, const InstallmentCounts& q, double fill = 0.0) {
    Table3 t(outer);
    for (auto& per_load : t) {
        per_load.resize(q.q.size());
        for (std::size_t n = 0; n < q.q.size(); ++n) per_load[n].assign(q.q[n], fill);
    }
    return t;
}

// Data carried over link `link` for installment (n, j): everything the
// processors past the link will compute. Single shared definition so the
// validator, the LP builder, and the timing engine agree bit-for-bit.
inline double payload_units(const Workload& wl, const Table3& fractions, int link, int n, int j) {
    double s = 0.0;
    const int m = static_cast<int>(fractions.size());
    for (int k = link + 1; k < m; ++k) s += fractions[k][n][j];
    return wl.loads[n].vcomm * s;
}

inline Platform validate_platform(const Platform& raw) {
    if (raw.m < 1) throw error(errc::length_mismatch, "m must be >= 1, got " + std::to_string(raw.m));
    auto check_len = [&](const char* name, std::size_t got, std::size_t want) {
        if (got != want)
            throw error(errc::length_mismatch, std::string(name) + " has length " + std::to_string(got) +
                                                   ", expected " + std::to_string(want));
    };
    check_len("w", raw.w.size(), static_cast<std::size_t>(raw.m));
    check_len("z", raw.z.size(), static_cast<std::size_t>(raw.m - 1));
    check_len("tau", raw.tau.size(), static_cast<std::size_t>(raw.m));
    for (int i = 0; i < raw.m; ++i) {
        if (!(raw.w[i] > 0.0) || !std::isfinite(raw.w[i]))
            throw error(errc::non_positive_rate, "w[" + std::to_string(i + 1) + "] = " + std::to_string(raw.w[i]));
    }
    for (int i = 0; i + 1 < raw.m; ++i) {
        if (!(raw.z[i] > 0.0) || !std::isfinite(raw.z[i]))
            throw error(errc::non_positive_rate, "z[" + std::to_string(i + 1) + "] = " + std::to_string(raw.z[i]));
    }
    for (int i = 0; i < raw.m; ++i) {
        if (!(raw.tau[i] >= 0.0) || !std::isfinite(raw.tau[i]))
            throw error(errc::negative_availability,
                        "tau[" + std::to_string(i + 1) + "] = " + std::to_string(raw.tau[i]));
    }
    return raw;
}

inline Workload validate_workload(const Workload& raw) {
    if (raw.loads.empty()) throw error(errc::length_mismatch, "workload must contain at least one load");
    for (std::size_t n = 0; n < raw.loads.size(); ++n) {
        if (!(raw.loads[n].vcomm > 0.0) || !std::isfinite(raw.loads[n].vcomm))
            throw error(errc::non_positive_rate, "loads[" + std::to_string(n + 1) + "].vcomm");
        if (!(raw.loads[n].vcomp > 0.0) || !std::isfinite(raw.loads[n].vcomp))
            throw error(errc::non_positive_rate, "loads[" + std::to_string(n + 1) + "].vcomp");
    }
    return raw;
}

inline InstallmentCounts validate_installments(const InstallmentCounts& raw, const Workload& wl) {
    if (raw.q.size() != wl.loads.size())
        throw error(errc::length_mismatch, "q has length " + std::to_string(raw.q.size()) + ", expected " +
                                               std::to_string(wl.loads.size()));
    for (std::size_t n = 0; n < raw.q.size(); ++n)
        if (raw.q[n] < 1)
            throw error(errc::length_mismatch, "q[" + std::to_string(n + 1) + "] must be >= 1");
    return raw;
}

namespace detail {

inline void check_table_shape(const Table3& t, const char* name, int outer, const InstallmentCounts& q) {
    if (static_cast<int>(t.size()) != outer)
        throw error(errc::index_mismatch, std::string(name) + " outer size " + std::to_string(t.size()) +
                                              ", expected " + std::to_string(outer));
    for (const auto& per_load : t) {
        if (per_load.size() != q.q.size())
            throw error(errc::index_mismatch, std::string(name) + " load dimension mismatch");
        for (std::size_t n = 0; n < per_load.size(); ++n)
            if (static_cast<int>(per_load[n].size()) != q.q[n])
                throw error(errc::index_mismatch, std::string(name) + " installment dimension mismatch at load " +
                                                      std::to_string(n + 1));
    }
}

} // namespace detail

// Checks every constraint family (1)-(13) of the one-port chain model with
// absolute tolerance tol. Equalities (5), (7), (12) are checked two-sided.
inline ValidationReport validate_schedule(const Platform& p, const Workload& wl, const InstallmentCounts& q,
                                          const Schedule& s, double tol, ValidateOptions opts = {}) {
    const int m = p.m;
    const int N = wl.size();
    validate_installments(q, wl);
    detail::check_table_shape(s.fractions, "fractions", m, q);
    if (!s.has_times()) throw error(errc::index_mismatch, "schedule has no time tables");
    detail::check_table_shape(s.comm_start, "comm_start", m - 1, q);
    detail::check_table_shape(s.comm_end, "comm_end", m - 1, q);
    detail::check_table_shape(s.comp_start, "comp_start", m, q);
    detail::check_table_shape(s.comp_end, "comp_end", m, q);

    ValidationReport rep;
    auto lower = [&](int family, int i, int n, int j, double lhs, double rhs) {
        // require lhs >= rhs within tol
        if (lhs < rhs - tol) rep.violations.push_back({family, i, n, j, rhs - lhs});
    };
    auto equal = [&](int family, int i, int n, int j, double lhs, double rhs) {
        if (std::abs(lhs - rhs) > tol) rep.violations.push_back({family, i, n, j, std::abs(lhs - rhs)});
    };

    for (int n = 0; n < N; ++n) {
        for (int j = 0; j < q.q[n]; ++j) {
            // (1) a transfer leaves P_{i+1} only after it fully arrived there
            for (int li = 0; li + 1 < m - 1; ++li)
                lower(1, li + 2, n + 1, j + 1, s.comm_start[li + 1][n][j], s.comm_end[li][n][j]);
            // (2) receive of installment j+1 waits for the forward of installment j
            if (j + 1 < q.q[n])
                for (int li = 0; li + 1 < m - 1; ++li)
                    lower(2, li + 1, n + 1, j + 2, s.comm_start[li][n][j + 1], s.comm_end[li + 1][n][j]);
            for (int li = 0; li < m - 1; ++li) {
                // (4) transfers begin at nonnegative times
                lower(4, li + 1, n + 1, j + 1, s.comm_start[li][n][j], 0.0);
                // (5) transfer duration = z_i * volume past the link
                equal(5, li + 1, n + 1, j + 1, s.comm_end[li][n][j],
                      s.comm_start[li][n][j] + p.z[li] * payload_units(wl, s.fractions, li, n, j));
            }
            // (6) computing waits for the data arriving on the upstream link
            for (int i = 1; i < m; ++i)
                lower(6, i + 1, n + 1, j + 1, s.comp_start[i][n][j], s.comm_end[i - 1][n][j]);
            if (opts.strict_forward_before_compute)
                for (int i = 1; i < m - 1; ++i)
                    lower(6, i + 1, n + 1, j + 1, s.comp_start[i][n][j], s.comm_end[i][n][j]);
            // (7) computation duration = w_i * gamma * vcomp
            for (int i = 0; i < m; ++i)
                equal(7, i + 1, n + 1, j + 1, s.comp_end[i][n][j],
                      s.comp_start[i][n][j] + p.w[i] * s.fractions[i][n][j] * wl.loads[n].vcomp);
            // (9) installments of a load are computed in order
            if (j + 1 < q.q[n])
                for (int i = 0; i < m; ++i)
                    lower(9, i + 1, n + 1, j + 2, s.comp_start[i][n][j + 1], s.comp_end[i][n][j]);
            // (11) fractions are nonnegative
            for (int i = 0; i < m; ++i)
                lower(11, i + 1, n + 1, j + 1, s.fractions[i][n][j], 0.0);
        }
        if (n + 1 < N) {
            // (3) receive of the next load waits for the forward of the last installment
            for (int li = 0; li + 1 < m - 1; ++li)
                lower(3, li + 1, n + 2, 1, s.comm_start[li][n + 1][0], s.comm_end[li + 1][n][q.q[n] - 1]);
            // (8) loads are computed in order
            for (int i = 0; i < m; ++i)
                lower(8, i + 1, n + 2, 1, s.comp_start[i][n + 1][0], s.comp_end[i][n][q.q[n] - 1]);
        }
        // (12) the load is completely processed
        double sum = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < q.q[n]; ++j) sum += s.fractions[i][n][j];
        equal(12, 0, n + 1, 0, sum, 1.0);
    }
    // (10) first computation not before the availability date
    for (int i = 0; i < m; ++i) lower(10, i + 1, 1, 1, s.comp_start[i][0][0], p.tau[i]);
    // (13) makespan covers the last installment of the last load everywhere
    for (int i = 0; i < m; ++i)
        lower(13, i + 1, N, q.q[N - 1], s.makespan, s.comp_end[i][N - 1][q.q[N - 1] - 1]);

    rep.ok = rep.violations.empty();
    return rep;
}

// Completion time of the last installment of the last load over all processors.
inline double makespan_of(const Schedule& s) {
    if (!s.has_times()) throw error(errc::domain_error, "makespan_of requires a timed schedule");
    const std::size_t N = s.q.q.size();
    double best = 0.0;
    for (const auto& per_load : s.comp_end) best = std::max(best, per_load[N - 1].back());
    return best;
}

} // namespace dlsched
