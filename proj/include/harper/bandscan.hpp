#ifndef HARPER_BANDSCAN_HPP
#define HARPER_BANDSCAN_HPP

#include <iomanip>
#include <ostream>
#include <vector>

#include "harper/hamiltonian.hpp"

namespace harper {

struct BandPoint {
    std::vector<double> t;      // turns in [0, 1)
    std::vector<double> levels; // ascending eigenvalues
    double gap = 0;             // minimal consecutive-level spacing
};

inline BandPoint band_point(const AMatrix& H, const std::vector<double>& t) {
    BandPoint p;
    p.t = t;
    EigenSystem es = hermitian_eigensystem(H.eval(TorusPoint::turns(t)));
    p.levels = es.values;
    p.gap = min_gap(es.values);
    return p;
}

// Uniform grid over the torus, half-open in every axis: t_i in {j/N, j < N}.
inline std::vector<BandPoint> scan_grid(const AMatrix& H, int divisions) {
    const int n = H.rank;
    std::vector<BandPoint> out;
    std::vector<int> idx(n, 0);
    for (bool done = false; !done;) {
        std::vector<double> t(n);
        for (int i = 0; i < n; ++i) t[i] = double(idx[i]) / double(divisions);
        out.push_back(band_point(H, t));
        done = true;
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[i] < divisions) { done = false; break; }
            idx[i] = 0;
        }
    }
    return out;
}

// Piecewise-linear path through the listed waypoints, `steps` samples per
// segment; the final waypoint is included (closed sampling).
inline std::vector<BandPoint> scan_path(const AMatrix& H,
                                        const std::vector<std::vector<double>>& waypoints,
                                        int steps) {
    std::vector<BandPoint> out;
    const int n = H.rank;
    for (size_t s = 0; s + 1 < waypoints.size(); ++s) {
        const int last = (s + 2 == waypoints.size()) ? steps : steps - 1;
        for (int j = 0; j <= last; ++j) {
            double u = double(j) / double(steps);
            std::vector<double> t(n);
            for (int i = 0; i < n; ++i)
                t[i] = (1.0 - u) * waypoints[s][i] + u * waypoints[s + 1][i];
            out.push_back(band_point(H, t));
        }
    }
    if (waypoints.size() == 1) out.push_back(band_point(H, waypoints[0]));
    return out;
}

// CSV with 12 significant digits: t_1..t_n, lambda_1..lambda_k, min_gap.
inline void write_band_csv(std::ostream& os, const std::vector<BandPoint>& pts, int rank, int k) {
    for (int i = 0; i < rank; ++i) os << "t_" << (i + 1) << ",";
    for (int i = 0; i < k; ++i) os << "lambda_" << (i + 1) << ",";
    os << "min_gap\n";
    os << std::setprecision(12);
    for (const auto& p : pts) {
        for (double x : p.t) os << x << ",";
        for (double x : p.levels) os << x << ",";
        os << p.gap << "\n";
    }
}

// Indices of local gap minima below the threshold: candidate degeneracy
// locations along a scan.
inline std::vector<int> degeneracy_candidates(const std::vector<BandPoint>& pts, double tol) {
    std::vector<int> out;
    for (int i = 0; i < int(pts.size()); ++i) {
        if (pts[i].gap > tol) continue;
        bool left_ok = (i == 0) || pts[i - 1].gap >= pts[i].gap - 1e-15;
        bool right_ok = (i + 1 == int(pts.size())) || pts[i + 1].gap > pts[i].gap;
        if (left_ok && right_ok) out.push_back(i);
    }
    return out;
}

} // namespace harper

#endif
