#ifndef HARPER_CHARTABLE_HPP
#define HARPER_CHARTABLE_HPP

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "harper/phaseperm.hpp"

namespace harper {

// Character table of a finite group given by explicit unitary elements.
// Rows are irreducible characters, columns are conjugacy classes; column 0 is
// the class of the identity, so row entries at column 0 are the degrees.
struct CharacterTable {
    std::vector<std::vector<int>> classes; // index lists into the element vector
    std::vector<int> class_sizes;
    std::vector<std::vector<Complex>> chi; // chi[irrep][class]
    std::vector<int> degrees;
};

// Burnside class-sum algorithm: the common eigenvectors of the class
// multiplication matrices are the central character vectors; a random linear
// combination separates them generically.
inline CharacterTable character_table(const std::vector<PhasePermMatrix>& grp,
                                      unsigned seed = 12345) {
    const int N = int(grp.size());
    std::map<PhasePermMatrix, int> index;
    for (int i = 0; i < N; ++i) index[grp[i]] = i;
    CharacterTable tab;
    tab.classes = conjugacy_classes(grp);
    // identity class first, then by size, then by representative order
    std::sort(tab.classes.begin(), tab.classes.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  bool eida = false, eidb = false;
                  for (int x : a) eida |= grp[x].is_identity();
                  for (int x : b) eidb |= grp[x].is_identity();
                  if (eida != eidb) return eida;
                  if (a.size() != b.size()) return a.size() < b.size();
                  return grp[a[0]] < grp[b[0]];
              });
    const int r = int(tab.classes.size());
    for (auto& c : tab.classes) tab.class_sizes.push_back(int(c.size()));

    std::vector<int> class_of(N, -1);
    for (int c = 0; c < r; ++c)
        for (int i : tab.classes[c]) class_of[i] = c;

    // a[i][j][k]: number of factorizations of the representative of class k
    // as x*y with x in class i, y in class j
    std::vector<int> rep(r);
    for (int c = 0; c < r; ++c) rep[c] = tab.classes[c][0];
    std::vector<Eigen::MatrixXcd> M(r, Eigen::MatrixXcd::Zero(r, r));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            // count x in C_i with x^{-1} z_k in C_j
            for (int xi : tab.classes[i]) {
                int prod = index.at(grp[xi].inverse() * grp[rep[k]]);
                M[i](class_of[prod], k) += 1.0;
            }
        }

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.25, 1.0);
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(r, r);
    for (int i = 0; i < r; ++i) R += Complex(dist(rng), dist(rng)) * M[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(R);
    Eigen::MatrixXcd V = solver.eigenvectors();

    // identity class index (should be 0 after sorting)
    int id_class = 0;
    tab.chi.assign(r, std::vector<Complex>(r));
    tab.degrees.assign(r, 0);
    for (int col = 0; col < r; ++col) {
        // omega_j = |C_j| chi(g_j) / d, with omega at the identity class = 1
        Complex w0 = V(id_class, col);
        std::vector<Complex> omega(r);
        for (int j = 0; j < r; ++j) omega[j] = V(j, col) / w0;
        double s = 0;
        for (int j = 0; j < r; ++j) s += std::norm(omega[j]) / double(tab.class_sizes[j]);
        double d = std::sqrt(double(N) / s);
        tab.degrees[col] = int(std::lround(d));
        for (int j = 0; j < r; ++j)
            tab.chi[col][j] = d * omega[j] / double(tab.class_sizes[j]);
    }
    // deterministic row order: degree, then character values lexicographically
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    auto less_row = [&](int a, int b) {
        if (tab.degrees[a] != tab.degrees[b]) return tab.degrees[a] < tab.degrees[b];
        for (int j = 0; j < r; ++j) {
            Complex x = tab.chi[a][j], y = tab.chi[b][j];
            if (std::abs(x - y) > 1e-8) {
                if (std::abs(x.real() - y.real()) > 1e-8) return x.real() < y.real();
                return x.imag() < y.imag();
            }
        }
        return false;
    };
    std::sort(order.begin(), order.end(), less_row);
    auto chi0 = tab.chi;
    auto deg0 = tab.degrees;
    for (int i = 0; i < r; ++i) {
        tab.chi[i] = chi0[order[i]];
        tab.degrees[i] = deg0[order[i]];
    }
    return tab;
}

// Multiplicity of each irreducible in the natural (matrix) representation.
inline std::vector<int> decompose_natural(const CharacterTable& tab,
                                          const std::vector<PhasePermMatrix>& grp,
                                          double* residual = nullptr) {
    const int r = int(tab.classes.size());
    long long N = 0;
    for (int s : tab.class_sizes) N += s;
    std::vector<Complex> chi_nat(r);
    for (int j = 0; j < r; ++j) chi_nat[j] = grp[tab.classes[j][0]].trace();
    std::vector<int> mult(r);
    double worst = 0;
    for (int i = 0; i < r; ++i) {
        Complex a = 0;
        for (int j = 0; j < r; ++j)
            a += double(tab.class_sizes[j]) * chi_nat[j] * std::conj(tab.chi[i][j]);
        a /= double(N);
        mult[i] = int(std::lround(a.real()));
        worst = std::max(worst, std::abs(a - Complex(mult[i], 0)));
    }
    if (residual) *residual = worst;
    return mult;
}

// Isotypic projector of irrep i: (d_i/|G|) sum_g conj(chi_i(g)) g.
inline CMatrix isotypic_projector(const CharacterTable& tab,
                                  const std::vector<PhasePermMatrix>& grp, int irrep) {
    const int n = grp[0].n();
    long long N = 0;
    for (int s : tab.class_sizes) N += s;
    CMatrix P(n, n);
    for (int j = 0; j < int(tab.classes.size()); ++j) {
        Complex c = std::conj(tab.chi[irrep][j]) * double(tab.degrees[irrep]) / double(N);
        for (int gi : tab.classes[j]) {
            const auto& g = grp[gi];
            for (int col = 0; col < n; ++col) P(g.perm[col], col) += c * unit_phase(g.phases[col]);
        }
    }
    return P;
}

// Do two character tables agree up to relabeling of irreps and classes?
// Columns may only be matched when class sizes agree; rows are compared as
// multisets after each column assignment.
inline bool tables_match(const std::vector<int>& sizes_a,
                         const std::vector<std::vector<Complex>>& chi_a,
                         const std::vector<int>& sizes_b,
                         const std::vector<std::vector<Complex>>& chi_b, double tol = 1e-6) {
    const int r = int(sizes_a.size());
    if (int(sizes_b.size()) != r || chi_a.size() != chi_b.size()) return false;
    std::vector<int> perm(r, -1); // column j of b matched to perm[j] of a
    std::vector<char> used(r, 0);
    auto rows_match = [&]() {
        std::vector<char> taken(r, 0);
        for (int i = 0; i < r; ++i) {
            bool found = false;
            for (int i2 = 0; i2 < r && !found; ++i2) {
                if (taken[i2]) continue;
                bool ok = true;
                for (int j = 0; j < r && ok; ++j)
                    if (std::abs(chi_b[i][j] - chi_a[i2][perm[j]]) > tol) ok = false;
                if (ok) { taken[i2] = 1; found = true; }
            }
            if (!found) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int j) -> bool {
        if (j == r) return rows_match();
        for (int t = 0; t < r; ++t) {
            if (used[t] || sizes_a[t] != sizes_b[j]) continue;
            perm[j] = t;
            used[t] = 1;
            if (self(self, j + 1)) return true;
            used[t] = 0;
            perm[j] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace harper

#endif
