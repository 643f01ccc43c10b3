#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "haemers/representation.hpp"

namespace haemers {

// coef_d * d + coef_n * n, with exact rational coefficients.
struct LinearForm {
    Rational coef_d, coef_n;

    LinearForm operator+(const LinearForm& o) const {
        return {coef_d + o.coef_d, coef_n + o.coef_n};
    }
    LinearForm operator-(const LinearForm& o) const {
        return {coef_d - o.coef_d, coef_n - o.coef_n};
    }
    LinearForm scaled(const Rational& s) const { return {s * coef_d, s * coef_n}; }
    bool is_zero() const { return coef_d == 0 && coef_n == 0; }
    bool operator==(const LinearForm&) const = default;

    Rational eval(const Rational& d, const Rational& n) const {
        return coef_d * d + coef_n * n;
    }
    std::string str() const {
        return to_string(coef_d) + "*d + " + to_string(coef_n) + "*n";
    }
};

// Lower bounds, linear in (d,n), on intersection dimensions of the level
// subspaces in any dual representation of M_r(K_m):
//   a_l  <= dim of the intersection of the odd levels 1,3,...,2l-1
//   b_l  <= dim of the intersection of the even levels 0,2,...,2l
//   c_k  <= dim of the intersection of levels 0..k
struct RecursionTable {
    int m = 0, r = 0;
    std::vector<LinearForm> a;  // a[l] for l = 1.., a[0] unused zero form
    std::vector<LinearForm> b;  // b[l] for l = 0..
    std::vector<LinearForm> c;  // c[k] for k = 0..
};

inline RecursionTable recursion_table(int m, int r) {
    if (m < 2 || r < 2) throw BadParameter("recursion_table needs m >= 2, r >= 2");
    const LinearForm d{1, 0}, n{0, 1};
    RecursionTable t;
    t.m = m;
    t.r = r;
    t.a = {LinearForm{0, 0}, d};                          // a_1 = d
    t.b = {d};                                            // b_0 = d
    t.c = {d, d.scaled(m + 1) - n};                       // c_0 = d, c_1 = (m+1)d - n
    const int L = r / 2;
    for (int l = 1; l <= L; ++l) {
        const auto b_l = t.c[2 * l - 1].scaled(m - 2) + t.b[l - 1] + d.scaled(2) - n;
        t.b.push_back(b_l);
        t.c.push_back(d.scaled(m - 1) + t.a[l] + b_l - n);           // c_{2l}
        const auto a_l1 = t.c[2 * l].scaled(m - 2) + t.a[l] + d.scaled(2) - n;
        t.a.push_back(a_l1);
        t.c.push_back(d.scaled(m - 1) + a_l1 + b_l - n);             // c_{2l+1}
    }
    // keep entries whose level chains exist in M_r: odd chain tip 2l-1 <= r-1,
    // even chain tip 2l <= r-1, full chain tip k <= r-1
    t.a.resize(std::size_t(r / 2) + 1);
    t.b.resize(std::size_t((r - 1) / 2) + 1);
    t.c.resize(std::size_t(r - 1) + 1);
    return t;
}

// Residuals c_k - (m-2)c_{k-1} - (m-1)c_{k-2} - 4d + 2n for k >= 2;
// all must be identically zero.
inline std::vector<LinearForm> lemma2_residual(const RecursionTable& t) {
    const LinearForm d{1, 0}, n{0, 1};
    std::vector<LinearForm> res;
    for (std::size_t k = 2; k < t.c.size(); ++k)
        res.push_back(t.c[k] - t.c[k - 1].scaled(t.m - 2) -
                      t.c[k - 2].scaled(t.m - 1) - d.scaled(4) + n.scaled(2));
    return res;
}

// m(m-2)c_{r-2} + (m-1)^2 c_{r-4} + 4dm - 2nm
//   == [m*S + 1]d - S*n  with  S = sum_{t=0}^{r-1} (m-1)^t.
inline bool lemma3_identity_check(int m, int r) {
    if (m < 2 || r < 4) throw BadParameter("lemma3 check needs m >= 2, r >= 4");
    const auto t = recursion_table(m, r);
    const LinearForm d{1, 0}, n{0, 1};
    const auto lhs = t.c[std::size_t(r - 2)].scaled(Rational(m) * (m - 2)) +
                     t.c[std::size_t(r - 4)].scaled(Rational(m - 1) * (m - 1)) +
                     d.scaled(4 * m) - n.scaled(2 * m);
    const Rational S = geometric_sum(m - 1, r);
    const auto rhs = d.scaled(Rational(m) * S + 1) - n.scaled(S);
    return lhs == rhs;
}

inline Rational clique_lower_bound(int m, int r) {
    if (m < 1 || r < 1) throw BadParameter("clique_lower_bound needs m,r >= 1");
    return Rational(m) + 1 / geometric_sum(m - 1, r);
}

inline Rational lift_upper_bound(const Rational& h, int r) {
    if (h < 1 || r < 1) throw BadParameter("lift_upper_bound needs h >= 1, r >= 1");
    const Rational s = geometric_sum(h - 1, r);
    if (s == 0) throw DomainError("degenerate geometric sum");
    return h + 1 / s;
}

inline Rational tardif_chi(const Rational& chi, int r) {
    if (chi < 1 || r < 1) throw BadParameter("tardif_chi needs chi >= 1, r >= 1");
    const Rational s = geometric_sum(chi - 1, r);
    if (s == 0) throw DomainError("degenerate geometric sum");
    return chi + 1 / s;
}

// Closed form for the complementary theta number of M_2 as a function of
// theta >= 1. The only floating-point code in the library; evaluated with
// an 80-bit (64-bit mantissa) long double.
inline long double theta_mycielski2(long double theta) {
    if (theta < 1.0L) throw DomainError("theta_mycielski2 needs theta >= 1");
    long double arg = 1.0L - 27.0L / (4.0L * theta) + 27.0L / (4.0L * theta * theta);
    if (arg > 1.0L || arg < -1.0L) {
        if (std::fabs(arg) > 1.0L + 1e-15L)
            throw DomainError("arccos argument outside [-1,1]");
        arg = arg > 0 ? 1.0L : -1.0L;
    }
    return 4.0L / 3.0L * theta * std::cos(std::acos(arg) / 3.0L) -
           theta / 3.0L + 1.0L;
}

struct AuditEntry {
    int vertex = 0;        // i in 1..m
    char family = 'c';     // 'a', 'b' or 'c'
    int index = 0;
    Rational bound;
    std::size_t measured = 0;
    bool ok = false;
};

struct AuditReport {
    std::size_t violations = 0;
    std::vector<AuditEntry> entries;
};

// Evaluates every table entry at (d, n) of the given representation of
// M_r(K_m) and compares with the measured intersection dimensions. A
// violation would falsify the recursion system for that representation.
template <class F>
AuditReport audit_against_table(const DualRepresentation<F>& rep,
                                const RecursionTable& t) {
    const int m = t.m, r = t.r;
    // structural match: vertex set {i@k} union {z}
    if (rep.graph.num_vertices() != std::size_t(m) * r + 1)
        throw GraphMismatch("representation graph is not M_r(K_m)");
    for (int i = 1; i <= m; ++i)
        for (int k = 0; k < r; ++k)
            if (!rep.graph.has_vertex(VertexLabel::lvl(std::to_string(i), k)))
                throw GraphMismatch("missing vertex " + std::to_string(i) + "@" +
                                    std::to_string(k));
    if (!rep.graph.has_vertex(VertexLabel::apex()))
        throw GraphMismatch("missing apex vertex");

    const Rational dv(rep.local_dim), nv(rep.ambient);
    AuditReport rpt;
    auto chain_dim = [&](int i, const std::vector<int>& levels) {
        std::vector<std::vector<VertexLabel>> groups;
        for (const int k : levels)
            groups.push_back({VertexLabel::lvl(std::to_string(i), k)});
        return intersection_dim(rep, groups);
    };
    auto record = [&](int i, char fam, int idx, const LinearForm& f,
                      const std::vector<int>& levels) {
        AuditEntry e;
        e.vertex = i;
        e.family = fam;
        e.index = idx;
        e.bound = f.eval(dv, nv);
        e.measured = chain_dim(i, levels);
        e.ok = Rational(e.measured) >= e.bound;
        if (!e.ok) ++rpt.violations;
        rpt.entries.push_back(std::move(e));
    };
    for (int i = 1; i <= m; ++i) {
        for (std::size_t l = 1; l < t.a.size(); ++l) {
            std::vector<int> levels;
            for (std::size_t x = 1; x <= l; ++x) levels.push_back(int(2 * x - 1));
            record(i, 'a', int(l), t.a[l], levels);
        }
        for (std::size_t l = 0; l < t.b.size(); ++l) {
            std::vector<int> levels;
            for (std::size_t x = 0; x <= l; ++x) levels.push_back(int(2 * x));
            record(i, 'b', int(l), t.b[l], levels);
        }
        for (std::size_t k = 0; k < t.c.size(); ++k) {
            std::vector<int> levels;
            for (std::size_t x = 0; x <= k; ++x) levels.push_back(int(x));
            record(i, 'c', int(k), t.c[k], levels);
        }
    }
    return rpt;
}

}  // namespace haemers
