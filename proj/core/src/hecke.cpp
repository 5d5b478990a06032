#include "reflie/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace reflie {

namespace {

Poly<Rational> poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return Poly<Rational>(std::move(c));
}

RF frac(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RF(poly(num), poly(den));
}

Mat<RF> zero_mat(int n) { return Mat<RF>(n, n, RF()); }

}  // namespace

HeckeModel builtin_d4() {
    const RF q = RF::q();
    // (q - 1/q)/2 and (q + 1/q)/2
    const RF hm = frac({-1, 0, 1}, {0, 2});
    const RF hp = frac({1, 0, 1}, {0, 2});

    Mat<RF> s1 = zero_mat(4);
    s1(0, 0) = q;
    s1(1, 1) = q;
    s1(2, 2) = hm;
    s1(2, 3) = -hp;
    s1(3, 2) = -hp;
    s1(3, 3) = hm;

    Mat<RF> s2 = zero_mat(4);
    s2(0, 0) = q;
    s2(1, 1) = q;
    s2(2, 2) = hm;
    s2(2, 3) = hp;
    s2(3, 2) = hp;
    s2(3, 3) = hm;

    Mat<RF> s3 = zero_mat(4);
    s3(0, 0) = q;
    s3(1, 1) = frac({-1, 0, 1}, {0, 1, 0, 1});     // (q^2-1)/(q^3+q)
    s3(1, 2) = frac({0, 2}, {1, 0, 1});            // 2q/(1+q^2)
    s3(2, 1) = frac({1, 0, 0, 0, 1}, {0, 1, 0, 1});  // (1+q^4)/(q+q^3)
    s3(2, 2) = frac({0, -1, 0, 1}, {1, 0, 1});     // (q^3-q)/(1+q^2)
    s3(3, 3) = q;

    Mat<RF> s4 = zero_mat(4);
    s4(0, 0) = frac({-1, 0, 1}, {0, 1, 0, 0, 0, 1});        // (q^2-1)/(q+q^5)
    s4(0, 1) = frac({0, 1, 0, 1}, {1, 0, 0, 0, 1});         // (q+q^3)/(1+q^4)
    s4(1, 0) = frac({1, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1});  // (q^6+1)/(q^5+q)
    s4(1, 1) = frac({0, 0, 0, -1, 0, 1}, {1, 0, 0, 0, 1});  // (q^5-q^3)/(q^4+1)
    s4(2, 2) = q;
    s4(3, 3) = q;

    HeckeModel m;
    m.label = "d4-reflection";
    m.dim = 4;
    m.generators = {{"s1", std::move(s1)},
                    {"s2", std::move(s2)},
                    {"s3", std::move(s3)},
                    {"s4", std::move(s4)}};
    return m;
}

Mat<RF> bar(const Mat<RF>& a) {
    Mat<RF> b = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) b(i, j) = a(i, j).bar();
    return b;
}

Mat<Rational> evaluate(const Mat<RF>& a, const Rational& x) {
    Mat<Rational> b(a.rows(), a.cols(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) b(i, j) = a(i, j).at(x);
    return b;
}

HeckeRelationReport check_relations(const HeckeModel& m) {
    HeckeRelationReport rep;
    if (m.dim <= 0 || m.generators.empty()) {
        rep.failures.push_back("model has no generators");
        return rep;
    }
    const RF q = RF::q();
    const Mat<RF> id = Mat<RF>::identity(m.dim, RF());

    rep.quadratic = true;
    for (const auto& [name, s] : m.generators) {
        if (s.rows() != m.dim || s.cols() != m.dim) {
            rep.failures.push_back(name + ": matrix dimension mismatch");
            rep.quadratic = false;
            continue;
        }
        if (!((s - q * id) * (s + q.inv() * id)).is_zero()) {
            rep.failures.push_back(name + ": (s - q)(s + 1/q) != 0");
            rep.quadratic = false;
        }
    }
    if (!rep.quadratic) return rep;

    rep.pairwise = true;
    const int n = static_cast<int>(m.generators.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Mat<RF>& a = m.generators[i].second;
            const Mat<RF>& b = m.generators[j].second;
            if (a * b == b * a) {
                rep.commuting.emplace_back(i, j);
            } else if (a * b * a == b * a * b) {
                rep.braiding.emplace_back(i, j);
            } else {
                rep.failures.push_back(m.generators[i].first + "," + m.generators[j].first +
                                       ": neither commute nor braid");
                rep.pairwise = false;
            }
        }

    rep.orthogonal_at_one = true;
    for (const auto& [name, s] : m.generators) {
        bool pole = false;
        for (int i = 0; i < m.dim && !pole; ++i)
            for (int j = 0; j < m.dim && !pole; ++j)
                if (!s(i, j).defined_at(Rational(1))) pole = true;
        if (pole) {
            rep.failures.push_back(name + ": pole at q = 1");
            rep.orthogonal_at_one = false;
            continue;
        }
        Mat<Rational> w = evaluate(s, Rational(1));
        Mat<Rational> idq = Mat<Rational>::identity(m.dim, Rational(1));
        if (w * w != idq || w * w.transpose() != idq) {
            rep.failures.push_back(name + ": q = 1 image is not an orthogonal involution");
            rep.orthogonal_at_one = false;
        }
    }
    return rep;
}

namespace {

// Nullspace of the (rows x ncols) system over Q(q) by reduced row echelon.
std::vector<std::vector<RF>> kernel_basis(std::vector<std::vector<RF>> rows, int ncols) {
    const RF zero;
    std::vector<std::vector<RF>> rref;
    std::vector<int> pivots;
    for (auto& row : rows) {
        for (size_t r = 0; r < rref.size(); ++r) {
            const RF c = row[pivots[r]];
            if (c.is_zero()) continue;
            for (int j = 0; j < ncols; ++j) row[j] -= c * rref[r][j];
        }
        int p = -1;
        for (int j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) continue;
        const RF inv = row[p].inv();
        for (int j = 0; j < ncols; ++j) row[j] = inv * row[j];
        for (size_t r = 0; r < rref.size(); ++r) {
            const RF c = rref[r][p];
            if (c.is_zero()) continue;
            for (int j = 0; j < ncols; ++j) rref[r][j] -= c * row[j];
        }
        rref.push_back(std::move(row));
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<RF>> kernel;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RF> v(ncols, zero);
        v[f] = RF(1);
        for (size_t r = 0; r < rref.size(); ++r) v[pivots[r]] = -rref[r][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

long min_order_at_one(const Mat<RF>& j) {
    bool seen = false;
    long m = 0;
    for (int a = 0; a < j.rows(); ++a)
        for (int b = 0; b < j.cols(); ++b) {
            if (j(a, b).is_zero()) continue;
            long o = j(a, b).order_at_one();
            if (!seen || o < m) m = o, seen = true;
        }
    if (!seen) throw std::domain_error("invariant form: zero matrix");
    return m;
}

}  // namespace

Mat<RF> solve_form(const HeckeModel& m) {
    const int n = m.dim;
    if (n <= 0 || m.generators.empty())
        throw std::invalid_argument("invariant form: empty model");

    // Linear system bar(transpose(S)) J - J S^-1 = 0 in the n^2 entries of J.
    std::vector<std::vector<RF>> rows;
    rows.reserve(m.generators.size() * n * n);
    for (const auto& [name, s] : m.generators) {
        (void)name;
        const Mat<RF> mt = bar(s.transpose());
        const Mat<RF> pinv = mat_inverse(s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<RF> row(static_cast<size_t>(n) * n, RF());
                for (int k = 0; k < n; ++k) row[static_cast<size_t>(k) * n + j] += mt(i, k);
                for (int l = 0; l < n; ++l) row[static_cast<size_t>(i) * n + l] -= pinv(l, j);
                rows.push_back(std::move(row));
            }
    }
    auto kernel = kernel_basis(std::move(rows), n * n);
    if (kernel.size() != 1)
        throw std::domain_error("invariant form: solution space has dimension " +
                                std::to_string(kernel.size()) +
                                ", expected 1 (model reducible or relations violated)");

    Mat<RF> j(n, n, RF());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) j(a, b) = kernel[0][static_cast<size_t>(a) * n + b];

    // Symmetrize: bar(transpose(J)) solves the same rank-1 system, so the
    // sum is either the symmetric representative or zero (skew case).
    Mat<RF> sym = j + bar(j.transpose());
    if (sym.is_zero())
        throw std::domain_error("invariant form: the solution is skew under bar-transpose");
    j = sym;

    // Clear (q-1) powers with the bar-invariant scalar (q-1)^2/q, keeping
    // transpose(J) = bar(J); the minimal vanishing order is even for such J.
    long ord = min_order_at_one(j);
    if (ord % 2 != 0)
        throw std::logic_error("invariant form: odd vanishing order at q = 1");
    const RF unit = frac({1, -2, 1}, {0, 1});  // q - 2 + 1/q
    RF scale(1);
    for (long k = 0; k < std::abs(ord) / 2; ++k) scale *= unit;
    if (ord > 0) scale = scale.inv();
    j = scale * j;

    // J at q = 1 intertwines the irreducible q = 1 specialization with
    // itself, hence is a scalar; rescale it to the identity.
    Mat<Rational> j1 = evaluate(j, Rational(1));
    const Rational c = j1(0, 0);
    if (is_zero(c)) throw std::domain_error("invariant form: vanishing q = 1 scalar");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (j1(a, b) != (a == b ? c : Rational(0)))
                throw std::logic_error("invariant form: q = 1 value is not scalar");
    j = RF(c).inv() * j;

    // The solution line tolerates any bar-invariant scalar that is 1 at
    // q = 1; pin the representative by making the (0,0) entry exactly 1
    // (nonzero since it evaluates to 1). This also keeps J(1) = Id.
    j = j(0, 0).inv() * j;

    // Exact contract checks: invariance, bar-symmetry, normalization.
    for (const auto& [name, s] : m.generators)
        if (bar(s.transpose()) * j != j * mat_inverse(s))
            throw std::logic_error("invariant form: invariance fails for " + name);
    if (bar(j.transpose()) != j)
        throw std::logic_error("invariant form: bar-transpose symmetry fails");
    if (j(0, 0) != RF(1)) throw std::logic_error("invariant form: leading entry not 1");
    if (evaluate(j, Rational(1)) != Mat<Rational>::identity(n, Rational(1)))
        throw std::logic_error("invariant form: q = 1 normalization fails");
    return j;
}

std::vector<double> hermitian_eigenvalues(std::vector<std::vector<std::complex<double>>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0, diag = 0;
        for (int p = 0; p < n; ++p) {
            diag += std::abs(a[p][p]);
            for (int q = p + 1; q < n; ++q) off += std::abs(a[p][q]);
        }
        if (off <= 1e-14 * (1.0 + diag)) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> mpq = a[p][q];
                const double am = std::abs(mpq);
                if (am <= 1e-300) {
                    a[p][q] = a[q][p] = 0;
                    continue;
                }
                const double app = a[p][p].real(), aqq = a[q][q].real();
                const double tau = (aqq - app) / (2 * am);
                const double t = (tau >= 0) ? -1.0 / (tau + std::sqrt(tau * tau + 1))
                                            : 1.0 / (-tau + std::sqrt(tau * tau + 1));
                const double c = 1.0 / std::sqrt(1 + t * t), s = t * c;
                const std::complex<double> e = mpq / am;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const std::complex<double> akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp + s * std::conj(e) * akq;
                    a[k][q] = -s * e * akp + c * akq;
                    a[p][k] = std::conj(a[k][p]);
                    a[q][k] = std::conj(a[k][q]);
                }
                a[p][p] = app * c * c + 2 * am * c * s + aqq * s * s;
                a[q][q] = app * s * s - 2 * am * c * s + aqq * c * c;
                a[p][q] = a[q][p] = 0;
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i].real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

struct PointSignature {
    int plus = 0, minus = 0, zero = 0;
    double defect = 0;
};

PointSignature signature_at(const Mat<RF>& j, double x, double zero_band) {
    const int n = j.rows();
    const std::complex<double> q = std::polar(1.0, x);
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = j(r, c)(q);
    PointSignature out;
    double amax = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) amax = std::max(amax, std::abs(a[r][c]));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const std::complex<double> d = a[r][c] - std::conj(a[c][r]);
            // Relative to the matrix magnitude: near a pole the entries are
            // huge and the absolute residue scales with them.
            out.defect = std::max(out.defect, std::abs(d) / (2 * std::max(1.0, amax)));
        }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const std::complex<double> h = (a[r][c] + std::conj(a[c][r])) / 2.0;
            a[r][c] = h;
        }
    for (double ev : hermitian_eigenvalues(std::move(a))) {
        if (ev > zero_band)
            ++out.plus;
        else if (ev < -zero_band)
            ++out.minus;
        else
            ++out.zero;
    }
    return out;
}

}  // namespace

SignatureScan signature_scan(const Mat<RF>& j, int samples, double xmax, double zero_band,
                             double xtol) {
    if (samples < 2) throw std::invalid_argument("signature scan: need at least 2 samples");
    SignatureScan scan;
    std::vector<double> xs(samples);
    std::vector<PointSignature> sig(samples);
    for (int k = 0; k < samples; ++k) {
        xs[k] = xmax * (k + 1) / samples;
        sig[k] = signature_at(j, xs[k], zero_band);
        scan.max_hermitian_defect = std::max(scan.max_hermitian_defect, sig[k].defect);
        scan.samples.push_back({xs[k], sig[k].plus, sig[k].minus, sig[k].zero});
        if (sig[k].zero > 0) scan.indeterminate.push_back(xs[k]);
    }
    auto same = [](const PointSignature& a, const PointSignature& b) {
        return a.plus == b.plus && a.minus == b.minus;
    };
    SignatureInterval cur{0, xs[0], sig[0].plus, sig[0].minus};
    for (int k = 1; k < samples; ++k) {
        if (same(sig[k - 1], sig[k])) {
            cur.to = xs[k];
            continue;
        }
        double lo = xs[k - 1], hi = xs[k];
        PointSignature left = sig[k - 1];
        while (hi - lo > xtol) {
            const double mid = (lo + hi) / 2;
            PointSignature ms = signature_at(j, mid, zero_band);
            if (same(ms, left))
                lo = mid;
            else
                hi = mid;
        }
        const double boundary = (lo + hi) / 2;
        scan.boundaries.push_back(boundary);
        cur.to = boundary;
        scan.intervals.push_back(cur);
        cur = {boundary, xs[k], sig[k].plus, sig[k].minus};
    }
    scan.intervals.push_back(cur);
    return scan;
}

}  // namespace reflie
