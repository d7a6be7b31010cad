#include "vertexkit/vertex.hpp"

namespace vk {

namespace {

void check_diagram(const ArcDiagram& d) {
    if (!validate(d)) throw std::invalid_argument("invalid arc diagram " + to_string(d));
    require_exact_n(d.n, "vertex construction");
}

QProfile profile_from_state(const PatternSolveState& st) {
    QProfile q(st.n);
    for (std::size_t j = 1; j < st.n; ++j)
        for (std::size_t m = 1; m + j <= st.n; ++m) q.at(m, j) = st.q[j] * st.v[j][m - 1];
    return q;
}

}  // namespace

PatternSolveState pattern_solve(const ArcDiagram& d) {
    check_diagram(d);
    const std::size_t n = d.n;
    PatternSolveState st;
    st.n = n;
    st.v.resize(n);
    st.M.resize(n);
    st.q.resize(n);
    if (n == 1) return st;
    st.v[n - 1] = {Rational(1)};
    st.M[n - 1] = RMatrix{{1}};
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t s = n - i - 1;
        const RMatrix& next = st.M[i + 1];
        RVector w(s);
        for (std::size_t a = 0; a < s; ++a) w[a] = binomial(static_cast<long>(s), static_cast<long>(a));
        RVector m = left_multiply(left_multiply(st.v[i + 1], pascal_P(s)), next);
        RMatrix cur(s + 1, s + 1);
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b) cur(a, b) = next(a, b) + w[a] * m[b];
            cur(a, s) = w[a];
            cur(s, a) = m[a];
        }
        cur(s, s) = 1;
        st.M[i] = std::move(cur);
        if (i >= 1) {
            RVector u = st.M[i].col(n - d.k(i));
            const Rational last = u.back();
            if (sgn(last) == 0) throw SingularMatrixError();
            st.v[i] = Rational(1) / last * u;
        }
    }
    const Rational inv_n = frac(1, static_cast<long>(n));
    // (1, q_{N-1}, ..., q_1) = (1/N) [m_0^T, 1], m_0^T being the last row of M_0 without its corner
    for (std::size_t j = 1; j < n; ++j) {
        const std::size_t idx = n - j;
        st.q[j] = inv_n * (idx + 1 == n ? Rational(1) : st.M[0](n - 1, idx));
    }
    return st;
}

QProfile q_from_pattern(const ArcDiagram& d) { return profile_from_state(pattern_solve(d)); }

RMatrix pattern_L(const ArcDiagram& d, const std::vector<RVector>& v, std::size_t j) {
    const std::size_t n = d.n;
    const std::size_t size = n - j;
    RMatrix L(size, size);
    L(0, 0) = 1;
    for (std::size_t k = n - 1; k > j; --k) {
        const std::size_t row = n - k;  // 0-based row for level k
        for (std::size_t a = 0; a < n - k; ++a) L(row, 1 + a) = v[k][a];
    }
    return L;
}

QProfile q_from_pattern_direct(const ArcDiagram& d) {
    check_diagram(d);
    const std::size_t n = d.n;
    PatternSolveState st;
    st.n = n;
    st.v.resize(n);
    st.q.resize(n);
    if (n == 1) return QProfile(1);
    st.v[n - 1] = {Rational(1)};
    for (std::size_t j = n - 1; j-- > 1;) {
        RMatrix A = pattern_L(d, st.v, j) * pascal_S(n - j);
        RVector e(n - j);
        e[n - d.k(j)] = 1;
        RVector u = solve_linear(A, e);
        st.v[j] = Rational(1) / u.back() * u;
    }
    RMatrix L0 = pattern_L(d, st.v, 0);
    RVector b(n);
    for (std::size_t a = 0; a < n; ++a) b[a] = binomial(static_cast<long>(n), static_cast<long>(a + 1)) / static_cast<long>(n);
    RVector x = solve_linear(L0.transpose(), b);
    for (std::size_t j = 1; j < n; ++j) st.q[j] = x[n - j];
    return profile_from_state(st);
}

HMatrix h_from_q(const QProfile& q) {
    const std::size_t n = q.horizon();
    HMatrix h(n);
    if (n == 1) return h;
    for (std::size_t j = 1; j < n; ++j)
        if (sgn(q.get(n - j, j)) == 0) throw ZeroAntiDiagonalError("Q(" + std::to_string(n - j) + "," + std::to_string(j) + ") is zero");
    auto qf = [&](std::size_t m, std::size_t j) { return q.get(m, j); };
    h.at(n - 1, n - 1) = q.get(1, n - 1);
    for (std::size_t k = n - 1; k-- > 1;) {
        h.at(k, k) = q.get(n - k, k) / q.get(n - k - 1, k + 1);
        solve_h_column(h, k, qf);
    }
    return h;
}

ArcDiagram diagram_from_certificates(const CertificateSet& lam) {
    const std::size_t n = lam.horizon();
    ArcDiagram d;
    d.n = n;
    for (std::size_t j = 1; j < n; ++j) {
        std::size_t found = 0, count = 0;
        for (std::size_t k = j + 1; k <= n; ++k)
            if (sgn(lam(k, j)) > 0) {
                found = k;
                ++count;
            }
        if (count != 1)
            throw NotAVertexError("certificate column " + std::to_string(j) + " has " + std::to_string(count) + " positive entries");
        d.parent.push_back(found);
        d.weights.push_back(lam(found, j));
    }
    return d;
}

ArcDiagram diagram_from_vertex(const HMatrix& h) {
    QProfile q = q_functions(h);
    if (!check_invariance(q)) throw NotAVertexError("matrix violates H-invariance");
    CertificateSet lam = certificates(q);
    if (!lam.all_nonnegative()) throw NotAVertexError("matrix has negative certificates");
    return diagram_from_certificates(lam);
}

HMatrix vertex_from_diagram(const ArcDiagram& d) {
    HMatrix h = h_from_q(q_from_pattern(d));
    QProfile q = q_functions(h);
    if (!check_invariance(q)) throw std::logic_error("constructed vertex fails H-invariance for " + to_string(d));
    CertificateSet lam = certificates(q);
    for (std::size_t j = 1; j < d.n; ++j)
        for (std::size_t k = j + 1; k <= d.n; ++k) {
            const int s = sgn(lam(k, j));
            if ((k == d.k(j) && s <= 0) || (k != d.k(j) && s != 0))
                throw std::logic_error("constructed vertex has wrong certificate support for " + to_string(d));
        }
    return h;
}

}  // namespace vk
