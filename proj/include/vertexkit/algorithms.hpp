#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vertexkit/core.hpp"
#include "vertexkit/hmatrix.hpp"

namespace vk {

template <class S>
using Vec = std::vector<S>;
template <class S>
using Operator = std::function<Vec<S>(const Vec<S>&)>;
/// Receives every iterate y_k in order.
template <class S>
using Sink = std::function<void(std::size_t, const Vec<S>&)>;

struct OperatorSpec {
    std::string name;
    std::size_t dimension = 0;
    Operator<double> apply;
    std::optional<Vec<double>> fixed_point;
    double gamma = 1.0;
    double delta = 0.0;
};

// ---- exact builders (argument is the matrix size N-1) ----

HMatrix ohm_hmatrix(std::size_t size);
HMatrix dual_ohm_hmatrix(std::size_t size);

struct Schedule {
    std::vector<std::size_t> periods;
    bool periodic = false;

    static Schedule period(std::size_t p);
    static Schedule blocks(std::vector<std::size_t> ps);
    /// Block lengths covering the given number of steps; the last may be cut.
    std::vector<std::size_t> expand(std::size_t steps) const;
    /// Partial sums S_k <= steps.
    std::vector<std::size_t> partial_sums(std::size_t steps) const;
};

class InvalidScheduleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

HMatrix rdo_hmatrix(const Schedule& schedule, std::size_t size);
HMatrix fsdm_hmatrix(std::size_t n_power);
/// Leading block of the smallest dyadic FSDM matrix covering the size.
HMatrix fsdm_hmatrix_prefix(std::size_t size);
/// a^(n); b^(n) is its reverse.
RVector fsdm_a_vector(std::size_t n_power);
RVector fsdm_b_vector(std::size_t n_power);

std::size_t nu2(std::size_t j);
std::size_t popcount(std::size_t j);

// ---- algorithm specs ----

struct AlgorithmSpec {
    enum class Kind { Ohm, DualOhm, Rdo, Fsdm, Matrix };
    Kind kind = Kind::Ohm;
    Schedule schedule;
    std::string matrix_path;
    std::optional<HMatrix> matrix;
    std::string label;
};

/// Parses ohm, dual-ohm, rdo:p, rdo:p1,p2,..., fsdm, hmatrix:<file>.
/// The hmatrix file is not loaded here.
AlgorithmSpec parse_algorithm(const std::string& s);

/// y-indices k >= 1 whose iterate carries the 4R^2/(k+1)^2 bound.
std::set<std::size_t> guaranteed_trace_indices(const AlgorithmSpec& a, std::size_t n);

// ---- traces ----

struct TraceRecord {
    std::size_t iter = 0;
    double residual_sq = 0.0;
    bool guaranteed = false;
    double bound = 0.0;
};

struct IterationTrace {
    std::string label;
    std::size_t n = 0;
    std::vector<TraceRecord> records;
    std::size_t ledger_depth_max = 0;
};

enum class RecordMode { All, Sparse };

class NonFiniteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IterationTrace run_hmatrix(const HMatrix& h, const OperatorSpec& op, const Vec<double>& y0, RecordMode mode = RecordMode::All);
IterationTrace run_ohm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode = RecordMode::All);
IterationTrace run_dual_ohm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode = RecordMode::All);
IterationTrace run_rdo(const OperatorSpec& op, const Vec<double>& y0, const Schedule& s, std::size_t n, RecordMode mode = RecordMode::All);
IterationTrace run_fsdm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode = RecordMode::All);
IterationTrace run_algorithm(const AlgorithmSpec& a, const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode = RecordMode::All);

/// ||y0 - y*|| when the fixed point is known, else the supplied fallback.
double initial_distance(const OperatorSpec& op, const Vec<double>& y0, double fallback);

// ---- generic engines ----

namespace detail {

template <class S>
S ratio(long a, long b) {
    if constexpr (std::is_same_v<S, double>)
        return static_cast<double>(a) / static_cast<double>(b);
    else
        return frac(a, b);
}

inline double pow2(long e) { return std::ldexp(1.0, static_cast<int>(e)); }

template <class S>
S pow2_as(long e) {
    if constexpr (std::is_same_v<S, double>) {
        return pow2(e);
    } else {
        Rational r = 1;
        if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
        else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
        return r;
    }
}

template <class S>
S convert(const Rational& r) {
    if constexpr (std::is_same_v<S, double>)
        return r.get_d();
    else
        return r;
}

// y += c * x
template <class S>
void axpy(Vec<S>& y, const S& c, const Vec<S>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

template <class S>
Vec<S> diff(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

}  // namespace detail

/// y_{k+1} = y_k - sum_{j<=k} h_{k+1,j+1} (y_j - T y_j).
template <class S>
void iterate_hmatrix(const HMatrix& h, const Operator<S>& T, const Vec<S>& y0, const Sink<S>& sink) {
    const std::size_t s = h.size();
    std::vector<std::vector<S>> hs(s);
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j <= k; ++j) hs[k].push_back(detail::convert<S>(h.rows()[k][j]));
    std::vector<Vec<S>> r;
    r.reserve(s);
    Vec<S> y = y0;
    sink(0, y);
    for (std::size_t k = 0; k < s; ++k) {
        r.push_back(detail::diff(y, T(y)));
        for (std::size_t j = 0; j <= k; ++j) detail::axpy(y, S(-hs[k][j]), r[j]);
        sink(k + 1, y);
    }
}

/// y_{k+1} = y0/(k+2) + (k+1)/(k+2) T y_k.
template <class S>
void iterate_ohm(const Operator<S>& T, const Vec<S>& y0, std::size_t n, const Sink<S>& sink) {
    Vec<S> y = y0;
    sink(0, y);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const long kk = static_cast<long>(k);
        Vec<S> ty = T(y);
        const S a = detail::ratio<S>(1, kk + 2), b = detail::ratio<S>(kk + 1, kk + 2);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = a * y0[i] + b * ty[i];
        sink(k + 1, y);
    }
}

/// y_{k+1} = y_k + (N-k-1)/(N-k) (T y_k - T y_{k-1}), T y_{-1} = y0.
template <class S>
void iterate_dual_ohm(const Operator<S>& T, const Vec<S>& y0, std::size_t n, const Sink<S>& sink) {
    Vec<S> y = y0, prev = y0;
    sink(0, y);
    const long N = static_cast<long>(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const long kk = static_cast<long>(k);
        Vec<S> ty = T(y);
        const S c = detail::ratio<S>(N - kk - 1, N - kk);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * (ty[i] - prev[i]);
        prev = std::move(ty);
        sink(k + 1, y);
    }
}

template <class S>
void iterate_rdo(const Operator<S>& T, const Vec<S>& y0, const Schedule& sched, std::size_t n, const Sink<S>& sink) {
    const std::size_t steps = n ? n - 1 : 0;
    const std::vector<std::size_t> blocks = sched.expand(steps);
    Vec<S> y = y0;
    sink(0, y);
    std::size_t done = 0;
    long Sk = 0;
    for (std::size_t b = 0; b < blocks.size() && done < steps; ++b) {
        const long p = static_cast<long>(sched.periodic ? sched.periods[0] : sched.periods[b]);
        const long Sk1 = Sk + p;
        Vec<S> anchor_res;  // y_{S_k} - T y_{S_k}
        Vec<S> prev_t;      // T y_{S_k + l - 1}
        for (long l = 0; l < p && done < steps; ++l) {
            Vec<S> ty = T(y);
            if (l == 0) {
                anchor_res = detail::diff(y, ty);
                const S a = detail::ratio<S>(p * (Sk + 1), Sk1 + 1), c = detail::ratio<S>(p, Sk1 + 1);
                Vec<S> next = y;
                for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] - a * anchor_res[i] + c * (y0[i] - y[i]);
                y = std::move(next);
            } else if (l == 1) {
                const S a = detail::ratio<S>(p - 1, p), c = detail::ratio<S>(Sk + 1, Sk1 + 1);
                for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * (ty[i] - y[i] + c * anchor_res[i]);
            } else {
                const S a = detail::ratio<S>(p - l, p - l + 1);
                for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * (ty[i] - prev_t[i]);
            }
            prev_t = std::move(ty);
            ++done;
            sink(done, y);
        }
        Sk = Sk1;
    }
}

/// Runs FSDM keeping only the dyadic checkpoints; returns the deepest checkpoint stack seen.
template <class S>
std::size_t iterate_fsdm(const Operator<S>& T, const Vec<S>& y0, std::size_t n, const Sink<S>& sink) {
    struct Checkpoint {
        std::size_t t;
        Vec<S> y, g;
    };
    std::vector<Checkpoint> stack;
    std::size_t depth = 0;
    Vec<S> y = y0;
    sink(0, y);
    const S half = detail::ratio<S>(1, 2);
    for (std::size_t j = 1; j < n; ++j) {
        Vec<S> g = detail::diff(y, T(y));
        for (auto& v : g) v *= half;
        const std::size_t nu = nu2(j);
        const std::size_t m = j - (std::size_t{1} << nu);
        while (!stack.empty() && stack.back().t > m) stack.pop_back();
        const Vec<S>& ym = stack.empty() ? y0 : stack.back().y;
        Vec<S> next = y;
        detail::axpy(next, S(-detail::pow2_as<S>(static_cast<long>(nu))), g);
        for (std::size_t i = 0; i < y.size(); ++i) next[i] += half * (ym[i] - y[i]);
        const std::size_t p = stack.size();
        for (std::size_t r = 1; r <= p; ++r)
            detail::axpy(next, detail::pow2_as<S>(static_cast<long>(nu) - static_cast<long>(r)), stack[p - r].g);
        y = std::move(next);
        stack.push_back({j, y, std::move(g)});
        depth = std::max(depth, stack.size());
        sink(j, y);
    }
    return depth;
}

}  // namespace vk
