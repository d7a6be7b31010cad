#include "vertexkit/algorithms.hpp"

#include <numeric>
#include <sstream>

#include "vertexkit/diagrams.hpp"
#include "vertexkit/gluing.hpp"
#include "vertexkit/vertex.hpp"

namespace vk {

HMatrix ohm_hmatrix(std::size_t size) {
    HMatrix h(size + 1);
    for (std::size_t k = 1; k <= size; ++k) {
        const long kk = static_cast<long>(k);
        for (std::size_t j = 1; j < k; ++j) h.at(k, j) = frac(-static_cast<long>(j), kk * (kk + 1));
        h.at(k, k) = frac(kk, kk + 1);
    }
    return h;
}

HMatrix dual_ohm_hmatrix(std::size_t size) {
    const long N = static_cast<long>(size + 1);
    HMatrix h(size + 1);
    for (std::size_t k = 1; k <= size; ++k) {
        const long kk = static_cast<long>(k);
        for (std::size_t j = 1; j < k; ++j) {
            const long jj = static_cast<long>(j);
            h.at(k, j) = frac(-(N - kk), (N - jj) * (N - jj + 1));
        }
        h.at(k, k) = frac(N - kk, N - kk + 1);
    }
    return h;
}

Schedule Schedule::period(std::size_t p) {
    if (p == 0) throw InvalidScheduleError("period must be positive");
    return Schedule{{p}, true};
}

Schedule Schedule::blocks(std::vector<std::size_t> ps) {
    if (ps.empty()) throw InvalidScheduleError("schedule needs at least one block");
    for (std::size_t p : ps)
        if (p == 0) throw InvalidScheduleError("block lengths must be positive");
    return Schedule{std::move(ps), false};
}

std::vector<std::size_t> Schedule::expand(std::size_t steps) const {
    std::vector<std::size_t> out;
    std::size_t covered = 0, b = 0;
    while (covered < steps) {
        std::size_t p;
        if (periodic) {
            p = periods.at(0);
        } else {
            if (b >= periods.size()) throw InvalidScheduleError("schedule covers only " + std::to_string(covered) + " of " + std::to_string(steps) + " steps");
            p = periods[b];
        }
        out.push_back(std::min(p, steps - covered));
        covered += p;
        ++b;
    }
    return out;
}

std::vector<std::size_t> Schedule::partial_sums(std::size_t steps) const {
    std::vector<std::size_t> out;
    std::size_t s = 0, b = 0;
    while (true) {
        const std::size_t p = periodic ? periods.at(0) : (b < periods.size() ? periods[b] : 0);
        if (p == 0 || s + p > steps) break;
        s += p;
        out.push_back(s);
        ++b;
    }
    return out;
}

HMatrix rdo_hmatrix(const Schedule& schedule, std::size_t size) {
    require_exact_n(size + 1, "rdo_hmatrix");
    const std::vector<std::size_t> blocks = schedule.expand(size);
    HMatrix h(1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t p = schedule.periodic ? schedule.periods[0] : schedule.periods[b];
        h = glue_h(h, dual_ohm_hmatrix(p - 1), false);
    }
    return h.size() == size ? h : h.leading(size);
}

std::size_t nu2(std::size_t j) {
    if (j == 0) throw std::domain_error("nu2(0) undefined");
    std::size_t v = 0;
    while ((j & 1) == 0) {
        j >>= 1;
        ++v;
    }
    return v;
}

std::size_t popcount(std::size_t j) {
    std::size_t c = 0;
    for (; j; j &= j - 1) ++c;
    return c;
}

RVector fsdm_a_vector(std::size_t n_power) {
    if (n_power == 0) return {};
    RVector a{frac(1, 2)};
    for (std::size_t n = 2; n <= n_power; ++n) {
        RVector next;
        for (const auto& x : a) next.push_back(x / 2);
        next.push_back(frac(static_cast<long>((std::size_t{1} << (n - 1)) + 1), 4));
        next.insert(next.end(), a.begin(), a.end());
        a = std::move(next);
    }
    return a;
}

RVector fsdm_b_vector(std::size_t n_power) {
    RVector a = fsdm_a_vector(n_power);
    return RVector(a.rbegin(), a.rend());
}

HMatrix fsdm_hmatrix(std::size_t n_power) {
    require_exact_n(std::size_t{1} << n_power, "fsdm_hmatrix");
    if (n_power == 0) return HMatrix(1);
    HMatrix h = HMatrix::from_rows({{frac(1, 2)}});
    for (std::size_t n = 2; n <= n_power; ++n) {
        const std::size_t s = h.size();  // 2^{n-1} - 1
        const RVector a = fsdm_a_vector(n - 1), b = fsdm_b_vector(n - 1);
        HMatrix g((2 * s + 1) + 1);
        for (std::size_t k = 1; k <= s; ++k)
            for (std::size_t j = 1; j <= k; ++j) {
                g.at(k, j) = h(k, j);
                g.at(s + 1 + k, s + 1 + j) = h(k, j);
            }
        for (std::size_t j = 1; j <= s; ++j) g.at(s + 1, j) = -a[j - 1] / 2;
        g.at(s + 1, s + 1) = Rational(static_cast<long>(std::size_t{1} << (n - 1))) / 2;
        for (std::size_t k = 1; k <= s; ++k) g.at(s + 1 + k, s + 1) = -b[k - 1] / 2;
        h = std::move(g);
    }
    return h;
}

HMatrix fsdm_hmatrix_prefix(std::size_t size) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) - 1 < size) ++n;
    HMatrix h = fsdm_hmatrix(n);
    return h.size() == size ? h : h.leading(size);
}

namespace {

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty() || v == 0) throw InvalidScheduleError("bad period '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidScheduleError("empty schedule");
    return out;
}

}  // namespace

AlgorithmSpec parse_algorithm(const std::string& s) {
    AlgorithmSpec a;
    a.label = s;
    if (s == "ohm") {
        a.kind = AlgorithmSpec::Kind::Ohm;
    } else if (s == "dual-ohm") {
        a.kind = AlgorithmSpec::Kind::DualOhm;
    } else if (s == "fsdm") {
        a.kind = AlgorithmSpec::Kind::Fsdm;
    } else if (s.rfind("rdo:", 0) == 0) {
        a.kind = AlgorithmSpec::Kind::Rdo;
        auto ps = parse_list(s.substr(4));
        a.schedule = ps.size() == 1 ? Schedule::period(ps[0]) : Schedule::blocks(ps);
    } else if (s.rfind("hmatrix:", 0) == 0 && s.size() > 8) {
        a.kind = AlgorithmSpec::Kind::Matrix;
        a.matrix_path = s.substr(8);
    } else {
        throw std::invalid_argument("unknown algorithm spec '" + s + "'");
    }
    return a;
}

std::set<std::size_t> guaranteed_trace_indices(const AlgorithmSpec& a, std::size_t n) {
    std::set<std::size_t> out;
    const std::size_t last = n ? n - 1 : 0;
    switch (a.kind) {
        case AlgorithmSpec::Kind::Ohm:
            for (std::size_t k = 1; k <= last; ++k) out.insert(k);
            break;
        case AlgorithmSpec::Kind::DualOhm:
            if (last >= 1) out.insert(last);
            break;
        case AlgorithmSpec::Kind::Rdo:
            for (std::size_t s : a.schedule.partial_sums(last)) out.insert(s);
            break;
        case AlgorithmSpec::Kind::Fsdm:
            for (std::size_t t = 1; (t << 1) - 1 <= last; t <<= 1) out.insert((t << 1) - 1);
            break;
        case AlgorithmSpec::Kind::Matrix: {
            if (!a.matrix) throw std::logic_error("matrix algorithm without loaded matrix");
            if (a.matrix->horizon() != n) throw DimensionError("matrix horizon differs from the run horizon");
            try {
                ArcDiagram d = diagram_from_vertex(*a.matrix);
                if (is_noncrossing(d))
                    for (std::size_t j : guaranteed_indices(d))
                        if (j >= 2) out.insert(j - 1);
            } catch (const NotAVertexError&) {
            }
            break;
        }
    }
    return out;
}

double initial_distance(const OperatorSpec& op, const Vec<double>& y0, double fallback) {
    if (!op.fixed_point) return fallback;
    double s = 0.0;
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double d = y0[i] - (*op.fixed_point)[i];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

struct TraceBuilder {
    const OperatorSpec& op;
    IterationTrace trace;
    std::set<std::size_t> guaranteed;
    RecordMode mode;
    double r2;

    TraceBuilder(const OperatorSpec& o, std::string label, std::size_t n, std::set<std::size_t> g, RecordMode m, double r)
        : op(o), guaranteed(std::move(g)), mode(m), r2(r * r) {
        trace.label = std::move(label);
        trace.n = n;
    }

    void operator()(std::size_t k, const Vec<double>& y) {
        const bool g = guaranteed.count(k) > 0;
        for (double v : y)
            if (!std::isfinite(v)) throw NonFiniteError("non-finite iterate at k = " + std::to_string(k));
        if (mode == RecordMode::Sparse && !g) return;
        Vec<double> ty = op.apply(y);
        double s = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double d = y[i] - ty[i];
            s += d * d;
        }
        if (!std::isfinite(s)) throw NonFiniteError("non-finite residual at k = " + std::to_string(k));
        const double kp1 = static_cast<double>(k + 1);
        trace.records.push_back({k, s, g, 4.0 * r2 / (kp1 * kp1)});
    }
};

void check_dims(const OperatorSpec& op, const Vec<double>& y0) {
    if (op.dimension != y0.size()) throw DimensionError("initial point dimension differs from operator dimension");
}

template <class F>
IterationTrace drive(const AlgorithmSpec& a, const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode, F&& engine) {
    check_dims(op, y0);
    if (n < 1) throw std::invalid_argument("horizon must be at least 1");
    TraceBuilder tb(op, a.label, n, guaranteed_trace_indices(a, n), mode, initial_distance(op, y0, std::nan("")));
    Sink<double> sink = [&tb](std::size_t k, const Vec<double>& y) { tb(k, y); };
    tb.trace.ledger_depth_max = engine(sink);
    return std::move(tb.trace);
}

}  // namespace

IterationTrace run_algorithm(const AlgorithmSpec& a, const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode) {
    switch (a.kind) {
        case AlgorithmSpec::Kind::Ohm:
            return drive(a, op, y0, n, mode, [&](const Sink<double>& s) { iterate_ohm<double>(op.apply, y0, n, s); return std::size_t{0}; });
        case AlgorithmSpec::Kind::DualOhm:
            return drive(a, op, y0, n, mode, [&](const Sink<double>& s) { iterate_dual_ohm<double>(op.apply, y0, n, s); return std::size_t{0}; });
        case AlgorithmSpec::Kind::Rdo:
            return drive(a, op, y0, n, mode, [&](const Sink<double>& s) { iterate_rdo<double>(op.apply, y0, a.schedule, n, s); return std::size_t{0}; });
        case AlgorithmSpec::Kind::Fsdm:
            return drive(a, op, y0, n, mode, [&](const Sink<double>& s) { return iterate_fsdm<double>(op.apply, y0, n, s); });
        case AlgorithmSpec::Kind::Matrix:
            if (!a.matrix) throw std::logic_error("matrix algorithm without loaded matrix");
            return drive(a, op, y0, n, mode, [&](const Sink<double>& s) { iterate_hmatrix<double>(*a.matrix, op.apply, y0, s); return std::size_t{0}; });
    }
    throw std::logic_error("unreachable");
}

IterationTrace run_hmatrix(const HMatrix& h, const OperatorSpec& op, const Vec<double>& y0, RecordMode mode) {
    AlgorithmSpec a;
    a.kind = AlgorithmSpec::Kind::Matrix;
    a.matrix = h;
    a.label = "hmatrix";
    return run_algorithm(a, op, y0, h.horizon(), mode);
}

IterationTrace run_ohm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode) {
    return run_algorithm(parse_algorithm("ohm"), op, y0, n, mode);
}

IterationTrace run_dual_ohm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode) {
    return run_algorithm(parse_algorithm("dual-ohm"), op, y0, n, mode);
}

IterationTrace run_rdo(const OperatorSpec& op, const Vec<double>& y0, const Schedule& s, std::size_t n, RecordMode mode) {
    AlgorithmSpec a;
    a.kind = AlgorithmSpec::Kind::Rdo;
    a.schedule = s;
    a.label = "rdo";
    s.expand(n ? n - 1 : 0);
    return run_algorithm(a, op, y0, n, mode);
}

IterationTrace run_fsdm(const OperatorSpec& op, const Vec<double>& y0, std::size_t n, RecordMode mode) {
    return run_algorithm(parse_algorithm("fsdm"), op, y0, n, mode);
}

}  // namespace vk
