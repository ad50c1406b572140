#include "orthoserie/recurrence.hpp"
#include "orthoserie/mrs.hpp"
#include "orthoserie/quadrature.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace orthoserie {

RecurrenceTable::RecurrenceTable(int N, std::vector<double> A, std::vector<double> B_off,
                                 double mu0, Meta meta)
    : N_(N), A_(std::move(A)), Boff_(std::move(B_off)), mu0_(mu0), meta_(std::move(meta)) {
    if (static_cast<int>(A_.size()) != N_ || static_cast<int>(Boff_.size()) != N_)
        throw std::invalid_argument("RecurrenceTable: A and B must each hold N values");
}

double RecurrenceTable::A(int k) const {
    if (k < 0 || k >= N_) throw std::out_of_range("RecurrenceTable::A index");
    return A_[k];
}

double RecurrenceTable::B(int k) const {
    if (k == 0) return 0.0;
    if (k < 1 || k > N_) throw std::out_of_range("RecurrenceTable::B index");
    return Boff_[k - 1];
}

namespace {

struct DiscreteMeasure {
    std::vector<double> x;
    std::vector<double> w;  // panel weight times w^2(x)
};

DiscreteMeasure build_grid(const WeightSpec& spec, int N, const DiscretizationConfig& disc,
                           int mult) {
    const double aN = mrs_a(spec, N);
    const double R = mrs_a(spec, disc.c * N);
    const int panels = mult * std::max(16, (2 * N) / 3);
    std::vector<double> edges = arcsine_edges(aN, panels);
    const int tails = mult * disc.tail_panels;
    for (int j = 1; j <= tails; ++j) edges.push_back(aN + (R - aN) * j / tails);

    DiscreteMeasure m;
    const GLRule& gl = gauss_legendre(disc.gl_order);
    const size_t pts = (edges.size() - 1) * gl.x.size();
    m.x.reserve(2 * pts);
    m.w.reserve(2 * pts);
    // negative half first so the node list is ascending
    for (size_t i = edges.size() - 1; i >= 1; --i) {
        const double mid = 0.5 * (edges[i - 1] + edges[i]);
        const double half = 0.5 * (edges[i] - edges[i - 1]);
        for (size_t j = gl.x.size(); j >= 1; --j) {
            const double xx = -(mid + half * gl.x[j - 1]);
            m.x.push_back(xx);
            m.w.push_back(half * gl.w[j - 1] * spec.w2(xx));
        }
    }
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        const double half = 0.5 * (edges[i + 1] - edges[i]);
        for (size_t j = 0; j < gl.x.size(); ++j) {
            const double xx = mid + half * gl.x[j];
            m.x.push_back(xx);
            m.w.push_back(half * gl.w[j] * spec.w2(xx));
        }
    }
    return m;
}

struct StieltjesResult {
    std::vector<double> A, Boff;
    double mu0 = 0;
};

// Orthogonalizes against the discrete measure, producing A[0..N-1], B[1..N].
StieltjesResult stieltjes(const DiscreteMeasure& m, int N) {
    const size_t M = m.x.size();
    StieltjesResult r;
    r.A.assign(N, 0.0);
    r.Boff.assign(N, 0.0);
    for (size_t i = 0; i < M; ++i) r.mu0 += m.w[i];

    std::vector<double> q_prev(M, 0.0), q_cur(M), scratch(M);
    const double inv_sqrt_mu0 = 1.0 / std::sqrt(r.mu0);
    for (size_t i = 0; i < M; ++i) q_cur[i] = inv_sqrt_mu0;

    double b_prev = 0.0;
    for (int k = 0; k < N; ++k) {
        double a = 0;
        for (size_t i = 0; i < M; ++i) a += m.w[i] * m.x[i] * q_cur[i] * q_cur[i];
        r.A[k] = a;
        double nb2 = 0;
        for (size_t i = 0; i < M; ++i) {
            scratch[i] = (m.x[i] - a) * q_cur[i] - b_prev * q_prev[i];
            nb2 += m.w[i] * scratch[i] * scratch[i];
        }
        if (!(nb2 > 0))
            throw std::runtime_error("recurrence_table: positivity lost at degree " +
                                     std::to_string(k + 1) + " (discretization precision exhausted)");
        const double b = std::sqrt(nb2);
        r.Boff[k] = b;
        const double inv_b = 1.0 / b;
        for (size_t i = 0; i < M; ++i) {
            q_prev[i] = q_cur[i];
            q_cur[i] = scratch[i] * inv_b;
        }
        b_prev = b;
    }
    return r;
}

}  // namespace

RecurrenceTable recurrence_table(const WeightSpec& spec, int N,
                                 const DiscretizationConfig& disc) {
    if (N < 1) throw std::invalid_argument("recurrence_table: N >= 1 required");
    if (disc.c < 2.0) throw std::invalid_argument("recurrence_table: truncation multiple c >= 2 required");

    const DiscreteMeasure grid = build_grid(spec, N, disc, disc.panel_mult);
    const StieltjesResult base = stieltjes(grid, N);
    const DiscreteMeasure grid2 = build_grid(spec, N, disc, 2 * disc.panel_mult);
    const StieltjesResult fine = stieltjes(grid2, N);

    double cert = std::abs(fine.mu0 - base.mu0) / base.mu0;
    for (int k = 0; k < N; ++k) {
        cert = std::max(cert, std::abs(fine.Boff[k] - base.Boff[k]) / base.Boff[k]);
        // even measure: A is pure noise, compare on the off-diagonal scale
        cert = std::max(cert, std::abs(fine.A[k] - base.A[k]) / base.Boff[k]);
    }
    if (cert >= 1e-12)
        throw std::runtime_error("recurrence_table: doubling certificate failed (rel change " +
                                 std::to_string(cert) + ")");

    RecurrenceTable::Meta meta;
    meta.weight = spec.descriptor();
    meta.disc = disc;
    meta.doubling_rel_change = cert;
    meta.points = static_cast<int>(grid.x.size());
    return RecurrenceTable(N, base.A, base.Boff, base.mu0, std::move(meta));
}

std::string table_to_json(const RecurrenceTable& table) {
    nlohmann::json j;
    j["weight"] = table.meta().weight;
    j["N"] = table.N();
    j["mu0"] = table.mu0();
    j["A"] = table.A_all();
    j["B"] = table.B_all();
    j["disc"] = {{"c", table.meta().disc.c},
                 {"panel_mult", table.meta().disc.panel_mult},
                 {"gl_order", table.meta().disc.gl_order},
                 {"tail_panels", table.meta().disc.tail_panels},
                 {"doubling_rel_change", table.meta().doubling_rel_change},
                 {"points", table.meta().points}};
    return j.dump(2);
}

RecurrenceTable table_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RecurrenceTable::Meta meta;
    meta.weight = j.at("weight").get<std::string>();
    const auto& d = j.at("disc");
    meta.disc.c = d.at("c").get<double>();
    meta.disc.panel_mult = d.at("panel_mult").get<int>();
    meta.disc.gl_order = d.at("gl_order").get<int>();
    meta.disc.tail_panels = d.at("tail_panels").get<int>();
    meta.doubling_rel_change = d.at("doubling_rel_change").get<double>();
    meta.points = d.at("points").get<int>();
    return RecurrenceTable(j.at("N").get<int>(), j.at("A").get<std::vector<double>>(),
                           j.at("B").get<std::vector<double>>(), j.at("mu0").get<double>(),
                           std::move(meta));
}

}  // namespace orthoserie
