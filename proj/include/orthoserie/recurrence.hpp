#pragma once

#include "orthoserie/weights.hpp"

#include <string>
#include <vector>

namespace orthoserie {

struct DiscretizationConfig {
    double c = 4.0;       // truncation multiple: measure cut at |x| <= a_{cN}
    int panel_mult = 1;   // grid refinement multiplier
    int gl_order = 24;    // points per panel
    int tail_panels = 12; // extra panels on [a_N, a_{cN}]
    bool operator==(const DiscretizationConfig&) const = default;
};

// Three-term recurrence of the orthonormal system for w^2 dx:
//   x p_k = B[k+1] p_{k+1} + A[k] p_k + B[k] p_{k-1},   B[n] = gamma_{n-1}/gamma_n.
// A holds indices 0..N-1 and B indices 1..N (B[0] reads as 0).
class RecurrenceTable {
public:
    struct Meta {
        std::string weight;
        DiscretizationConfig disc;
        double doubling_rel_change = 0;  // stability certificate
        int points = 0;                  // discretization size used
    };

    RecurrenceTable() = default;
    RecurrenceTable(int N, std::vector<double> A, std::vector<double> B_off,
                    double mu0, Meta meta);

    int N() const { return N_; }
    double mu0() const { return mu0_; }
    double A(int k) const;             // 0 <= k < N
    double B(int k) const;             // 0 <= k <= N; B(0) = 0
    double gamma_ratio(int n) const { return B(n); }  // gamma_{n-1}/gamma_n
    const std::vector<double>& A_all() const { return A_; }
    const std::vector<double>& B_all() const { return Boff_; }  // B[1..N]
    const Meta& meta() const { return meta_; }

private:
    int N_ = 0;
    std::vector<double> A_;     // size N
    std::vector<double> Boff_;  // size N, Boff_[i] = B[i+1]
    double mu0_ = 0;
    Meta meta_;
};

// Discretized Stieltjes procedure over a composite Gauss-Legendre grid of
// w^2 dx on [-a_{cN}, a_{cN}]; coefficients accepted only after a doubling
// stability check (< 1e-12 relative change, recorded in meta).
RecurrenceTable recurrence_table(const WeightSpec& spec, int N,
                                 const DiscretizationConfig& disc = {});

std::string table_to_json(const RecurrenceTable& table);
RecurrenceTable table_from_json(const std::string& text);

}  // namespace orthoserie
