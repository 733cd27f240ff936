// Builders for the seeds of the band cluster structures and their mutation
// schedules.
//
// Window seeds Gamma~_{M,N} live on vertices (i,r) with r = xi~_i mod 2 and
// r_i = (r - xi~_i)/2. Regions of a column, top to bottom: upper black
// (r_i >= 1), alternating red/green (0 >= r_i >= -2m_i+1), lower black.
#pragma once

#include "bandlab/coxeter.hpp"
#include "bandlab/quiver.hpp"
#include "bandlab/report.hpp"

#include <string>
#include <vector>

namespace bandlab {

enum class Region { upper, red, green, lower };

struct VertexInfo {
    Region region = Region::upper;
    int ri = 0;
    int s = 0;  // superscript s_(i,r)
    MinorLabel label;
};

// Classification of (i,r) in Gamma~ for c (uses xi of c~ and m of c).
VertexInfo classify_gamma_tilde(const CoxeterElement& c, const CoxeterElement& ct, int i, int r);

// Left/right degree of a minor label.
BiDegree minor_degree(const CoxeterElement& c, const CoxeterElement& ct, const MinorLabel& m);

// Infinite quiver Gamma restricted to rlo <= r <= rhi.
Quiver build_gamma(const CoxeterElement& ct, int rlo, int rhi);

// Gamma~_{M,N} with labels, degrees, colors and frozen extremes (M <= 0 <= N).
Seed build_gamma_tilde_window(const CoxeterElement& c, int M, int N);

// U-invariant seed Xi_{M,N}; Gamma^(0) is Xi_{0,1}.
Seed build_xi_window(const CoxeterElement& c, int M, int N);
Seed build_gamma0(const CoxeterElement& c);

// G-invariant seed Theta_N on Lambda^+ (or Lambda^-), n(base,1) = 0.
struct ThetaSeed {
    Seed seed;
    std::vector<std::vector<int>> n;  // n[i-1][s-1]
    std::vector<std::vector<bool>> source;  // vertical source flags (W0)
};
ThetaSeed build_theta_seed(const CoxeterElement& c, int N, int base = 1, bool plus = true);

// Mutable red (or green) vertices of a window seed.
std::vector<int> schedule_tau(const Seed& s, Color which);

// Expected labels of a window after tau_red (dir=+1) or tau_green (dir=-1):
// a freshly built shifted window with every superscript moved by dir.
struct TauPrediction {
    Seed shifted;               // window (M-dir, N-dir), labels s+dir
    std::vector<int> map;       // window vertex -> shifted vertex
};
TauPrediction predict_tau(const CoxeterElement& c, int M, int N, int dir);

// Exchange relation shape at every mutable red vertex.
Report verify_red_exchange_shape(const CoxeterElement& c, const Seed& s);

// tau_red / tau_green self-isomorphism on Gamma~_{M,N}.
Report verify_tau_translation(const CoxeterElement& c, int M, int N, Color which);

struct MStep {
    int vertex = 0;
    int column = 0;
    int round = 0;
    int j = 0;  // r_i - 1 of the mutated vertex
    bool first_in_block = false;
};
std::vector<MStep> schedule_M(const CoxeterElement& c, const Seed& gamma0);

// Closed-form bi-degree of the vertex of column i with initial label
// Delta^(0)_{c^k varpi_i, varpi_i} after the rounds 1..s of M.
BiDegree closed_form_degree_M(const CoxeterElement& c, const CoxeterElement& ct, int i, int k, int s);

// Runs M combinatorially, checking degrees after every step and the incoming arrows at each step.
Report verify_sequence_M_degrees(const CoxeterElement& c);

// W0/W1 separation of Lambda_N.
Report verify_theta_structure(const ThetaSeed& t);

std::string minor_to_string(const MinorLabel& m);
std::string theta_to_string(const ThetaLabel& t);

}  // namespace bandlab
