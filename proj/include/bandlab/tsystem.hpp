// The invariant ring K[theta^{(s)}_i]: T-system expansion of theta^{(s)}_{i,k},
// the Theta_N mutation ladder and the Kirillov-Reshetikhin relabeling.
#pragma once

#include "bandlab/coxeter.hpp"
#include "bandlab/poly.hpp"
#include "bandlab/quiverzoo.hpp"
#include "bandlab/report.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace bandlab {

// Variable (s,i) stands for theta^{(s)}_i = theta^{(s)}_{i,1}.
inline Var theta_var(int i, int s) { return {s, i}; }

class ThetaRing {
public:
    explicit ThetaRing(const CoxeterElement& c) : c_(c) {}
    const CoxeterElement& coxeter() const { return c_; }

    // theta^{(s)}_{i,k} for k >= 0; i outside 1..n gives 1.
    SparsePoly theta(int i, int k, int s) const;

private:
    const SparsePoly& at_zero(int i, int k) const;

    CoxeterElement c_;
    mutable std::shared_mutex mu_;
    mutable std::map<std::pair<int, int>, SparsePoly> memo_;  // (i,k) at s = 0
};

SparsePoly theta_poly(const CoxeterElement& c, int i, int k, int s);

// "θ^{(0)}_1θ^{(1)}_1 − θ^{(0)}_2"
std::string format_theta_poly(const SparsePoly& p);
// "θ^{(0)}_{1,2} = θ^{(0)}_1θ^{(1)}_1 − θ^{(0)}_2"
std::string format_theta_expansion(const ThetaRing& ring, int i, int k, int s);

struct LadderStep {
    int vertex = 0;
    int i = 0, row = 0;
    int n_before = 0, n_after = 0;
    std::string poly;
};

struct LadderResult {
    Report report;
    std::vector<LadderStep> steps;
    // (i, s) of every theta^{(s)}_{i,1} met in row 1
    std::map<int, std::vector<int>> collected;
};

// Runs the ascending and descending ladders on Theta_N symbolically and checks
// every new label against theta_poly, the first-step rule and the row-1 range.
LadderResult ladder_verify(const CoxeterElement& c, int N);

struct KRLabel {
    int i = 0, k = 0, r = 0;
    bool operator==(const KRLabel&) const = default;
};

// theta^{(s)}_{i,k} -> W^{(i)}_{k,q^{2s+1-xi_i}}
KRLabel kr_label(const CoxeterElement& c, int i, int k, int s);
std::string format_kr(const KRLabel& w, bool rank_one);

// The T-system at (i,k,s) rewritten through kr_label.
std::string tsystem_as_KNS(const CoxeterElement& c, int i, int k, int s);

// Every relabeled T-system for i, k <= kmax, |s| <= smax has the KNS index shape.
Report verify_kr_dictionary(const CoxeterElement& c, int kmax, int smax);

}  // namespace bandlab
