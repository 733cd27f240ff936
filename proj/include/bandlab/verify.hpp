// Numeric and symbolic identity batteries.
//
// Sampled checks run one band per sample index; with `parallel` the samples are
// spread over OpenMP threads and the per-sample reports are merged in index
// order, so the outcome does not depend on the thread count.
#pragma once

#include "bandlab/bands.hpp"
#include "bandlab/coxeter.hpp"
#include "bandlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bandlab {

struct VerifyOptions {
    int n = 3;  // SL(n)
    int samples = 100;
    uint64_t seed = 1;
    bool parallel = true;
};

Report verify_gluing(const VerifyOptions& o);
Report verify_theta_psi(const VerifyOptions& o);
Report verify_tsystem(const VerifyOptions& o);
Report verify_fz_minor(const VerifyOptions& o);
Report verify_black_mutation(const VerifyOptions& o);
Report verify_laurent3(const VerifyOptions& o);  // n = 3 only
Report verify_translation(const VerifyOptions& o);
Report verify_seq_m(const VerifyOptions& o);
Report verify_theta_poly(const VerifyOptions& o);

// Cubic minor identity on (k+1) x k matrices.
Report verify_cubic_numeric(int kmax, const VerifyOptions& o);
Report verify_cubic_symbolic(int k);

// Combinatorial sweeps over every ADE type of rank <= max_rank and every Coxeter word.
Report verify_exchange_and_translation(int max_rank, int M, int N);
Report verify_max_rank(int max_rank, int bound);

// Dispatch by CLI name: gluing, theta-psi, tsystem, cubic, fz-minor, translation,
// seq-m, black-mutation, laurent3, theta-poly.
Report verify_kind(const std::string& kind, const VerifyOptions& o);
const std::vector<std::string>& verify_kinds();

}  // namespace bandlab
