#pragma once

#include <Eigen/Dense>

#include "atq/graded.hpp"
#include "atq/geometry.hpp"

namespace atq {

// Coefficient object of a free module: finite-dimensional complex pieces or
// copies of C^inf(R;C).
enum class CoeffObj { FinC, SmoothS };

// Tensor rule: FinC absorbs into anything; SmoothS x SmoothS is undefined
// without a completion and throws DomainError("smooth_tensor_undefined").
CoeffObj tensor(CoeffObj a, CoeffObj b);

struct FreeModule {
    CoeffObj coeff = CoeffObj::FinC;
    Eigen::Index rank = 0;
};

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Map of free modules over a common coefficient object, given by a constant
 * integer matrix (rows = codomain rank, cols = domain rank). Construction
 * rejects coefficient mismatches and shape mismatches.
 */
class FreeModuleMap {
public:
    FreeModuleMap(FreeModule domain, FreeModule codomain, IntMatrix matrix);

    const FreeModule& domain() const noexcept { return domain_; }
    const FreeModule& codomain() const noexcept { return codomain_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

private:
    FreeModule domain_;
    FreeModule codomain_;
    IntMatrix matrix_;
};

// Rank over Q by fraction-free elimination; exact at every step.
Eigen::Index exact_rank(const IntMatrix& m);

struct KernelCokernel {
    Eigen::Index kernel_rank = 0;
    Eigen::Index cokernel_rank = 0;
};

// kernel = domain rank - rank, cokernel = codomain rank - rank. The
// coefficient objects here are torsion free, so ranks over Q suffice.
KernelCokernel kernel_cokernel(const FreeModuleMap& f);

/**
 * Local model of a focus-focus fiber with n pinch points: the fiber is
 * covered by the complement of the pinch points (a union of arcs) and small
 * pieces around each pinch point. nodes >= 1; compact_fiber selects a cyclic
 * arc pattern (n arcs) versus a chain (n+1 arcs); bohr_sommerfeld false
 * collapses every module to zero.
 */
struct FFCovering {
    int nodes = 1;
    bool compact_fiber = true;
    bool bohr_sommerfeld = true;
};

/**
 * Restriction map H1(arcs) -> H1(overlap pieces) of the covering. Codomain
 * rank 2n: rows ordered (pinch 0, minus side), (pinch 0, plus side),
 * (pinch 1, minus), ...; the minus side of pinch j meets arc j-1 (cyclically
 * for compact fibers), the plus side meets arc j. Every entry is 0 or 1.
 * With bohr_sommerfeld false both modules are zero.
 */
FreeModuleMap build_ff_covering_map(const FFCovering& c);

/**
 * Quantization of the local model, always derived by running the solver on
 * the covering matrix: degree 1 gets the kernel (zero, the map is
 * injective), degree 2 the cokernel as smooth copies (n for compact fibers,
 * n-1 for non-compact ones), degree 0 vanishes.
 */
GradedQuant local_ff_quantization(const FFCovering& c);

// Graded tensor product under the coefficient tensor rule. Degrees add.
GradedQuant kunneth(const GradedQuant& a, const GradedQuant& b);

// Product model of a cotangent-interval factor (one smooth copy, degree 0)
// with a cylinder factor carrying n circle fibers (rank n, degree 1);
// computed via kunneth, never hard coded. n >= 0.
GradedQuant prop_kunn_model(int n);

}  // namespace atq
