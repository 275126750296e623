#include "atq/mv.hpp"

#include <string>
#include <utility>

#include "atq/errors.hpp"

namespace atq {

CoeffObj tensor(CoeffObj a, CoeffObj b)
{
    if (a == CoeffObj::SmoothS && b == CoeffObj::SmoothS)
        throw DomainError("smooth_tensor_undefined",
                          "tensoring two smooth-function coefficient spaces "
                          "is undefined here; a completion of the "
                          "coefficient spaces would be needed");
    return (a == CoeffObj::SmoothS || b == CoeffObj::SmoothS)
        ? CoeffObj::SmoothS
        : CoeffObj::FinC;
}

FreeModuleMap::FreeModuleMap(FreeModule domain, FreeModule codomain,
                             IntMatrix matrix)
    : domain_(domain), codomain_(codomain), matrix_(std::move(matrix))
{
    if (domain_.coeff != codomain_.coeff)
        throw DomainError("coeff_mismatch",
                          "domain and codomain carry different coefficient "
                          "objects");
    if (domain_.rank < 0 || codomain_.rank < 0)
        throw DomainError("negative_rank", "module ranks must be >= 0");
    if (matrix_.rows() != codomain_.rank || matrix_.cols() != domain_.rank)
        throw DomainError("matrix_shape_mismatch",
                          "matrix is " + std::to_string(matrix_.rows()) + "x"
                              + std::to_string(matrix_.cols()) + ", expected "
                              + std::to_string(codomain_.rank) + "x"
                              + std::to_string(domain_.rank));
}

Eigen::Index exact_rank(const IntMatrix& m)
{
    // Fraction-free elimination with full pivoting. Every division is by
    // the previous pivot and is exact.
    IntMatrix a = m;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index rank = 0;
    Integer prev = 1;
    while (rank < rows && rank < cols) {
        Eigen::Index pr = -1, pc = -1;
        for (Eigen::Index i = rank; i < rows && pr < 0; ++i)
            for (Eigen::Index j = rank; j < cols; ++j)
                if (a(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        if (pr != rank)
            a.row(pr).swap(a.row(rank));
        if (pc != rank)
            a.col(pc).swap(a.col(rank));
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            for (Eigen::Index j = rank + 1; j < cols; ++j)
                a(i, j) =
                    (a(i, j) * a(rank, rank) - a(i, rank) * a(rank, j)) / prev;
            a(i, rank) = 0;
        }
        prev = a(rank, rank);
        ++rank;
    }
    return rank;
}

KernelCokernel kernel_cokernel(const FreeModuleMap& f)
{
    const Eigen::Index r = exact_rank(f.matrix());
    return {f.domain().rank - r, f.codomain().rank - r};
}

FreeModuleMap build_ff_covering_map(const FFCovering& c)
{
    if (c.nodes < 1)
        throw DomainError("bad_parameter", "need at least one pinch point");
    if (!c.bohr_sommerfeld) {
        return FreeModuleMap({CoeffObj::SmoothS, 0}, {CoeffObj::SmoothS, 0},
                             IntMatrix(0, 0));
    }
    const Eigen::Index n = c.nodes;
    const Eigen::Index arcs = c.compact_fiber ? n : n + 1;
    IntMatrix m = IntMatrix::Zero(2 * n, arcs);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index minus_arc = c.compact_fiber ? (j + n - 1) % n : j;
        const Eigen::Index plus_arc = c.compact_fiber ? j : j + 1;
        m(2 * j, minus_arc) = 1;
        m(2 * j + 1, plus_arc) = 1;
    }
    return FreeModuleMap({CoeffObj::SmoothS, arcs}, {CoeffObj::SmoothS, 2 * n},
                         std::move(m));
}

GradedQuant local_ff_quantization(const FFCovering& c)
{
    GradedQuant out;
    const FreeModuleMap map = build_ff_covering_map(c);
    const KernelCokernel kc = kernel_cokernel(map);
    out.add(1, 0, kc.kernel_rank);
    out.add(2, 0, kc.cokernel_rank);
    return out;
}

GradedQuant kunneth(const GradedQuant& a, const GradedQuant& b)
{
    GradedQuant out;
    for (const auto& [p, ca] : a.components()) {
        for (const auto& [q, cb] : b.components()) {
            if (ca.smooth_copies > 0 && cb.smooth_copies > 0)
                tensor(CoeffObj::SmoothS, CoeffObj::SmoothS);  // throws
            out.add(p + q, ca.finite_rank * cb.finite_rank,
                    ca.finite_rank * cb.smooth_copies
                        + ca.smooth_copies * cb.finite_rank);
        }
    }
    return out;
}

GradedQuant prop_kunn_model(int n)
{
    if (n < 0)
        throw DomainError("bad_parameter", "n must be >= 0");
    GradedQuant cotangent_factor;  // flat sections, one smooth copy
    cotangent_factor.add(0, 0, 1);
    GradedQuant cylinder_factor;  // one finite rank per circle fiber
    cylinder_factor.add(1, n, 0);
    return kunneth(cotangent_factor, cylinder_factor);
}

}  // namespace atq
