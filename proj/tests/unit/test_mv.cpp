#include <doctest.h>

#include "atq/mv.hpp"
#include "support/checks.hpp"

using namespace atq;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c =
        r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (int v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("coefficient tensor rule")
{
    CHECK(tensor(CoeffObj::FinC, CoeffObj::FinC) == CoeffObj::FinC);
    CHECK(tensor(CoeffObj::FinC, CoeffObj::SmoothS) == CoeffObj::SmoothS);
    CHECK(tensor(CoeffObj::SmoothS, CoeffObj::FinC) == CoeffObj::SmoothS);
    CHECK_DOMAIN_ERROR(tensor(CoeffObj::SmoothS, CoeffObj::SmoothS),
                       "smooth_tensor_undefined");
}

TEST_CASE("module map shape checks")
{
    const FreeModule dom{CoeffObj::SmoothS, 2};
    const FreeModule codom{CoeffObj::SmoothS, 3};
    CHECK_DOMAIN_ERROR(FreeModuleMap(dom, {CoeffObj::FinC, 3}, IntMatrix(3, 2)),
                       "coeff_mismatch");
    CHECK_DOMAIN_ERROR(FreeModuleMap(dom, codom, IntMatrix(2, 3)),
                       "matrix_shape_mismatch");
    CHECK_DOMAIN_ERROR(FreeModuleMap({CoeffObj::FinC, -1}, {CoeffObj::FinC, 0},
                                     IntMatrix(0, 0)),
                       "negative_rank");
}

TEST_CASE("exact rank of small matrices")
{
    CHECK(exact_rank(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(exact_rank(from_rows({{2, 4}, {1, 2}})) == 1);
    CHECK(exact_rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(exact_rank(IntMatrix(0, 5)) == 0);
    // entries that overflow any fixed-width intermediate
    IntMatrix big(2, 2);
    big(0, 0) = Integer("100000000000000000000");
    big(0, 1) = 1;
    big(1, 0) = Integer("200000000000000000000");
    big(1, 1) = 2;
    CHECK(exact_rank(big) == 1);
}

TEST_CASE("kernel and cokernel by rank counting")
{
    const FreeModule dom{CoeffObj::SmoothS, 1};
    const FreeModule codom{CoeffObj::SmoothS, 2};
    const FreeModuleMap map(dom, codom, from_rows({{1}, {1}}));
    const KernelCokernel kc = kernel_cokernel(map);
    CHECK(kc.kernel_rank == 0);
    CHECK(kc.cokernel_rank == 1);

    const FreeModule circle{CoeffObj::SmoothS, 1};
    const FreeModuleMap zero(circle, circle, from_rows({{0}}));
    CHECK(kernel_cokernel(zero).kernel_rank == 1);
    CHECK(kernel_cokernel(zero).cokernel_rank == 1);

    const FreeModule three{CoeffObj::SmoothS, 3};
    const FreeModuleMap id(
        three, three, from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(kernel_cokernel(id).kernel_rank == 0);
    CHECK(kernel_cokernel(id).cokernel_rank == 0);
}

TEST_CASE("covering map of a compact focus-focus fiber")
{
    FFCovering one;
    const FreeModuleMap m1 = build_ff_covering_map(one);
    CHECK(m1.domain().rank == 1);
    CHECK(m1.codomain().rank == 2);
    CHECK(m1.matrix()(0, 0) == 1);
    CHECK(m1.matrix()(1, 0) == 1);
    const KernelCokernel kc1 = kernel_cokernel(m1);
    CHECK(kc1.kernel_rank == 0);
    CHECK(kc1.cokernel_rank == 1);

    FFCovering two;
    two.nodes = 2;
    const FreeModuleMap m2 = build_ff_covering_map(two);
    CHECK(m2.domain().rank == 2);
    CHECK(m2.codomain().rank == 4);
    const KernelCokernel kc2 = kernel_cokernel(m2);
    CHECK(kc2.kernel_rank == 0);
    CHECK(kc2.cokernel_rank == 2);
}

TEST_CASE("covering map of a non-compact fiber")
{
    FFCovering cover;
    cover.nodes = 2;
    cover.compact_fiber = false;
    const FreeModuleMap m = build_ff_covering_map(cover);
    CHECK(m.domain().rank == 3);
    CHECK(m.codomain().rank == 4);
    const IntMatrix expected =
        from_rows({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(m.matrix().rows() == expected.rows());
    REQUIRE(m.matrix().cols() == expected.cols());
    for (Eigen::Index r = 0; r < expected.rows(); ++r)
        for (Eigen::Index c = 0; c < expected.cols(); ++c)
            CHECK(m.matrix()(r, c) == expected(r, c));
    const KernelCokernel kc = kernel_cokernel(m);
    CHECK(kc.kernel_rank == 0);
    CHECK(kc.cokernel_rank == 1);
}

TEST_CASE("covering map parameter checks")
{
    FFCovering bad;
    bad.nodes = 0;
    CHECK_DOMAIN_ERROR(build_ff_covering_map(bad), "bad_parameter");
}

TEST_CASE("local quantization of focus-focus fibers")
{
    FFCovering one;
    const GradedQuant g1 = local_ff_quantization(one);
    CHECK(g1.at(1).finite_rank == 0);
    CHECK(g1.at(1).smooth_copies == 0);
    CHECK(g1.at(2).smooth_copies == 1);

    FFCovering cover;
    cover.nodes = 3;
    GradedQuant g = local_ff_quantization(cover);
    CHECK(g.at(1).smooth_copies == 0);
    CHECK(g.at(2).finite_rank == 0);
    CHECK(g.at(2).smooth_copies == 3);

    cover.compact_fiber = false;
    g = local_ff_quantization(cover);
    CHECK(g.at(2).smooth_copies == 2);

    cover.nodes = 1;
    g = local_ff_quantization(cover);
    CHECK(g.is_zero());

    cover.nodes = 5;
    cover.compact_fiber = true;
    cover.bohr_sommerfeld = false;
    g = local_ff_quantization(cover);
    CHECK(g.is_zero());
}

TEST_CASE("kunneth convolution of graded pieces")
{
    GradedQuant a, b;
    a.add(0, 2, 0);
    b.add(1, 3, 0);
    const GradedQuant ab = kunneth(a, b);
    CHECK(ab.at(1).finite_rank == 6);
    CHECK(ab.at(1).smooth_copies == 0);

    GradedQuant smooth;
    smooth.add(0, 0, 1);
    const GradedQuant mixed = kunneth(smooth, b);
    CHECK(mixed.at(1).finite_rank == 0);
    CHECK(mixed.at(1).smooth_copies == 3);
}

TEST_CASE("kunneth refuses smooth times smooth")
{
    GradedQuant a, b;
    a.add(0, 0, 1);
    b.add(2, 0, 4);
    CHECK_DOMAIN_ERROR(kunneth(a, b), "smooth_tensor_undefined");
    // finite-by-smooth cross terms are fine even when both sides
    // contain smooth pieces in other degrees only on one side
    GradedQuant c;
    c.add(0, 2, 0);
    c.add(1, 1, 0);
    CHECK(kunneth(c, b).at(2).smooth_copies == 8);
}

TEST_CASE("model quantization of the cotangent-cylinder product")
{
    const GradedQuant zero = prop_kunn_model(0);
    CHECK(zero.is_zero());
    for (int n : {1, 2, 7, 20}) {
        const GradedQuant g = prop_kunn_model(n);
        CHECK(g.at(1).finite_rank == 0);
        CHECK(g.at(1).smooth_copies == n);
        CHECK(g.at(0).finite_rank == 0);
        CHECK(g.at(2).smooth_copies == 0);
    }
    CHECK_DOMAIN_ERROR(prop_kunn_model(-2), "bad_parameter");
}
