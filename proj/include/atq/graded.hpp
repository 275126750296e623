#pragma once

#include <cstdint>
#include <map>

namespace atq {

// One cohomology degree: a finite-rank piece (copies of C) and copies of
// the smooth-function space C^inf(R;C).
struct GradedComponent {
    std::int64_t finite_rank = 0;
    std::int64_t smooth_copies = 0;

    friend bool operator==(const GradedComponent& a, const GradedComponent& b)
    {
        return a.finite_rank == b.finite_rank
            && a.smooth_copies == b.smooth_copies;
    }
};

/**
 * Graded quantization result, degree -> component. Zero components are not
 * stored, so equality is canonical. Degrees outside 0..2 never occur for
 * four-dimensional bases but the container does not forbid them; Kunneth
 * products of factor quantizations may use degree 0..1 inputs.
 */
class GradedQuant {
public:
    GradedQuant() = default;

    // Accumulates into a degree; negative totals are rejected.
    void add(int degree, std::int64_t finite, std::int64_t smooth);

    GradedComponent at(int degree) const;
    const std::map<int, GradedComponent>& components() const noexcept
    {
        return components_;
    }
    bool is_zero() const noexcept { return components_.empty(); }

    // Direct sum.
    GradedQuant operator+(const GradedQuant& rhs) const;

    friend bool operator==(const GradedQuant& a, const GradedQuant& b)
    {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const GradedQuant& a, const GradedQuant& b)
    {
        return !(a == b);
    }

private:
    std::map<int, GradedComponent> components_;
};

}  // namespace atq
