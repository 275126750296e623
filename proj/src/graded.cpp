#include "atq/graded.hpp"

#include "atq/errors.hpp"

namespace atq {

void GradedQuant::add(int degree, std::int64_t finite, std::int64_t smooth)
{
    GradedComponent& c = components_[degree];
    c.finite_rank += finite;
    c.smooth_copies += smooth;
    if (c.finite_rank < 0 || c.smooth_copies < 0)
        throw DomainError("negative_rank",
                          "degree " + std::to_string(degree)
                              + " would have a negative component");
    if (c.finite_rank == 0 && c.smooth_copies == 0)
        components_.erase(degree);
}

GradedComponent GradedQuant::at(int degree) const
{
    const auto it = components_.find(degree);
    return it == components_.end() ? GradedComponent{} : it->second;
}

GradedQuant GradedQuant::operator+(const GradedQuant& rhs) const
{
    GradedQuant out = *this;
    for (const auto& [degree, comp] : rhs.components_)
        out.add(degree, comp.finite_rank, comp.smooth_copies);
    return out;
}

}  // namespace atq
