#pragma once

// Helpers shared by the representation translation units.

#include "reflie/representation.hpp"

namespace reflie {
namespace detail {

inline std::vector<std::pair<std::string, Mat<Cyc>>> images_at_generators(
    const GroupPtr& group, const std::function<Mat<Cyc>(const Monomial&)>& eval) {
    std::vector<std::pair<std::string, Mat<Cyc>>> out;
    for (const auto& [name, g] : group->generators()) out.emplace_back(name, eval(g));
    return out;
}

}  // namespace detail
}  // namespace reflie
