#ifndef WHITNEY_TEST_HELPERS_HPP
#define WHITNEY_TEST_HELPERS_HPP

#include <stdexcept>
#include <string>

#include "whitney/poset.hpp"

inline whitney::ElementId by_name(const whitney::Poset& P, const std::string& name) {
    for (whitney::ElementId x = 0; x < P.size(); ++x)
        if (P.name(x) == name) return x;
    throw std::runtime_error("no element named " + name);
}

#endif
