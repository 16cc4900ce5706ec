#pragma once

// Backend-free passport skeleton: the local-degree multisets over a target
// set, without the target coordinates. This is all the combinatorial checkers
// (obstruction converse, lift feasibility) need.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

struct PassportShape {
    int degree = 0;
    std::vector<std::vector<int>> entries; // one multiset of local degrees per target value

    void validate() const {
        if (degree < 1) throw MalformedPassport("passport degree must be positive");
        for (const auto& e : entries) {
            int s = std::accumulate(e.begin(), e.end(), 0);
            if (s != degree)
                throw MalformedPassport("entry local degrees do not sum to the passport degree");
            for (int d : e)
                if (d < 1) throw MalformedPassport("local degree must be positive");
        }
    }
};

} // namespace ramify
