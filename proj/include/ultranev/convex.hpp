// Copyright 2026 the ultranev authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULTRANEV_CONVEX_HPP
#define ULTRANEV_CONVEX_HPP

#include <vector>

#include "rational.hpp"

namespace ultranev {

struct hull_point {
    long x;
    rat y;
    bool operator==(const hull_point&) const = default;
};

struct hull_slope {
    rat slope;
    long length;
    bool operator==(const hull_slope&) const = default;
};

// Lower convex hull of points with strictly increasing x.  Collinear interior
// points are dropped, so consecutive hull slopes strictly increase.
inline std::vector<hull_point> lower_hull(const std::vector<hull_point>& pts) {
    std::vector<hull_point> h;
    for (const auto& pt : pts) {
        while (h.size() >= 2) {
            const hull_point& a = h[h.size() - 2];
            const hull_point& b = h[h.size() - 1];
            // Pop b unless a->b->pt turns strictly left.
            if ((b.y - a.y) * (pt.x - b.x) >= (pt.y - b.y) * (b.x - a.x))
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    return h;
}

inline std::vector<hull_slope> hull_slopes(const std::vector<hull_point>& vertices) {
    std::vector<hull_slope> out;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        long len = vertices[i].x - vertices[i - 1].x;
        out.push_back({(vertices[i].y - vertices[i - 1].y) / len, len});
    }
    return out;
}

}  // namespace ultranev

#endif  // ULTRANEV_CONVEX_HPP
