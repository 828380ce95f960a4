// SPDX-License-Identifier: Apache-2.0
//
// ris-capacity: large-system analysis and optimization of multi-RIS MIMO links
// Copyright (C) 2026 the ris-capacity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "riscap/geometry.hpp"
#include "riscap/system_config.hpp"

#include <doctest.h>

#include <cmath>

using namespace riscap;

TEST_CASE("pathloss is normalized to one at the midpoint") {
    CHECK(pathloss_gamma(1.0, 0.35, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pathloss_gamma(3.0, 1.0, 0.0, 2.7) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pathloss is symmetric in x") {
    for (double x : {0.1, 0.25, 0.4})
        CHECK(pathloss_gamma(1.0, 0.3, x, 2.0) ==
              doctest::Approx(pathloss_gamma(1.0, 0.3, -x, 2.0)).epsilon(1e-14));
}

TEST_CASE("grid scan locates the closed-form optimum") {
    const double d = 1.0, h = 0.3, b = 2.0;
    double best_x = 0.0, best_g = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double x = -d / 2.0 + d * (i + 0.5) / n;
        const double g = pathloss_gamma(d, h, x, b);
        if (g > best_g) {
            best_g = g;
            best_x = x;
        }
    }
    // closed form: max at |x| = sqrt(d^2/4 - h^2) = 0.4
    CHECK(std::abs(std::abs(best_x) - 0.4) < d / n * 2.0);
    CHECK(pathloss_gamma(d, h, 0.4, b) >= best_g - 1e-9);
}

TEST_CASE("pathloss is unimodal with the maximum at zero for large h") {
    const double d = 1.0, h = 0.7, b = 2.0;
    double prev = pathloss_gamma(d, h, -0.49, b);
    bool rising = true;
    for (double x = -0.48; x <= 0.49; x += 0.01) {
        const double g = pathloss_gamma(d, h, x, b);
        if (rising && g < prev)
            rising = false; // peak passed
        else if (!rising)
            CHECK(g <= prev + 1e-12);
        prev = g;
    }
    CHECK(pathloss_gamma(d, h, 0.0, b) >= pathloss_gamma(d, h, 0.1, b));
    CHECK(pathloss_gamma(d, h, 0.0, b) >= pathloss_gamma(d, h, -0.1, b));
}

TEST_CASE("coincident nodes are rejected") {
    // h = 0 and x = d/2 puts the surface on top of the RX
    CHECK_THROWS_AS(pathloss_gamma(1.0, 0.0, 0.5, 2.0), std::invalid_argument);
}

TEST_CASE("scene geometry angles are specular at the midpoint") {
    SceneGeometry scene{1.0, 0.35, 0.0, 0.0};
    const auto din = scene.incoming_direction_local();
    const auto dout = scene.outgoing_direction_local();
    // equal in-plane components (geometrical optics), mirrored normal ones
    CHECK(din.x() == doctest::Approx(dout.x()).epsilon(1e-12));
    CHECK(din.y() == doctest::Approx(dout.y()).epsilon(1e-12));
    CHECK(din.z() == doctest::Approx(-dout.z()).epsilon(1e-12));
    // arrival polar angle = atan((d/2)/h)
    CHECK(std::acos(std::abs(din.z())) ==
          doctest::Approx(std::atan2(0.5, 0.35)).epsilon(1e-12));
}

TEST_CASE("lattice positions follow origin + rotation * (n a)") {
    RisGeometry g = make_ris_geometry(3, 0.5);
    SceneGeometry scene{1.0, 0.4, 0.1, 0.2};
    g.orientation = scene.ris_orientation();
    g.origin = scene.ris_center();
    const Eigen::Vector3d p = g.world_position(5); // lattice (1, 2)
    const Eigen::Vector3d expect =
        g.origin + g.orientation * Eigen::Vector3d(0.5, 1.0, 0.0);
    CHECK((p - expect).norm() < 1e-14);
    CHECK_THROWS_AS(make_ris_geometry(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_ris_geometry(2, 0.0), std::invalid_argument);
}
