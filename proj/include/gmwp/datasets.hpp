#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace gmwp {

/// Three points at the corners of the unit right triangle.
Eigen::MatrixXd triangle_points();

/// Four points at the vertices of the unit square.
Eigen::MatrixXd square_points();

/// `per_circle` points uniform in each of four circles of the given radius
/// centered at (+-spread, +-spread). Deterministic in the seed.
Eigen::MatrixXd four_circles_points(int per_circle = 250, double spread = 6.0,
                                    double circle_radius = 2.0, std::uint64_t seed = 42);

/// Synthetic planar point cloud with a handful of dense clusters plus sparse
/// background, sized like a city coordinate list. Deterministic in the seed.
Eigen::MatrixXd clustered_plane_points(int m = 1217, std::uint64_t seed = 7);

}  // namespace gmwp
