#pragma once

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "dualph/cubical.hpp"
#include "dualph/io.hpp"
#include "dualph/morse.hpp"
#include "dualph/persistence.hpp"

namespace dualph::test {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline std::string data_path(std::string const& name)
{
    return std::string(DUALPH_TEST_DATA) + "/" + name;
}

/// The 3x3 running example.
inline ImageArray grid3x3()
{
    return ImageArray({3, 3}, {5, 1, 6, 2, 9, 4, 8, 3, 7});
}

inline FilteredComplex cube()
{
    return io::parse_complex(io::read_file(data_path("cube.cplx")), "cube.cplx");
}

inline DiscreteVectorField cube_field(FilteredComplex const& complex)
{
    return io::parse_field(io::read_file(data_path("cube.field")), complex, "cube.field");
}

inline std::vector<Bar> bars(std::vector<Bar> list)
{
    std::sort(list.begin(), list.end());
    return list;
}

/// Integer-valued image with random shape, extents in [1, max_extent].
inline ImageArray random_image(std::mt19937_64& rng, int d, std::size_t max_extent, int lo = 1,
                               int hi = 99, std::size_t min_extent = 1)
{
    std::uniform_int_distribution<std::size_t> extent(min_extent, max_extent);
    std::uniform_int_distribution<int> value(lo, hi);
    std::vector<std::size_t> shape;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        shape.push_back(extent(rng));
        total *= shape.back();
    }
    std::vector<double> values(total);
    for (auto& v : values)
        v = value(rng);
    return ImageArray(std::move(shape), std::move(values));
}

} // namespace dualph::test
