#include "dualph/cubical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dualph {

ImageArray::ImageArray(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values))
{
    std::size_t expected = shape_.empty() ? 0 : 1;
    for (auto extent : shape_) {
        if (extent == 0)
            throw std::invalid_argument("image extents must be positive");
        expected *= extent;
    }
    if (values_.size() != expected) {
        throw std::invalid_argument("image has " + std::to_string(values_.size()) +
                                    " values, shape requires " + std::to_string(expected));
    }
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("image values must be finite");
}

CubicalLattice::CubicalLattice(std::vector<std::size_t> extents)
    : extents_(std::move(extents)), strides_(extents_.size(), 1)
{
    for (std::size_t axis = extents_.size(); axis-- > 0;) {
        strides_[axis] = size_;
        size_ *= extents_[axis];
    }
    if (extents_.empty())
        size_ = 0;
}

std::size_t CubicalLattice::index(std::span<std::size_t const> coords) const
{
    std::size_t result = 0;
    for (std::size_t axis = 0; axis < extents_.size(); ++axis)
        result += coords[axis] * strides_[axis];
    return result;
}

std::vector<std::size_t> CubicalLattice::coords(std::size_t index) const
{
    std::vector<std::size_t> result(extents_.size());
    for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
        result[axis] = index / strides_[axis];
        index %= strides_[axis];
    }
    return result;
}

int CubicalLattice::cell_dim(std::size_t index) const
{
    int dim = 0;
    for (std::size_t axis = 0; axis < extents_.size(); ++axis) {
        dim += static_cast<int>((index / strides_[axis]) % 2);
        index %= strides_[axis];
    }
    return dim;
}

namespace {

void require_nonempty(ImageArray const& image)
{
    if (image.empty())
        throw std::invalid_argument("image is empty");
}

// Cells of the full lattice with their boundaries; values are filled in by the caller.
std::vector<Cell> lattice_cells(CubicalLattice const& lattice)
{
    auto const& extents = lattice.extents();
    std::vector<Cell> cells(lattice.size());
    for (std::size_t id = 0; id < cells.size(); ++id) {
        auto const x = lattice.coords(id);
        auto& cell = cells[id];
        for (std::size_t axis = 0; axis < extents.size(); ++axis) {
            if (x[axis] % 2 == 0)
                continue;
            ++cell.dim;
            auto const stride = lattice.stride(axis);
            cell.boundary.push_back(static_cast<CellId>(id - stride));
            cell.boundary.push_back(static_cast<CellId>(id + stride));
        }
    }
    return cells;
}

std::vector<std::vector<std::size_t>> ids_by_dim(std::vector<Cell> const& cells, int d)
{
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(d) + 1);
    for (std::size_t id = 0; id < cells.size(); ++id)
        buckets[static_cast<std::size_t>(cells[id].dim)].push_back(id);
    return buckets;
}

// Row-major pixel index of lattice point x, where pixel p sits at 2p + offset.
std::size_t pixel_index(std::vector<std::size_t> const& x, std::vector<std::size_t> const& shape,
                        std::size_t offset)
{
    std::size_t index = 0;
    for (std::size_t axis = 0; axis < shape.size(); ++axis)
        index = index * shape[axis] + (x[axis] - offset) / 2;
    return index;
}

} // namespace

CubicalComplex build_v(ImageArray const& image)
{
    require_nonempty(image);
    auto const& shape = image.shape();
    std::vector<std::size_t> extents;
    for (auto n : shape)
        extents.push_back(2 * n - 1);
    CubicalLattice lattice(extents);
    auto cells = lattice_cells(lattice);
    auto const d = image.dim();
    auto const buckets = ids_by_dim(cells, d);

    for (auto id : buckets[0])
        cells[id].value = image.values()[pixel_index(lattice.coords(id), shape, 0)];
    for (int k = 1; k <= d; ++k) {
        for (auto id : buckets[static_cast<std::size_t>(k)]) {
            auto& cell = cells[id];
            cell.value = cells[cell.boundary.front()].value;
            for (CellId facet : cell.boundary)
                cell.value = std::max(cell.value, cells[facet].value);
        }
    }
    return {FilteredComplex(std::move(cells), d), Construction::V, shape, std::move(lattice)};
}

CubicalComplex build_t(ImageArray const& image)
{
    require_nonempty(image);
    auto const& shape = image.shape();
    std::vector<std::size_t> extents;
    for (auto n : shape)
        extents.push_back(2 * n + 1);
    CubicalLattice lattice(extents);
    auto cells = lattice_cells(lattice);
    auto const d = image.dim();
    auto const buckets = ids_by_dim(cells, d);

    for (auto id : buckets[static_cast<std::size_t>(d)])
        cells[id].value = image.values()[pixel_index(lattice.coords(id), shape, 1)];
    for (int k = d - 1; k >= 0; --k) {
        for (auto id : buckets[static_cast<std::size_t>(k)]) {
            auto const x = lattice.coords(id);
            bool first = true;
            ExtendedValue value;
            for (std::size_t axis = 0; axis < extents.size(); ++axis) {
                if (x[axis] % 2 != 0)
                    continue;
                auto const stride = lattice.stride(axis);
                if (x[axis] > 0) {
                    auto const& v = cells[id - stride].value;
                    value = first ? v : std::min(value, v);
                    first = false;
                }
                if (x[axis] + 1 < extents[axis]) {
                    auto const& v = cells[id + stride].value;
                    value = first ? v : std::min(value, v);
                    first = false;
                }
            }
            cells[id].value = value;
        }
    }
    return {FilteredComplex(std::move(cells), d), Construction::T, shape, std::move(lattice)};
}

CubicalComplex build(ImageArray const& image, Construction construction)
{
    return construction == Construction::V ? build_v(image) : build_t(image);
}

ImageArray pad(ImageArray const& image, double pad_value)
{
    auto const& shape = image.shape();
    std::vector<std::size_t> padded_shape;
    std::size_t total = 1;
    for (auto n : shape) {
        padded_shape.push_back(n + 2);
        total *= n + 2;
    }
    if (shape.empty())
        return image;

    std::vector<double> values(total, pad_value);
    CubicalLattice source(shape);
    CubicalLattice target(padded_shape);
    for (std::size_t i = 0; i < image.size(); ++i) {
        auto p = source.coords(i);
        for (auto& c : p)
            ++c;
        values[target.index(p)] = image.values()[i];
    }
    return ImageArray(std::move(padded_shape), std::move(values));
}

ImageArray negate(ImageArray const& image)
{
    std::vector<double> values(image.values());
    for (auto& v : values)
        v = v == 0.0 ? 0.0 : -v;
    return ImageArray(image.shape(), std::move(values));
}

double default_pad_value(ImageArray const& image)
{
    require_nonempty(image);
    return *std::max_element(image.values().begin(), image.values().end()) + 1.0;
}

} // namespace dualph
