#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dualph/chain_complex.hpp"

namespace dualph {

/// Dense d-dimensional greyscale image, row-major (last axis fastest).
class ImageArray
{
public:
    ImageArray() = default;
    /// Throws std::invalid_argument on a zero extent, size mismatch, or
    /// non-finite value.
    ImageArray(std::vector<std::size_t> shape, std::vector<double> values);

    std::vector<std::size_t> const& shape() const { return shape_; }
    std::vector<double> const& values() const { return values_; }
    int dim() const { return static_cast<int>(shape_.size()); }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    friend bool operator==(ImageArray const&, ImageArray const&) = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<double> values_;
};

/// Row-major box of lattice coordinates. A coordinate is a cell whose
/// dimension is the number of odd entries; odd entries are the interval
/// directions.
class CubicalLattice
{
public:
    explicit CubicalLattice(std::vector<std::size_t> extents);

    std::vector<std::size_t> const& extents() const { return extents_; }
    std::size_t size() const { return size_; }
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }

    std::size_t index(std::span<std::size_t const> coords) const;
    std::vector<std::size_t> coords(std::size_t index) const;
    int cell_dim(std::size_t index) const;

private:
    std::vector<std::size_t> extents_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

enum class Construction { V, T };

/// A cubical complex built from an image, with the lattice that indexes it.
/// Cell id == lattice index.
struct CubicalComplex
{
    FilteredComplex complex;
    Construction construction = Construction::V;
    std::vector<std::size_t> image_shape;
    CubicalLattice lattice{{}};
};

/// Pixels as vertices; higher cells take the max of their vertices.
CubicalComplex build_v(ImageArray const& image);

/// Pixels as top cells; lower cells take the min of the pixels containing them.
CubicalComplex build_t(ImageArray const& image);

CubicalComplex build(ImageArray const& image, Construction construction);

/// Adds a one-pixel border holding pad_value on every side.
ImageArray pad(ImageArray const& image, double pad_value);

ImageArray negate(ImageArray const& image);

/// max(values) + 1; throws std::invalid_argument on an empty image.
double default_pad_value(ImageArray const& image);

} // namespace dualph
