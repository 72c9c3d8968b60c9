#include "dualph/dualize.hpp"

namespace dualph {

NotClosedPseudomanifold::NotClosedPseudomanifold(std::string const& message,
                                                 std::vector<CellId> cells)
    : std::runtime_error(message), cells_(std::move(cells))
{
}

std::vector<CellId> pseudomanifold_violations(FilteredComplex const& complex, int d)
{
    std::vector<std::size_t> top_cofacets(complex.size(), 0);
    for (auto const& cell : complex.cells())
        if (cell.dim == d)
            for (CellId facet : cell.boundary)
                if (facet < complex.size())
                    ++top_cofacets[facet];

    std::vector<CellId> bad;
    for (CellId id = 0; id < complex.size(); ++id) {
        auto const& cell = complex.cell(id);
        if (cell.dim > d || (cell.dim == d - 1 && top_cofacets[id] != 2))
            bad.push_back(id);
    }
    return bad;
}

FilteredComplex dual_complex(FilteredComplex const& complex, int d)
{
    auto bad = pseudomanifold_violations(complex, d);
    if (!bad.empty()) {
        std::string message = "not a closed " + std::to_string(d) + "-pseudomanifold; offending cells:";
        for (std::size_t i = 0; i < bad.size() && i < 16; ++i)
            message += " " + complex.name(bad[i]);
        if (bad.size() > 16)
            message += " ...";
        throw NotClosedPseudomanifold(message, std::move(bad));
    }

    auto const cofacets = complex.cofacets();
    std::vector<Cell> cells(complex.size());
    for (CellId id = 0; id < complex.size(); ++id) {
        auto const& cell = complex.cell(id);
        cells[id].dim = d - cell.dim;
        cells[id].value = -cell.value;
        cells[id].boundary = cofacets[id];
    }

    std::vector<std::string> names;
    if (complex.has_names()) {
        names.reserve(complex.size());
        for (auto const& name : complex.names())
            names.push_back(name + "*");
    }
    return FilteredComplex(std::move(cells), d, std::move(names));
}

FilteredComplex compactify_t(CubicalComplex const& t_complex, ExtendedValue value)
{
    if (t_complex.construction != Construction::T)
        throw std::invalid_argument("compactify_t requires a T-construction complex");

    auto const& complex = t_complex.complex;
    int const d = complex.ambient_dim();
    auto const cofacets = complex.cofacets();

    std::vector<Cell> cells = complex.cells();
    Cell glued{d, value, {}};
    for (CellId id = 0; id < complex.size(); ++id)
        if (cells[id].dim == d - 1 && cofacets[id].size() == 1)
            glued.boundary.push_back(id);
    cells.push_back(std::move(glued));
    return FilteredComplex(std::move(cells), d);
}

FilteredComplex compactify_v(CubicalComplex const& v_complex, ExtendedValue value)
{
    if (v_complex.construction != Construction::V)
        throw std::invalid_argument("compactify_v requires a V-construction complex");

    auto const& grid = v_complex.lattice;
    auto const& inner = grid.extents();
    int const d = v_complex.complex.ambient_dim();

    // Lattice coordinate y here is grid coordinate y - 1; even entries of y
    // are the interval directions.
    std::vector<std::size_t> extents;
    for (auto e : inner)
        extents.push_back(e + 2);
    CubicalLattice outer(extents);
    auto const apex = static_cast<CellId>(outer.size());

    std::vector<Cell> cells(outer.size() + 1);
    std::vector<std::size_t> x(extents.size());
    for (std::size_t id = 0; id < outer.size(); ++id) {
        auto const y = outer.coords(id);
        bool shell = false;
        for (std::size_t axis = 0; axis < y.size(); ++axis)
            shell = shell || y[axis] == 0 || y[axis] + 1 == extents[axis];

        auto& cell = cells[id];
        if (!shell) {
            for (std::size_t axis = 0; axis < y.size(); ++axis)
                x[axis] = y[axis] - 1;
            auto const& original = v_complex.complex.cell(static_cast<CellId>(grid.index(x)));
            cell.value = original.value;
        } else {
            cell.value = value;
        }

        for (std::size_t axis = 0; axis < y.size(); ++axis) {
            if (y[axis] % 2 != 0)
                continue;
            ++cell.dim;
            auto const stride = outer.stride(axis);
            if (y[axis] > 0)
                cell.boundary.push_back(static_cast<CellId>(id - stride));
            if (y[axis] + 1 < extents[axis])
                cell.boundary.push_back(static_cast<CellId>(id + stride));
        }
        if (shell && cell.dim == 1)
            cell.boundary.push_back(apex);
    }
    cells[apex] = Cell{0, value, {}};
    return FilteredComplex(std::move(cells), d);
}

} // namespace dualph
