#include "dualph/transform.hpp"

namespace dualph {

namespace {

void require_dimension(Diagram const& diagram, int d)
{
    if (d < 0)
        throw InvalidDiagram("dimension d must be nonnegative");
    for (auto const& bar : diagram.bars())
        if (bar.dim > d)
            throw InvalidDiagram("bar " + to_string(bar) + " exceeds dimension d=" + std::to_string(d));
}

Bar mirrored(Bar const& bar, int d)
{
    return {d - bar.dim - 1, -bar.death, -bar.birth};
}

Diagram convert_image_diagram(Diagram const& diagram, int d, DiagramKind target)
{
    require_dimension(diagram, d);
    if (d < 1)
        throw InvalidDiagram("image conversion needs d >= 1");

    std::vector<Bar> bars;
    bars.reserve(diagram.size());
    std::size_t essential = 0;
    for (auto const& bar : diagram.bars()) {
        if (bar.dim == 0 && bar.essential() && bar.birth.is_finite()) {
            if (++essential > 1)
                throw InvalidDiagram("second essential bar " + to_string(bar) +
                                     "; an image diagram has exactly one");
            bars.push_back({d - 1, ExtendedValue::neg_infinity(), -bar.birth});
            continue;
        }
        if (!bar.finite())
            throw InvalidDiagram("unexpected bar " + to_string(bar) +
                                 "; only [p0,inf)_0 may have an infinite endpoint");
        bars.push_back(mirrored(bar, d));
    }
    if (essential != 1)
        throw InvalidDiagram("diagram has no essential 0-bar");
    return Diagram(d, std::move(bars), target, true);
}

} // namespace

Diagram dual_barcode(Diagram const& diagram, int d)
{
    require_dimension(diagram, d);
    std::vector<Bar> bars;
    bars.reserve(diagram.size());
    for (auto const& bar : diagram.bars()) {
        if (bar.birth.is_neg_inf())
            throw InvalidDiagram("bar " + to_string(bar) + " is born at -inf");
        if (bar.essential()) {
            bars.push_back({d - bar.dim, -bar.birth, ExtendedValue::infinity()});
            continue;
        }
        if (bar.dim == d)
            throw InvalidDiagram("finite bar " + to_string(bar) + " in top dimension has no dual");
        bars.push_back(mirrored(bar, d));
    }
    return Diagram(d, std::move(bars), DiagramKind::Abstract, diagram.reduced());
}

Diagram convert_v_to_t(Diagram const& diagram, int d)
{
    return convert_image_diagram(diagram, d, DiagramKind::DualT);
}

Diagram convert_t_to_v(Diagram const& diagram, int d)
{
    return convert_image_diagram(diagram, d, DiagramKind::DualV);
}

Diagram invert_conversion(Diagram const& diagram, int d)
{
    require_dimension(diagram, d);
    if (d < 1)
        throw InvalidDiagram("image conversion needs d >= 1");

    std::vector<Bar> bars;
    bars.reserve(diagram.size());
    std::size_t unbounded = 0;
    for (auto const& bar : diagram.bars()) {
        if (bar.dim == d - 1 && bar.birth.is_neg_inf() && bar.death.is_finite()) {
            if (++unbounded > 1)
                throw InvalidDiagram("second bar " + to_string(bar) + " born at -inf");
            bars.push_back({0, -bar.death, ExtendedValue::infinity()});
            continue;
        }
        if (!bar.finite())
            throw InvalidDiagram("unexpected bar " + to_string(bar) + " in a converted diagram");
        bars.push_back(mirrored(bar, d));
    }
    if (unbounded != 1)
        throw InvalidDiagram("converted diagram has no bar [-inf,q)_" + std::to_string(d - 1));

    DiagramKind kind = DiagramKind::Abstract;
    if (diagram.kind() == DiagramKind::DualT)
        kind = DiagramKind::V;
    else if (diagram.kind() == DiagramKind::DualV)
        kind = DiagramKind::T;
    return Diagram(d, std::move(bars), kind, false);
}

} // namespace dualph
