#include "dualph/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "dualph/transform.hpp"

namespace dualph {

double separated_sentinel(ImageArray const& image)
{
    auto const top = default_pad_value(image);
    auto const bottom = default_pad_value(negate(image));
    return std::max(top, bottom);
}

Diagram image_barcode(ImageArray const& image, Construction construction, BarcodeOptions options)
{
    auto const kind = construction == Construction::V ? DiagramKind::V : DiagramKind::T;
    return compute_barcode(build(image, construction).complex, options).with_kind(kind, false);
}

Diagram dual_image_barcode(ImageArray const& image, Construction construction, double sentinel,
                           bool reduced, BarcodeOptions options)
{
    auto const padded = pad(negate(image), -sentinel);
    auto diagram = compute_barcode(build(padded, construction).complex, options);
    if (reduced)
        diagram = reduce_diagram(diagram);
    auto const kind = construction == Construction::T ? DiagramKind::DualT : DiagramKind::DualV;
    return drop_sentinel(diagram, sentinel).with_kind(kind, reduced);
}

std::string first_mismatch(Diagram const& converted, Diagram const& direct)
{
    std::vector<Bar> only_converted;
    std::vector<Bar> only_direct;
    auto const& a = converted.bars();
    auto const& b = direct.bars();
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_converted));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_direct));
    if (!only_converted.empty() && (only_direct.empty() || only_converted.front() < only_direct.front()))
        return "only in converted: " + to_string(only_converted.front());
    if (!only_direct.empty())
        return "only in direct: " + to_string(only_direct.front());
    return {};
}

std::vector<BijectionCheck> verify_image_duality(ImageArray const& image)
{
    auto const d = image.dim();
    auto const sentinel = separated_sentinel(image);

    std::vector<BijectionCheck> checks;
    auto run = [&](std::string name, Construction source, Construction target) {
        BijectionCheck check;
        check.name = std::move(name);
        auto const original = image_barcode(image, source);
        auto const converted =
            source == Construction::V ? convert_v_to_t(original, d) : convert_t_to_v(original, d);
        auto const direct = dual_image_barcode(image, target, sentinel, true);
        check.first_mismatch = first_mismatch(converted, direct);
        check.pass = check.first_mismatch.empty();
        checks.push_back(std::move(check));
    };
    run("v-to-t", Construction::V, Construction::T);
    run("t-to-v", Construction::T, Construction::V);
    return checks;
}

} // namespace dualph
