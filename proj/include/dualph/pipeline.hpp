#pragma once

#include <string>

#include "dualph/cubical.hpp"
#include "dualph/persistence.hpp"

namespace dualph {

/// Sentinel that is strictly above every |value| of the image, so that +N
/// and -N cannot collide with data on either side of the negation. Equals
/// default_pad_value() for nonnegative images.
double separated_sentinel(ImageArray const& image);

/// Barcode of the chosen construction on the image, tagged V or T.
Diagram image_barcode(ImageArray const& image, Construction construction,
                      BarcodeOptions options = {});

/// Barcode of (-I^N) under the chosen construction with the sentinel
/// relabelled to infinity, optionally reduced. Tagged dual-T or dual-V.
Diagram dual_image_barcode(ImageArray const& image, Construction construction, double sentinel,
                           bool reduced, BarcodeOptions options = {});

/// Outcome of comparing a converted diagram with a directly computed one.
struct BijectionCheck
{
    std::string name;
    bool pass = false;
    std::string first_mismatch; ///< e.g. "only in converted: [-5,-2)_1"
};

/// First bar in the symmetric difference of two diagrams, or empty.
std::string first_mismatch(Diagram const& converted, Diagram const& direct);

/// Both image bijections: Dgm(I_V) -> reduced Dgm((-I)_T) and
/// Dgm(I_T) -> reduced Dgm((-I)_V), each converted and computed directly.
std::vector<BijectionCheck> verify_image_duality(ImageArray const& image);

} // namespace dualph
