#pragma once

#include "dualph/persistence.hpp"

namespace dualph {

/// Barcode of the dual filtered complex:
/// [p,q)_k -> [-q,-p)_{d-k-1} and [p,inf)_k -> [-p,inf)_{d-k}.
///
/// Throws InvalidDiagram for bars of dimension > d or born at -inf.
Diagram dual_barcode(Diagram const& diagram, int d);

/// Dgm(I_V) -> reduced Dgm((-I^inf)_T).
///
/// Finite bars map as in dual_barcode; the single essential bar
/// [p0,inf)_0 becomes [-inf,-p0)_{d-1}. Any other essential or infinite
/// endpoint is rejected.
Diagram convert_v_to_t(Diagram const& diagram, int d);

/// Dgm(I_T) -> reduced Dgm((-I^inf)_V), same rule as convert_v_to_t.
Diagram convert_t_to_v(Diagram const& diagram, int d);

/// Inverse of both conversions. Expects exactly one bar [-inf,q)_{d-1}
/// and otherwise finite bars. A dual-T input yields a V diagram, dual-V
/// yields T; any other tag is kept as abstract.
Diagram invert_conversion(Diagram const& diagram, int d);

} // namespace dualph
