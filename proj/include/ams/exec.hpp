#pragma once

namespace ams {

// Execution policy for the enumeration kernels. Serial is the reference
// implementation; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

} // namespace ams
