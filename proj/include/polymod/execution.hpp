#pragma once

namespace polymod {

// Selects the OpenMP kernel or the serial reference for routines that have
// both. Both produce bitwise identical results.
enum class Execution { serial, parallel };

}  // namespace polymod
