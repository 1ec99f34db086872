#pragma once

namespace kslogos {

/// Selects between the OpenMP kernel and its serial reference.
///
/// Both paths return identical results; the serial path exists for testing
/// and for reproducible witnesses.
enum class ExecutionPolicy { sequential, parallel };

}  // namespace kslogos
