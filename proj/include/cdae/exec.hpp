#pragma once

namespace cdae {

/// Execution mode for the data-parallel batch kernels.
///
/// Every parallel kernel has a fixed reduction tree (per-sample work grouped
/// into fixed-size chunks, chunk results combined in ascending order), so
/// `parallel` produces bit-identical results to `serial` at any thread
/// count. The serial path is kept as the reference the tests compare
/// against and the benchmark measures.
enum class Exec { serial, parallel };

/// Set the OpenMP thread count; 0 keeps the runtime default (all cores).
void set_thread_count(int n);

/// Threads the parallel kernels will use (1 when built without OpenMP).
int thread_count();

}  // namespace cdae
