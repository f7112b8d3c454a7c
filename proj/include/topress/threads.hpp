#pragma once

namespace topress {

/// Environment variable read by configure_threads().
inline constexpr const char* kThreadsEnv = "TOPRESS3D_NUM_THREADS";

/// Applies TOPRESS3D_NUM_THREADS (a positive integer) to the OpenMP runtime
/// and returns the thread count in effect. Unset leaves the runtime default.
/// Throws InvalidArgument for a malformed value. Returns 1 without OpenMP.
int configure_threads();

/// Threads available to parallel kernels.
int max_threads() noexcept;

}  // namespace topress
