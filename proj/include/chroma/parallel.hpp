#pragma once

namespace chroma {

/// Worker count used by library internals. Defaults to the CHROMA_THREADS
/// environment variable, or 1 when unset.
int thread_count();

/// Overrides the worker count; values below 1 are clamped to 1.
void set_thread_count(int threads);

}  // namespace chroma
