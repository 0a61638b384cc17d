#pragma once

namespace hypercone {

/// 0 means "decide": HYPERCONE_THREADS if set and positive, else the OpenMP
/// default. Always returns at least 1.
int resolve_threads(int requested);

}  // namespace hypercone
