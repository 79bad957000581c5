#pragma once

#include <functional>

namespace rootsum {

// Global cap on fan-out used by parallel_for. 0 means hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, n). Work items must be independent; callers do any
// order-sensitive reduction afterwards over pre-sized output slots.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace rootsum
