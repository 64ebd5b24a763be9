#pragma once

#include <cstddef>
#include <functional>

namespace liquidpower {

/// Worker cap: LIQUIDPOWER_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int max_threads();

/// Runs body(index) for index in [0, count) across up to max_threads()
/// workers; rethrows the first worker exception after joining.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace liquidpower
