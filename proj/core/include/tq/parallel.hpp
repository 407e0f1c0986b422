#pragma once

#include <functional>

namespace tq {

// Worker cap from TQ_THREADS; 0, unset, or unparsable means one thread per
// hardware core.
int thread_budget();

// Runs fn(0) .. fn(count - 1) across up to thread_budget() workers. Callers
// keep determinism by writing only to slot i.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace tq
