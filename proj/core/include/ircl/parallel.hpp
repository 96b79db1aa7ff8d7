// parallel.hpp --- deterministic first-hit scan over an indexed candidate
// space. Workers share nothing; the reported hit is the smallest index no
// matter how many threads run, so results are stable across thread counts.
#ifndef IRCL_PARALLEL_HPP
#define IRCL_PARALLEL_HPP

#include <functional>

namespace ircl {

// min(hardware threads, IRCL_THREADS); at least 1.
int worker_count();

// Evaluates fn(i) for i in [0, count); fn returns true on a hit. Candidates
// beyond an already-found hit may be skipped. Returns the least hit index,
// or -1 when there is none.
int parallel_first_hit(int count, const std::function<bool(int)>& fn);

}  // namespace ircl

#endif
