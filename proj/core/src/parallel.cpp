#include "mfunc/parallel.hpp"

namespace mfunc {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned count) noexcept { g_threads = count == 0 ? 1u : count; }

unsigned thread_count() noexcept { return g_threads; }

}  // namespace mfunc
