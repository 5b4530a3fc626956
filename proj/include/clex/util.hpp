#pragma once

#include <cstdio>
#include <cstdlib>

// Invariant check that survives release builds; used for conditions that
// indicate a broken internal assumption rather than bad user input.
#define CLEX_ASSERT(cond)                                                     \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::fprintf(stderr, "invariant failed: %s at %s:%d\n", #cond,    \
                         __FILE__, __LINE__);                                 \
            std::abort();                                                     \
        }                                                                     \
    } while (0)
