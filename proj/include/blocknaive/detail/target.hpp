#pragma once

// Target-region macros. Code between BEGIN/END is compiled for the named
// instruction set regardless of global compiler flags, so one binary can carry
// every kernel and pick at run time.

#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
#define BLOCKNAIVE_X86 1
#include <immintrin.h>
#else
#define BLOCKNAIVE_X86 0
#endif

#if BLOCKNAIVE_X86
#if defined(__clang__)
#define BLOCKNAIVE_BEGIN_SSE2 \
    _Pragma("clang attribute push(__attribute__((target(\"sse2,popcnt\"))), apply_to = function)")
#define BLOCKNAIVE_BEGIN_AVX2 \
    _Pragma("clang attribute push(__attribute__((target(\"avx2,popcnt\"))), apply_to = function)")
#define BLOCKNAIVE_END_TARGET _Pragma("clang attribute pop")
#else
#define BLOCKNAIVE_BEGIN_SSE2 _Pragma("GCC push_options") _Pragma("GCC target(\"sse2,popcnt\")")
#define BLOCKNAIVE_BEGIN_AVX2 _Pragma("GCC push_options") _Pragma("GCC target(\"avx2,popcnt\")")
#define BLOCKNAIVE_END_TARGET _Pragma("GCC pop_options")
#endif
#endif
