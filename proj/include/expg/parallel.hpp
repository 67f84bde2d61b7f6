#pragma once

#ifdef _OPENMP
#include <omp.h>
#define EXPG_PRAGMA(x) _Pragma(#x)
#define EXPG_OMP(x) EXPG_PRAGMA(omp x)
#else
#define EXPG_OMP(x)
#endif
