#pragma once

namespace mes {

// Worker-thread cap for the parallel kernels.  MES_THREADS in the
// environment overrides the OpenMP default; builds without OpenMP always
// report 1.
int thread_count();

} // namespace mes
