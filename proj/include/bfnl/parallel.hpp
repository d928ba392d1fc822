#pragma once

namespace bfnl {

// Worker count for the OpenMP kernels.  0 leaves the runtime default.
void set_worker_count(int n);
int worker_count();

}  // namespace bfnl
