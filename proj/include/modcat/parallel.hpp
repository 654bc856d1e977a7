#pragma once

#include <cstddef>
#include <functional>

namespace modcat {

// Worker count: explicit value if positive, else MODCAT_JOBS, else hardware concurrency.
int resolve_jobs(int requested = 0);
void set_default_jobs(int jobs);

// Runs body(i) for i in [0, n). Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs = 0);

}  // namespace modcat
