#ifndef RBT_PARALLEL_HPP
#define RBT_PARALLEL_HPP

namespace rbt {

/// Sets the OpenMP worker count used by all parallel kernels. Results are
/// required to be byte-identical regardless of this value; the parallel
/// kernels only ever merge exact, order-independent partials.
void set_workers(int n);
int workers();

}  // namespace rbt

#endif
