#ifndef DOM_EXEC_HPP
#define DOM_EXEC_HPP

namespace dom {

// Kernel execution policy. Serial is the reference implementation; Parallel
// is the OpenMP version and must produce bit-identical results (parallel
// reductions here are all order-independent: max with index tie-break, or
// per-slot writes). Auto picks Parallel only when the instance is large
// enough to amortize thread startup.
enum class Exec { Auto, Serial, Parallel };

}  // namespace dom

#endif
