#ifndef SPREADCODE_OP_COUNTER_HPP
#define SPREADCODE_OP_COUNTER_HPP

#include <cstdint>

namespace spreadcode {

/// Field-operation tallies. Base counts cover F_q arithmetic done by matrix
/// code over the prime field; extension counts cover F_{q^k} arithmetic.
/// Additions are not tallied.
struct OpCounts {
  std::uint64_t base_mul = 0;
  std::uint64_t base_inv = 0;
  std::uint64_t ext_mul = 0;
  std::uint64_t ext_inv = 0;
  std::uint64_t ext_frobenius = 0;

  std::uint64_t base_ops() const { return base_mul + base_inv; }
  std::uint64_t ext_ops() const { return ext_mul + ext_inv + ext_frobenius; }

  OpCounts operator-(const OpCounts& o) const {
    return {base_mul - o.base_mul, base_inv - o.base_inv, ext_mul - o.ext_mul,
            ext_inv - o.ext_inv, ext_frobenius - o.ext_frobenius};
  }
};

/// The counter is thread-local: concurrent decodes on different threads are
/// attributed independently.
inline OpCounts& thread_op_counts() {
  thread_local OpCounts counts;
  return counts;
}

/// Measures the operations performed on this thread during its lifetime.
class ScopedOpCounter {
 public:
  ScopedOpCounter() : start_(thread_op_counts()) {}
  OpCounts elapsed() const { return thread_op_counts() - start_; }

 private:
  OpCounts start_;
};

}  // namespace spreadcode

#endif  // SPREADCODE_OP_COUNTER_HPP
