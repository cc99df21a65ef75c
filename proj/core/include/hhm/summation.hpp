#pragma once

#include <cmath>

namespace hhm {

// Neumaier compensated summation. Order-dependent but deterministic for a
// fixed sequence of additions.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace hhm
