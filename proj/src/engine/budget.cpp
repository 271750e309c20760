#include "spl/engine/budget.hpp"

#include <cmath>
#include <utility>

#include "spl/core/errors.hpp"

namespace spl {

Budget::Budget(std::int64_t capacity) : capacity_(capacity) {
  if (capacity < 0) throw UsageError("budget capacity must be non-negative");
}

Budget::~Budget() { release(); }

Budget::Budget(Budget&& other) noexcept
    : parent_(std::exchange(other.parent_, nullptr)),
      capacity_(other.capacity_),
      used_(other.used_),
      lent_(other.lent_) {}

Budget& Budget::operator=(Budget&& other) noexcept {
  if (this != &other) {
    release();
    parent_ = std::exchange(other.parent_, nullptr);
    capacity_ = other.capacity_;
    used_ = other.used_;
    lent_ = other.lent_;
  }
  return *this;
}

void Budget::consume(std::int64_t units) {
  if (units > remaining()) throw BudgetExpired();
  used_ += units;
}

Budget Budget::fork(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw UsageError("budget fork fraction must be in (0, 1]");
  auto want = static_cast<std::int64_t>(std::ceil(fraction * static_cast<double>(capacity_)));
  auto give = std::min(want, std::max<std::int64_t>(remaining(), 0));
  Budget child(give);
  child.parent_ = this;
  lent_ += give;
  return child;
}

void Budget::release() noexcept {
  if (!parent_) return;
  parent_->lent_ -= capacity_;
  parent_->used_ += used_ + lent_;
  parent_ = nullptr;
}

}  // namespace spl
