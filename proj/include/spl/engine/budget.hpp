#pragma once

#include <cstdint>

namespace spl {

/// Meter of forward-model units.
///
/// A child created by fork() reserves units from its parent; when the child
/// is released (explicitly or on destruction) the parent is charged only
/// what the child actually used. A parent must outlive its children.
class Budget {
 public:
  explicit Budget(std::int64_t capacity);
  ~Budget();

  Budget(Budget&& other) noexcept;
  Budget& operator=(Budget&& other) noexcept;
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  std::int64_t capacity() const noexcept { return capacity_; }
  std::int64_t used() const noexcept { return used_; }
  /// Units currently lent to live children.
  std::int64_t lent() const noexcept { return lent_; }
  std::int64_t remaining() const noexcept { return capacity_ - used_ - lent_; }
  bool exhausted() const noexcept { return remaining() <= 0; }

  /// Spends `units`; throws BudgetExpired (spending nothing) if short.
  void consume(std::int64_t units = 1);

  /// Child with capacity ceil(fraction * capacity()), clipped to what is
  /// remaining. Requires 0 < fraction <= 1 (UsageError otherwise).
  Budget fork(double fraction);

  /// Settles a child with its parent. Idempotent; no-op for roots.
  void release() noexcept;

 private:
  Budget* parent_ = nullptr;
  std::int64_t capacity_ = 0;
  std::int64_t used_ = 0;
  std::int64_t lent_ = 0;
};

}  // namespace spl
