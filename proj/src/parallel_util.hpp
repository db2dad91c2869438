#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

namespace sparsecert::detail {

// Captures the exception thrown at the lowest iteration rank inside a
// parallel loop, so failures surface identically under any schedule.
class FirstError {
  public:
    void capture(std::uint64_t rank) noexcept {
        const std::exception_ptr p = std::current_exception();
        const std::lock_guard<std::mutex> guard(mutex_);
        if (rank < rank_) {
            rank_ = rank;
            error_ = p;
        }
    }

    void rethrow_if_any() const {
        if (error_) std::rethrow_exception(error_);
    }

  private:
    mutable std::mutex mutex_;
    std::uint64_t rank_ = UINT64_MAX;
    std::exception_ptr error_;
};

}  // namespace sparsecert::detail
