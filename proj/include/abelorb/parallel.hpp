#pragma once

#include <exception>
#include <mutex>

namespace abelorb {

/// Carries the first exception out of an OpenMP region; exceptions must not
/// cross the region boundary.
class ExceptionSlot {
public:
    template <typename F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

/// Number of threads an OpenMP region would use, 1 without OpenMP.
int max_threads();

}  // namespace abelorb
