#ifndef CAB_BUDGET_HPP
#define CAB_BUDGET_HPP

#include <chrono>
#include <stdexcept>

namespace cab {

struct budget_exceeded : std::runtime_error {
  budget_exceeded() : std::runtime_error("computation budget exceeded") {}
};

/// Scoped wall-clock budget for the current thread.  Long-running loops call
/// Budget::check(); it throws budget_exceeded past the innermost deadline.
class Budget {
public:
  explicit Budget(double seconds) : prev_(deadline()) {
    auto now = std::chrono::steady_clock::now();
    auto mine = now + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds));
    deadline() = (prev_.time_since_epoch().count() != 0 && prev_ < mine) ? prev_ : mine;
  }
  ~Budget() { deadline() = prev_; }
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  static void check() {
    auto& d = deadline();
    if (d.time_since_epoch().count() != 0 && std::chrono::steady_clock::now() > d)
      throw budget_exceeded();
  }

private:
  using TimePoint = std::chrono::steady_clock::time_point;
  static TimePoint& deadline() {
    thread_local TimePoint tp{};
    return tp;
  }
  TimePoint prev_;
};

} // namespace cab

#endif
