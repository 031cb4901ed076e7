#pragma once

#include <functional>
#include <stop_token>

#include "error.hpp"

namespace gcx {

/// Cooperative cancellation plus an optional progress sink in [0, 1].
/// Long-running routines call poll() at coarse intervals.
struct Progress {
  std::stop_token stop;
  std::function<void(double)> report;

  bool stop_requested() const noexcept { return stop.stop_requested(); }

  void poll(double fraction) const {
    if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "cancelled");
    if (report) report(fraction);
  }
};

}  // namespace gcx
