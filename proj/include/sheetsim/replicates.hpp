#pragma once

#include "sheetsim/random_stream.hpp"

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace sheetsim {

/// Runs fn(i, stream_i) for i in [0, count) and returns the results in
/// replicate order. stream_i is Stream::for_replicate(seed, i), so the output
/// does not depend on the thread count or the schedule.
template <class Fn>
auto run_replicates(std::uint64_t seed, std::int64_t count, int threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::int64_t, Stream&>> {
  using Result = std::invoke_result_t<Fn&, std::int64_t, Stream&>;
  if (count < 0) throw std::invalid_argument("run_replicates: negative replicate count");
  if (threads < 1) throw std::invalid_argument("run_replicates: threads must be >= 1");
  std::vector<Result> out(static_cast<std::size_t>(count));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      Stream stream = Stream::for_replicate(seed, static_cast<std::uint64_t>(i));
      out[static_cast<std::size_t>(i)] = fn(i, stream);
    } catch (...) {
#pragma omp critical(sheetsim_replicate_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Serial reference for run_replicates; identical output by construction.
template <class Fn>
auto run_replicates_serial(std::uint64_t seed, std::int64_t count, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::int64_t, Stream&>> {
  using Result = std::invoke_result_t<Fn&, std::int64_t, Stream&>;
  if (count < 0) throw std::invalid_argument("run_replicates_serial: negative replicate count");
  std::vector<Result> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    Stream stream = Stream::for_replicate(seed, static_cast<std::uint64_t>(i));
    out.push_back(fn(i, stream));
  }
  return out;
}

}  // namespace sheetsim
