#pragma once

// Order-preserving parallel map over a batch. Results land at the input's
// index, so output never depends on the worker count.

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace datafactory {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

template <typename In, typename F>
auto parallel_map(const std::vector<In>& in, unsigned jobs, F&& fn) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(in.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  const std::size_t chunk = (in.size() + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        const auto end = std::min(in.size(), (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) out[i] = fn(in[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace datafactory
