#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace lcrp::detail {
namespace {

struct PlanCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, bool>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, bool forward) {
    std::lock_guard lock(mutex);
    auto it = plans.find({n, forward});
    if (it != plans.end()) return it->second;
    // Planning needs scratch arrays; FFTW_ESTIMATE does not touch them.
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                      forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(std::make_pair(n, forward), plan);
    return plan;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void dft_inplace(std::span<std::complex<double>> data, bool forward) {
  fftw_plan plan = cache().get(data.size(), forward);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace lcrp::detail
